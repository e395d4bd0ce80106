#pragma once

// Isometries of the complex hyperbolic plane acting on its boundary, the
// elementary generators, and normalisation of quadruples.

#include <utility>

#include <Eigen/Core>

#include "pu21/boundary.hpp"

namespace pu21 {

/// The Hermitian form's matrix (anti-diagonal ones).
Eigen::Matrix3cd hermitian_matrix();

/// Element of U(2,1) taken modulo scalars; acts projectively on lifts.
class GroupElement {
 public:
  GroupElement() : m_(Eigen::Matrix3cd::Identity()) {}
  explicit GroupElement(const Eigen::Matrix3cd& m) : m_(m) {}

  const Eigen::Matrix3cd& matrix() const noexcept { return m_; }

  GroupElement operator*(const GroupElement& other) const { return GroupElement(m_ * other.m_); }
  GroupElement inverse() const;

 private:
  Eigen::Matrix3cd m_;
};

BoundaryPoint apply(const GroupElement& g, const BoundaryPoint& p);
Lift apply(const GroupElement& g, const Lift& v);

/// Left Heisenberg translation by (w, s); fixes infinity.
GroupElement heis_translation(cplx w, double s);

/// (z,t) -> (lambda z, |lambda|^2 t). Throws ZeroScale for lambda = 0.
GroupElement dilation_rotation(cplx lambda);

/// The matrix of the form itself: swaps 0 and infinity, an involution.
GroupElement inversion();

/// max |(m^* H m - H)_{ij}|.
double verify_form(const GroupElement& g);

/// p1 = (1, tan a), p2 = infinity, p3 = (0,0), p4 = (z,t) with
/// a in (-pi/2, pi/2), z != 0 and t/|z|^2 != tan a.
class NormalizedQuadruple {
 public:
  /// Throws DomainViolation when a side condition fails.
  NormalizedQuadruple(double a, cplx z, double t);

  double a() const noexcept { return a_; }
  cplx z() const noexcept { return z_; }
  double t() const noexcept { return t_; }

  Quadruple quadruple() const;

 private:
  double a_;
  cplx z_;
  double t_;
};

/// Sends q to normal form. Returns the parameters and the composite g with
/// g(p1) = (1, tan a), g(p2) = inf, g(p3) = 0, g(p4) = (z, t).
/// Throws CCircle123, CCircle234 or SameOrbit outside the domain.
std::pair<NormalizedQuadruple, GroupElement> normalize_quadruple(const Quadruple& q);

}  // namespace pu21
