#pragma once

// Boundary of the complex hyperbolic plane in the Siegel model: points are
// Heisenberg coordinates (z, t) or the point at infinity. Lifts live in C^{2,1}
// with the Hermitian form <z, w> = z1 conj(w3) + z2 conj(w2) + z3 conj(w1).

#include <array>
#include <complex>
#include <string>
#include <utility>

#include <Eigen/Core>

namespace pu21 {

using cplx = std::complex<double>;

/// Distinctness tolerance on Heisenberg coordinates.
inline constexpr double kDistinctTol = 1e-12;
/// |<v,v>| / |v|^2 above this makes a vector non-null.
inline constexpr double kNullTol = 1e-9;

class BoundaryPoint {
 public:
  static BoundaryPoint finite(cplx z, double t) { return BoundaryPoint(z, t, false); }
  static BoundaryPoint infinity() { return BoundaryPoint({}, 0.0, true); }

  bool is_infinity() const noexcept { return infinite_; }
  /// Only meaningful for finite points.
  cplx z() const noexcept { return z_; }
  double t() const noexcept { return t_; }

  /// Exact on the infinity tag, kDistinctTol on coordinates.
  bool same_as(const BoundaryPoint& other, double tol = kDistinctTol) const noexcept;

  std::string to_string() const;

 private:
  BoundaryPoint(cplx z, double t, bool inf) : z_(z), t_(t), infinite_(inf) {}

  cplx z_;
  double t_;
  bool infinite_;
};

class Lift {
 public:
  /// Throws DomainViolation for the zero vector.
  explicit Lift(const Eigen::Vector3cd& v);

  const Eigen::Vector3cd& vector() const noexcept { return v_; }
  cplx operator[](int i) const { return v_[i]; }

  Lift scaled(cplx c) const { return Lift(c * v_); }

 private:
  Eigen::Vector3cd v_;
};

using Triple = std::array<BoundaryPoint, 3>;
using Quadruple = std::array<BoundaryPoint, 4>;

/// Throws NotDistinct naming the first coinciding pair.
void require_distinct(const BoundaryPoint* points, std::size_t count);
inline void require_distinct(const Triple& tr) { require_distinct(tr.data(), tr.size()); }
inline void require_distinct(const Quadruple& q) { require_distinct(q.data(), q.size()); }

struct CrossRatioTriple {
  cplx x1;
  cplx x2;
  cplx x3;
};

/// Standard lift: (z,t) -> [-|z|^2 + it, sqrt(2) z, 1], infinity -> [1,0,0].
Lift lift(const BoundaryPoint& p);

/// Inverse of lift up to projective scale. Throws NonNullVector.
BoundaryPoint project(const Lift& v);

/// The signature (2,1) Hermitian form.
cplx herm(const Lift& v, const Lift& w);

/// Cartan's angular invariant arg(-<p1,p2><p2,p3><p3,p1>), in [-pi/2, pi/2].
/// Throws DegenerateTriple when two points coincide.
double cartan(const Triple& tr);
double cartan(const Lift& p1, const Lift& p2, const Lift& p3);

/// X(p1,p2,p3,p4) = <p4,p2><p3,p1> / (<p4,p1><p3,p2>). Throws UndefinedCrossRatio.
cplx cross_ratio(const Quadruple& q);
cplx cross_ratio(const Lift& p1, const Lift& p2, const Lift& p3, const Lift& p4);

/// X1 = X(p1,p2,p3,p4), X2 = X(p1,p3,p2,p4), X3 = X(p2,p3,p1,p4).
CrossRatioTriple cross_ratio_triple(const Quadruple& q);

/// Absolute residuals of |X2| = |X1||X3| and
/// |X1+X2-1|^2 = 2 Re(X1 (conj(X2) + conj(X1) X3)).
std::pair<double, double> xratio_identity_residuals(const CrossRatioTriple& c);

}  // namespace pu21
