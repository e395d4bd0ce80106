#pragma once

// Vector fields and differential forms given by closed-form coefficient
// functions in a coordinate chart, plus the operations that differentiate
// them numerically (Lie bracket, exterior derivative).

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "pu21/finite_diff.hpp"

namespace pu21 {

using Coords = Eigen::VectorXd;

inline constexpr double kDefaultFdStep = 1e-5;

/// Chart point (x, y, t) on H*, with r for points of the cone.
class ChartPoint {
 public:
  /// Throws DomainViolation when x^2 + y^2 == 0 or r <= 0.
  ChartPoint(double x, double y, double t, std::optional<double> r = std::nullopt);

  static ChartPoint from_coords(const Coords& c);

  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }
  double t() const noexcept { return t_; }
  std::optional<double> r() const noexcept { return r_; }

  Coords coords() const;

 private:
  double x_, y_, t_;
  std::optional<double> r_;
};

class VectorField {
 public:
  using Fn = std::function<Eigen::VectorXd(const Coords&)>;

  VectorField(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}

  const std::string& name() const noexcept { return name_; }
  Eigen::VectorXd operator()(const Coords& p) const { return fn_(p); }

  /// Pointwise combination sum_i c_i V_i with constant coefficients.
  static VectorField combination(const std::vector<VectorField>& fields, const Eigen::VectorXd& coeffs);

 private:
  std::string name_;
  Fn fn_;
};

class OneForm {
 public:
  using Fn = std::function<Eigen::VectorXd(const Coords&)>;

  OneForm(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}

  const std::string& name() const noexcept { return name_; }
  /// Covector in the coordinate cobasis.
  Eigen::VectorXd operator()(const Coords& p) const { return fn_(p); }
  double operator()(const Coords& p, const Eigen::VectorXd& v) const { return fn_(p).dot(v); }

  OneForm scaled(std::function<double(const Coords&)> f, std::string name) const;

 private:
  std::string name_;
  Fn fn_;
};

class TwoForm {
 public:
  using Fn = std::function<Eigen::MatrixXd(const Coords&)>;

  TwoForm(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}

  const std::string& name() const noexcept { return name_; }
  /// Antisymmetric coefficient matrix: beta(u, v) = u^T B v.
  Eigen::MatrixXd operator()(const Coords& p) const { return fn_(p); }
  double operator()(const Coords& p, const Eigen::VectorXd& u, const Eigen::VectorXd& v) const {
    return u.dot(fn_(p) * v);
  }

  TwoForm operator+(const TwoForm& other) const;

 private:
  std::string name_;
  Fn fn_;
};

/// (a ^ b)(u, v) = a(u) b(v) - a(v) b(u).
TwoForm wedge(const OneForm& a, const OneForm& b);

/// (a ^ B)(u, v, w) = a(u) B(v,w) - a(v) B(u,w) + a(w) B(u,v).
double wedge(const OneForm& a, const TwoForm& b, const Coords& p, const Eigen::VectorXd& u, const Eigen::VectorXd& v,
             const Eigen::VectorXd& w);

/// [U,V]^k = U(V^k) - V(U^k), derivatives by central differences.
VectorField lie_bracket(const VectorField& u, const VectorField& v, double rel_step = kDefaultFdStep);

/// Coordinate exterior derivative: (d eta)_{ij} = d_i eta_j - d_j eta_i.
TwoForm exterior_d(const OneForm& eta, double rel_step = kDefaultFdStep);

/// d eta(U,V) = U(eta(V)) - V(eta(U)) - eta([U,V]).
double exterior_d(const OneForm& eta, const VectorField& u, const VectorField& v, const Coords& p,
                  double rel_step = kDefaultFdStep);

/// d B(U,V,W) = U B(V,W) - V B(U,W) + W B(U,V) - B([U,V],W) + B([U,W],V) - B([V,W],U).
double exterior_d(const TwoForm& beta, const VectorField& u, const VectorField& v, const VectorField& w,
                  const Coords& p, double rel_step = kDefaultFdStep);

}  // namespace pu21
