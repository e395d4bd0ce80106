#pragma once

// CR geometry of the configuration maps: complexified tangent vectors in real
// charts, pushforward by finite-difference Jacobians, the CR factor of G,
// Levi forms and the contact form tau on the variety.
//
// Real charts:
//   cone     (x, y, t, r)            complex pair z = x + iy
//   variety  (u1, v1, u2, v2, a)     complex pairs w1, w2
//   b1       (Re zeta, Im zeta, Re w, Im w)

#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "pu21/config_maps.hpp"

namespace pu21 {

struct ChartLayout {
  int dimension;
  /// (real, imaginary) coordinate indices of each complex coordinate.
  std::vector<std::pair<int, int>> complex_pairs;

  static ChartLayout cone();
  static ChartLayout variety();
  static ChartLayout b1();
};

/// A complexified tangent vector: complex components on the real coordinate
/// basis. For a pair (u, v) with w = u + iv the d/dw coefficient is
/// V^u + i V^v and the d/d(conj w) coefficient is V^u - i V^v.
class ComplexTangent {
 public:
  ComplexTangent(ChartLayout layout, Eigen::VectorXd base, Eigen::VectorXcd components);

  /// Vector sum_j c_j d/dw_j over the layout's complex pairs.
  static ComplexTangent holomorphic(ChartLayout layout, Eigen::VectorXd base, const Eigen::VectorXcd& coeffs);

  const ChartLayout& layout() const noexcept { return layout_; }
  const Eigen::VectorXd& base() const noexcept { return base_; }
  const Eigen::VectorXcd& components() const noexcept { return components_; }

  /// (1,0) coefficients, one per complex pair.
  Eigen::VectorXcd holomorphic_part() const;
  /// (0,1) coefficients, one per complex pair.
  Eigen::VectorXcd antiholomorphic_part() const;
  /// Components along the coordinates not in any complex pair.
  Eigen::VectorXcd real_part() const;

 private:
  ChartLayout layout_;
  Eigen::VectorXd base_;
  Eigen::VectorXcd components_;
};

struct RealMap {
  ChartLayout source;
  ChartLayout target;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> fn;
};

inline constexpr double kPushforwardStep = 1e-6;

/// Pushforward through the real Jacobian at the base point.
ComplexTangent pushforward(const RealMap& map, const ComplexTangent& v, double rel_step = kPushforwardStep);

// Chart realisations of the maps.
Eigen::VectorXd cone_coords(const ConePointPrime& c);
Eigen::VectorXd variety_coords(const VarietyPoint& v);
Eigen::VectorXd b1_coords(const B1Point& p);
RealMap g_chart_map();
RealMap f_chart_map();

/// Z = z d/dz + i|z|^2 d/dt at a cone point.
ComplexTangent bold_Z(const ConePointPrime& c);
/// W = (T + i r d/dr)/2 at a cone point.
ComplexTangent bold_W(const ConePointPrime& c);

/// alpha = conj(w2) - e^{2ia} conj(w1) - 1, beta = -(conj(w1) - e^{-2ia} conj(w2) - 1).
std::pair<cplx, cplx> variety_alpha_beta(const VarietyPoint& v);
/// Z = alpha d/dw1 + beta d/dw2, tangent to the variety.
ComplexTangent variety_tangent(const VarietyPoint& v);

/// k = -w1 (w1 + w2 - 1)/((1 + e^{2ia}) conj(w1)).
cplx cr_factor(const VarietyPoint& v);

/// |G_*(Z) - k Z| at v, over all complex components.
double cr_equivalence_residual(const VarietyPoint& v, double rel_step = kPushforwardStep);

struct LeviValue {
  double closed_form;
  double finite_difference;
};

/// Levi form of rho*(z1, z2) = 2 Re z1/|z2|^2 + 1 on Z = (-|z2|^2, z2).
/// Closed form 2 + 2 Re z1/|z2|^2, which is 1 on rho* = 0.
LeviValue levi_rho_star(cplx z1, cplx z2, double rel_step = 1e-4);

/// Levi form of the variety function on Z. Closed form 4 cos^2 a.
LeviValue levi_variety(const VarietyPoint& v, double rel_step = 1e-4);

/// |alpha - e^{2ia} beta|^2, the algebraic form of the variety Levi value.
double levi_variety_algebraic(const VarietyPoint& v);

/// tau = -beta2 du1 - beta1 dv1 + alpha2 du2 + alpha1 dv2 applied to a
/// (du1, dv1, du2, dv2) direction.
double tau_eval(const VarietyPoint& v, const Eigen::Vector4d& direction);

struct TauDirections {
  Eigen::Vector4d real_z;
  Eigen::Vector4d imag_z;
  Eigen::Vector4d transverse;
};
/// Real and imaginary parts of Z, and (-beta2, -beta1, alpha2, alpha1).
TauDirections tau_directions(const VarietyPoint& v);

}  // namespace pu21
