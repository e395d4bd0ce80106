#include "pu21/contact.hpp"

#include <cmath>

#include "pu21/group_models.hpp"
#include "pu21/models.hpp"

namespace pu21 {

double volume_identity_residual(const Coords& p, double rel_step) {
  const OneForm omega = omega_star();
  const TwoForm d_omega = exterior_d(omega, rel_step);
  const Eigen::Vector3d dx(1, 0, 0), dy(0, 1, 0), dt(0, 0, 1);
  const double rho = p[0] * p[0] + p[1] * p[1];
  return std::abs(wedge(omega, d_omega, p, dt, dx, dy) - 1.0 / (rho * rho));
}

Eigen::Matrix3d unit_tangent_metric(const Eigen::Vector3d& q) {
  const double xi = q[0];
  const Eigen::Vector3d vertical(0, -1.0 / (2 * xi), 1.0);
  Eigen::Matrix3d g = vertical * vertical.transpose();
  g(0, 0) += 1.0 / (4 * xi * xi);
  g(1, 1) += 1.0 / (4 * xi * xi);
  return g;
}

double koranyi_isometry_residual(const Coords& p, double rel_step) {
  auto chart = [](const Coords& q) -> Eigen::Vector3d {
    const TangentBundlePoint k = koranyi(HStarElement(cplx(q[0], q[1]), q[2]));
    return {k.zeta().real(), k.zeta().imag(), k.phi()};
  };
  const Eigen::Vector3d center = chart(p);
  // Angle differences are unwrapped against the centre value.
  const fd::VectorFn unwrapped = [&](const Coords& q) -> Eigen::VectorXd {
    Eigen::Vector3d v = chart(q);
    v[2] = center[2] + wrap_angle(v[2] - center[2]);
    return v;
  };
  const Eigen::MatrixXd jac = fd::jacobian(unwrapped, p, rel_step);
  const Eigen::MatrixXd pulled = jac.transpose() * unit_tangent_metric(center) * jac;
  return (pulled - metric_eval(Model::hstar, p)).cwiseAbs().maxCoeff();
}

}  // namespace pu21
