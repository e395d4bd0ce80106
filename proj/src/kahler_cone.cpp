#include "pu21/kahler_cone.hpp"

#include "pu21/error.hpp"
#include "pu21/models.hpp"

namespace pu21 {

namespace {

void require_cone_point(const Coords& p) {
  if (p.size() != 4 || !(p[3] > 0)) throw Error(ErrorKind::DomainViolation, "expected a cone point (x, y, t, r)");
}

// Pulls an H* one-form back to the cone, coefficients unchanged.
OneForm horizontal(const OneForm& f) {
  return OneForm(f.name(), [f](const Coords& p) -> Eigen::VectorXd {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(4);
    out.head<3>() = f(p.head<3>());
    return out;
  });
}

OneForm dr() {
  return OneForm("dr", [](const Coords&) -> Eigen::VectorXd { return Eigen::Vector4d(0, 0, 0, 1); });
}

}  // namespace

Eigen::VectorXd complex_structure_apply(const Coords& p, const Eigen::VectorXd& v) {
  require_cone_point(p);
  const Coords q = p.head<3>();
  const Eigen::Vector3d w = v.head<3>();
  const double a = phi_star()(q, w), b = psi_star()(q, w), c = omega_star()(q, w), d = v[3] / p[3];

  const auto frame = named_frame(Model::hstar);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(4);
  out.head<3>() = a * frame[1](q) - b * frame[0](q) + d * frame[2](q);
  out[3] = -c * p[3];
  return out;
}

TwoForm cone_fundamental_form() {
  const OneForm phi = horizontal(phi_star()), psi = horizontal(psi_star()), omega = horizontal(omega_star());
  const TwoForm radial = wedge(dr(), omega), flat = wedge(phi, psi);
  return TwoForm("Omega_r", [radial, flat](const Coords& p) -> Eigen::MatrixXd {
    return p[3] * radial(p) + p[3] * p[3] * flat(p);
  });
}

OneForm cone_potential_form() {
  return horizontal(omega_star()).scaled([](const Coords& p) { return 0.5 * p[3] * p[3]; }, "r^2 omega*/2");
}

double fundamental_form_residual(const Coords& p, const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  const Eigen::VectorXd ju = complex_structure_apply(p, u);
  return std::abs(cone_fundamental_form()(p, u, v) - ju.dot(metric_eval(Model::cone, p) * v));
}

}  // namespace pu21
