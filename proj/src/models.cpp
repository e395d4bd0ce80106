#include "pu21/models.hpp"

#include <cmath>
#include <numbers>

namespace pu21 {

namespace {

double rho2(const Coords& p) { return p[0] * p[0] + p[1] * p[1]; }

Eigen::VectorXd vec(std::initializer_list<double> v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

Eigen::Matrix3d hstar_metric(const Coords& p) {
  const double x = p[0], y = p[1], r2 = rho2(p);
  const Eigen::Vector3d d_mod2(2 * x, 2 * y, 0);
  const Eigen::Vector3d dt(0, 0, 1);
  const Eigen::Vector3d contact(-2 * y, 2 * x, 1);
  return (d_mod2 * d_mod2.transpose() + dt * dt.transpose() + contact * contact.transpose()) / (4 * r2 * r2);
}

// Extends a field on H* to the cone, scaled by 1/r, with no d_r component.
VectorField cone_lift(const VectorField& f, std::string name) {
  return VectorField(std::move(name), [f](const Coords& p) -> Eigen::VectorXd {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(4);
    out.head<3>() = f(p.head<3>()) / p[3];
    return out;
  });
}

OneForm cone_lift(const OneForm& f, std::string name) {
  return OneForm(std::move(name), [f](const Coords& p) -> Eigen::VectorXd {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(4);
    out.head<3>() = f(p.head<3>()) * p[3];
    return out;
  });
}

std::vector<VectorField> hstar_frame() {
  return {
      VectorField("X", [](const Coords& p) { return vec({p[0], p[1], 0.0}); }),
      VectorField("Y", [](const Coords& p) { return vec({-p[1], p[0], -2 * rho2(p)}); }),
      VectorField("T", [](const Coords& p) { return vec({-p[1], p[0], 0.0}); }),
  };
}

}  // namespace

std::string_view to_string(Model m) {
  switch (m) {
    case Model::hstar: return "hstar";
    case Model::cone: return "cone";
    case Model::heisenberg: return "heisenberg";
  }
  return "?";
}

int dimension(Model m) { return m == Model::cone ? 4 : 3; }

std::vector<std::string> frame_names(Model m) {
  switch (m) {
    case Model::hstar: return {"X", "Y", "T"};
    case Model::cone: return {"X_r", "Y_r", "T_r", "S_r"};
    case Model::heisenberg: return {"X", "Y", "T"};
  }
  return {};
}

OneForm phi_star() {
  return OneForm("phi*", [](const Coords& p) { return vec({p[0] / rho2(p), p[1] / rho2(p), 0.0}); });
}

OneForm psi_star() {
  return OneForm("psi*", [](const Coords& p) { return vec({0.0, 0.0, -1.0 / (2 * rho2(p))}); });
}

OneForm omega_star() {
  return OneForm("omega*", [](const Coords& p) {
    const double r2 = rho2(p);
    return vec({-p[1] / r2, p[0] / r2, 1.0 / (2 * r2)});
  });
}

std::vector<VectorField> heisenberg_generators() {
  return {
      VectorField("X", [](const Coords& p) { return vec({1.0, 0.0, 2 * p[1]}); }),
      VectorField("Y", [](const Coords& p) { return vec({0.0, 1.0, -2 * p[0]}); }),
      VectorField("T", [](const Coords&) { return vec({0.0, 0.0, 1.0}); }),
  };
}

Eigen::MatrixXd heisenberg_unit_generator_metric(const Coords& p) {
  const Eigen::Vector3d contact(-2 * p[1], 2 * p[0], 1);
  Eigen::Matrix3d g = Eigen::Matrix3d::Zero();
  g(0, 0) = g(1, 1) = 1.0;
  return g + contact * contact.transpose();
}

std::vector<VectorField> named_frame(Model m) {
  switch (m) {
    case Model::hstar: return hstar_frame();
    case Model::cone: {
      const auto base = hstar_frame();
      return {cone_lift(base[0], "X_r"), cone_lift(base[1], "Y_r"), cone_lift(base[2], "T_r"),
              VectorField("S_r", [](const Coords&) { return vec({0.0, 0.0, 0.0, 1.0}); })};
    }
    case Model::heisenberg: {
      const auto gen = heisenberg_generators();
      const double s = 1.0 / std::numbers::sqrt2;
      return {VectorField("X", [gen, s](const Coords& p) -> Eigen::VectorXd { return s * gen[0](p); }),
              VectorField("Y", [gen, s](const Coords& p) -> Eigen::VectorXd { return s * gen[1](p); }), gen[2]};
    }
  }
  return {};
}

std::vector<OneForm> named_coframe(Model m) {
  switch (m) {
    case Model::hstar: return {phi_star(), psi_star(), omega_star()};
    case Model::cone:
      return {cone_lift(phi_star(), "phi^r"), cone_lift(psi_star(), "psi^r"), cone_lift(omega_star(), "omega^r"),
              OneForm("dr", [](const Coords&) { return vec({0.0, 0.0, 0.0, 1.0}); })};
    case Model::heisenberg: {
      const double s = std::numbers::sqrt2;
      return {OneForm("sqrt2 dx", [s](const Coords&) { return vec({s, 0.0, 0.0}); }),
              OneForm("sqrt2 dy", [s](const Coords&) { return vec({0.0, s, 0.0}); }),
              OneForm("omega", [](const Coords& p) { return vec({-2 * p[1], 2 * p[0], 1.0}); })};
    }
  }
  return {};
}

Eigen::MatrixXd metric_eval(Model m, const Coords& p) {
  switch (m) {
    case Model::hstar: return hstar_metric(p);
    case Model::cone: {
      Eigen::MatrixXd g = Eigen::MatrixXd::Zero(4, 4);
      g.topLeftCorner<3, 3>() = p[3] * p[3] * hstar_metric(p.head<3>());
      g(3, 3) = 1.0;
      return g;
    }
    case Model::heisenberg: {
      const Eigen::Vector3d contact(-2 * p[1], 2 * p[0], 1);
      Eigen::Matrix3d g = Eigen::Matrix3d::Zero();
      g(0, 0) = g(1, 1) = 2.0;
      return g + contact * contact.transpose();
    }
  }
  return {};
}

std::optional<int> reeb_index(Model m) {
  if (m == Model::cone) return std::nullopt;
  return 2;
}

double structure_scale(Model m, const Coords& p) { return m == Model::cone ? 1.0 / p[3] : 1.0; }

Coords base_point(Model m) {
  switch (m) {
    case Model::hstar: return vec({1.0, 0.0, 0.0});
    case Model::cone: return vec({1.0, 0.0, 0.0, 1.0});
    case Model::heisenberg: return vec({0.0, 0.0, 0.0});
  }
  return {};
}

}  // namespace pu21
