#include <gtest/gtest.h>

#include "pu21/models.hpp"
#include "pu21/sampling.hpp"
#include "test_support.hpp"

using namespace pu21;

namespace {

Eigen::VectorXd v3(double a, double b, double c) { return Eigen::Vector3d(a, b, c); }

}  // namespace

TEST(NamedFrame, ValuesAtPoints) {
  const auto hs = named_frame(Model::hstar);
  const Coords p = v3(1, 0, 0);
  EXPECT_TRUE(hs[0](p).isApprox(v3(1, 0, 0)));
  EXPECT_TRUE(hs[1](p).isApprox(v3(0, 1, -2)));
  EXPECT_TRUE(hs[2](p).isApprox(v3(0, 1, 0)));

  const auto cone = named_frame(Model::cone);
  const Coords q = Eigen::Vector4d(0.3, -1.2, 0.7, 2.0);
  for (int i = 0; i < 3; ++i) {
    EXPECT_TRUE(cone[i](q).head<3>().isApprox(hs[i](q.head<3>()) / 2));
    EXPECT_EQ(cone[i](q)[3], 0.0);
  }

  const auto gen = heisenberg_generators();
  EXPECT_TRUE(gen[0](v3(0, 1, 0)).isApprox(v3(1, 0, 2)));
}

TEST(NamedCoframe, DualToFrame) {
  Sampler s(31);
  for (Model m : {Model::hstar, Model::cone, Model::heisenberg}) {
    const auto frame = named_frame(m);
    const auto coframe = named_coframe(m);
    for (int k = 0; k < 50; ++k) {
      const Coords p = s.chart_point(m);
      for (std::size_t i = 0; i < frame.size(); ++i)
        for (std::size_t j = 0; j < frame.size(); ++j)
          EXPECT_NEAR(coframe[i](p, frame[j](p)), i == j ? 1.0 : 0.0, 1e-12) << to_string(m);
    }
  }
  EXPECT_NEAR(omega_star()(v3(1, 0, 0), named_frame(Model::hstar)[2](v3(1, 0, 0))), 1, 1e-15);
}

TEST(Metric, FrameIsOrthonormal) {
  Sampler s(32);
  for (Model m : {Model::hstar, Model::cone, Model::heisenberg}) {
    const auto frame = named_frame(m);
    for (int k = 0; k < 50; ++k) {
      const Coords p = s.chart_point(m);
      const Eigen::MatrixXd g = metric_eval(m, p);
      EXPECT_TRUE(g.isApprox(g.transpose()));
      Eigen::MatrixXd e(p.size(), p.size());
      for (Eigen::Index i = 0; i < p.size(); ++i) e.col(i) = frame[static_cast<std::size_t>(i)](p);
      EXPECT_LT((e.transpose() * g * e - Eigen::MatrixXd::Identity(p.size(), p.size())).cwiseAbs().maxCoeff(), 1e-10)
          << to_string(m);
    }
  }
}

TEST(Metric, UnitGeneratorMetricMakesGeneratorsOrthonormal) {
  Sampler s(33);
  const auto gen = heisenberg_generators();
  for (int k = 0; k < 20; ++k) {
    const Coords p = s.chart_point(Model::heisenberg);
    const Eigen::MatrixXd g = heisenberg_unit_generator_metric(p);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) EXPECT_NEAR(gen[i](p).dot(g * gen[j](p)), i == j ? 1.0 : 0.0, 1e-12);
  }
}

TEST(LieBracket, HStarRelation) {
  const auto f = named_frame(Model::hstar);
  const VectorField xy = lie_bracket(f[0], f[1]);
  Sampler s(34);
  for (int k = 0; k < 100; ++k) {
    const Coords p = s.chart_point(Model::hstar);
    EXPECT_LT((xy(p) - 2 * (f[1](p) - f[2](p))).norm(), 1e-8);
    EXPECT_LT(lie_bracket(f[1], f[1])(p).norm(), 1e-12);
  }
}

TEST(LieBracket, ConeRadialRelation) {
  const auto f = named_frame(Model::cone);
  Sampler s(35);
  for (int k = 0; k < 100; ++k) {
    const Coords p = s.chart_point(Model::cone);
    EXPECT_LT((lie_bracket(f[2], f[3])(p) - f[2](p) / p[3]).norm(), 1e-8);
    EXPECT_LT((lie_bracket(f[0], f[1])(p) - 2 / p[3] * (f[1](p) - f[2](p))).norm(), 1e-8);
  }
}

TEST(ExteriorD, HStarCoframe) {
  const auto f = named_frame(Model::hstar);
  const OneForm phi = phi_star(), psi = psi_star(), omega = omega_star();
  const TwoForm two_phi_psi = wedge(phi, psi);
  Sampler s(36);
  for (int k = 0; k < 100; ++k) {
    const Coords p = s.chart_point(Model::hstar);
    EXPECT_NEAR(exterior_d(phi, f[0], f[1], p), 0, 1e-8);
    EXPECT_NEAR(exterior_d(omega, f[0], f[1], p), 2, 1e-8);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const Eigen::VectorXd u = f[i](p), v = f[j](p);
        EXPECT_NEAR(exterior_d(omega)(p, u, v), 2 * two_phi_psi(p, u, v), 1e-8);
        EXPECT_NEAR(exterior_d(psi)(p, u, v), -2 * two_phi_psi(p, u, v), 1e-8);
        EXPECT_NEAR(exterior_d(phi)(p, u, v), 0, 1e-8);
      }
  }
}

TEST(ExteriorD, InvariantAndCoordinateFormulasAgree) {
  const auto f = named_frame(Model::hstar);
  Sampler s(37);
  for (int k = 0; k < 30; ++k) {
    const Coords p = s.chart_point(Model::hstar);
    for (const OneForm& eta : {phi_star(), psi_star(), omega_star()})
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          EXPECT_NEAR(exterior_d(eta, f[i], f[j], p), exterior_d(eta)(p, f[i](p), f[j](p)), 1e-8);
  }
}

TEST(Reeb, OmegaStar) {
  const auto f = named_frame(Model::hstar);
  const TwoForm d_omega = exterior_d(omega_star());
  Sampler s(38);
  for (int k = 0; k < 100; ++k) {
    const Coords p = s.chart_point(Model::hstar);
    EXPECT_NEAR(omega_star()(p, f[2](p)), 1, 1e-8);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(d_omega(p, f[2](p), f[i](p)), 0, 1e-8);
  }
}

TEST(ChartPoint, Validation) {
  EXPECT_PU21_ERROR(ChartPoint(0, 0, 1), DomainViolation);
  EXPECT_PU21_ERROR(ChartPoint(1, 0, 1, 0.0), DomainViolation);
  const ChartPoint p(1, 2, 3, 4.0);
  EXPECT_EQ(ChartPoint::from_coords(p.coords()).r().value(), 4.0);
}
