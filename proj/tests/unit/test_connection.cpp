#include <gtest/gtest.h>

#include "pu21/connection.hpp"
#include "pu21/fd_oracle.hpp"
#include "pu21/sampling.hpp"
#include "test_support.hpp"

using namespace pu21;

namespace {

// Frame indices.
constexpr int X = 0, Y = 1, T = 2, S = 3;

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

// Checks nabla_{e_i} e_j = sum of (coefficient, index) pairs, all others zero.
void expect_connection(const ExactFrameTables& t, int i, int j, std::vector<std::pair<Rational, int>> terms) {
  for (int k = 0; k < t.size(); ++k) {
    Rational expected = kZero;
    for (const auto& [c, idx] : terms)
      if (idx == k) expected = c;
    EXPECT_EQ(t.connection()(i, j, k), expected) << "nabla_" << i << " e_" << j << " along " << k;
  }
}

void expect_curvature(const ExactFrameTables& t, int a, int b, int c, std::vector<std::pair<Rational, int>> terms) {
  for (int k = 0; k < t.size(); ++k) {
    Rational expected = kZero;
    for (const auto& [v, idx] : terms)
      if (idx == k) expected = v;
    EXPECT_EQ(t.curvature()(a, b, c, k), expected) << "R(" << a << "," << b << ")" << c << " along " << k;
  }
}

double max_difference(const FrameTables& a, const FrameTables& b) {
  double worst = 0;
  const int n = a.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        worst = std::max(worst, std::abs(a.connection(i, j, k) - b.connection(i, j, k)));
        for (int l = 0; l < n; ++l) worst = std::max(worst, std::abs(a.curvature(i, j, k, l) - b.curvature(i, j, k, l)));
      }
  return worst;
}

}  // namespace

TEST(SnapRational, SmallDenominators) {
  EXPECT_EQ(snap_rational(-5.0 / 3.0 + 1e-9).value(), q(-5, 3));
  EXPECT_EQ(snap_rational(2.0).value(), q(2));
  EXPECT_FALSE(snap_rational(0.1234567).has_value());
  EXPECT_FALSE(snap_rational(std::nan("")).has_value());
}

TEST(StructureConstants, HStarBrackets) {
  const StructureConstants sc = measure_structure_constants(Model::hstar);
  EXPECT_EQ(sc.c(X, Y, Y), q(2));
  EXPECT_EQ(sc.c(X, Y, T), q(-2));
  EXPECT_EQ(sc.c(X, T, X), kZero);
  EXPECT_EQ(sc.c(Y, T, Y), kZero);
  for (const Rational& s : sc.sigma) EXPECT_EQ(s, kZero);
}

TEST(StructureConstants, ConeScalesAsInverseRadius) {
  const StructureConstants sc = measure_structure_constants(Model::cone);
  EXPECT_EQ(sc.c(X, S, X), q(1));
  EXPECT_EQ(sc.c(Y, S, Y), q(1));
  EXPECT_EQ(sc.c(T, S, T), q(1));
  EXPECT_EQ(sc.sigma[S], q(-1));
}

TEST(KoszulConnection, HStarTable) {
  const ExactFrameTables t = koszul_connection(Model::hstar);
  expect_connection(t, X, X, {});
  expect_connection(t, Y, X, {{q(-2), Y}, {q(1), T}});
  expect_connection(t, T, X, {{q(1), Y}});
  expect_connection(t, X, Y, {{q(-1), T}});
  expect_connection(t, Y, Y, {{q(2), X}});
  expect_connection(t, T, Y, {{q(-1), X}});
  expect_connection(t, X, T, {{q(1), Y}});
  expect_connection(t, Y, T, {{q(-1), X}});
  expect_connection(t, T, T, {});
}

TEST(KoszulConnection, ConeTable) {
  const ExactFrameTables t = koszul_connection(Model::cone);
  expect_connection(t, X, X, {{q(-1), S}});
  expect_connection(t, Y, X, {{q(-2), Y}, {q(1), T}});
  expect_connection(t, T, X, {{q(1), Y}});
  expect_connection(t, S, X, {});
  expect_connection(t, X, Y, {{q(-1), T}});
  expect_connection(t, Y, Y, {{q(2), X}, {q(-1), S}});
  expect_connection(t, T, Y, {{q(-1), X}});
  expect_connection(t, S, Y, {});
  expect_connection(t, X, T, {{q(1), Y}});
  expect_connection(t, Y, T, {{q(-1), X}});
  expect_connection(t, T, T, {{q(-1), S}});
  expect_connection(t, S, T, {});
  expect_connection(t, X, S, {{q(1), X}});
  expect_connection(t, Y, S, {{q(1), Y}});
  expect_connection(t, T, S, {{q(1), T}});
  expect_connection(t, S, S, {});
}

TEST(KoszulConnection, MetricTorsionFreeBianchi) {
  for (Model m : {Model::hstar, Model::cone, Model::heisenberg}) {
    const ExactFrameTables t = curvature_table(m);
    EXPECT_EQ(t.metric_defect(), kZero) << to_string(m);
    EXPECT_EQ(t.torsion_defect(), kZero) << to_string(m);
    EXPECT_EQ(t.bianchi_defect(), kZero) << to_string(m);
    for (int a = 0; a < t.size(); ++a)
      for (int b = 0; b < t.size(); ++b)
        for (int c = 0; c < t.size(); ++c)
          for (int d = 0; d < t.size(); ++d) EXPECT_EQ(t.curvature()(a, b, c, d), -t.curvature()(b, a, c, d));
  }
}

TEST(Curvature, HStarTable) {
  const ExactFrameTables t = curvature_table(Model::hstar);
  expect_curvature(t, X, Y, X, {{q(-7), Y}});
  expect_curvature(t, X, T, X, {{q(1), T}});
  expect_curvature(t, Y, T, X, {});
  expect_curvature(t, X, T, Y, {});
  expect_curvature(t, Y, T, Y, {{q(1), T}});
  expect_curvature(t, X, T, T, {{q(-1), X}});
  expect_curvature(t, Y, T, T, {{q(-1), Y}});
  // Forced by K(X,Y) = -7 and the skew symmetry g(R(X,Y)Y, X) = -g(R(X,Y)X, Y).
  expect_curvature(t, X, Y, Y, {{q(7), X}});
  // Forced by the Sasakian identity R(X,Y)T = eta(Y)X - eta(X)Y on horizontal X, Y.
  expect_curvature(t, X, Y, T, {});
}

TEST(Curvature, HStarSectionalRicciScalar) {
  const ExactFrameTables t = curvature_table(Model::hstar);
  EXPECT_EQ(t.sectional(X, Y), q(-7));
  EXPECT_EQ(t.sectional(X, T), q(1));
  EXPECT_EQ(t.sectional(Y, T), q(1));
  EXPECT_EQ(t.ricci(X), q(-3));
  EXPECT_EQ(t.ricci(Y), q(-3));
  EXPECT_EQ(t.ricci(T), q(1));
  EXPECT_EQ(t.scalar(), q(-5, 3));
}

TEST(Curvature, ConeSectional) {
  const ExactFrameTables t = curvature_table(Model::cone);
  EXPECT_EQ(t.sectional(X, Y), q(-8));
  for (auto [a, b] : {std::pair{X, T}, {X, S}, {Y, T}, {Y, S}}) EXPECT_EQ(t.sectional(a, b), kZero);
  // Planes containing the radial direction of a metric cone are flat.
  EXPECT_EQ(t.sectional(T, S), kZero);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int d = 0; d < 4; ++d) EXPECT_EQ(t.curvature()(a, S, b, d), kZero);
  EXPECT_EQ(t.ricci(X), q(-8, 3));
  EXPECT_EQ(t.ricci(T), kZero);
  EXPECT_EQ(t.scalar(), q(-4, 3));

  for (double r : {0.5, 1.0, 2.0}) {
    const FrameTables at = t.at(Eigen::Vector4d(0.4, 0.9, -0.3, r));
    EXPECT_NEAR(at.sectional(X, Y), -8 / (r * r), 1e-12);
    EXPECT_NEAR(at.scalar, -4 / (3 * r * r), 1e-12);
  }
}

TEST(Curvature, HeisenbergContactMetric) {
  const ExactFrameTables t = curvature_table(Model::heisenberg);
  EXPECT_EQ(t.sectional(X, Y), q(-3));
  EXPECT_EQ(t.sectional(X, T), q(1));
  EXPECT_EQ(t.sectional(Y, T), q(1));
}

TEST(FdOracle, MatchesExactTables) {
  Sampler s(41);
  for (Model m : {Model::hstar, Model::cone, Model::heisenberg}) {
    const ExactFrameTables exact = curvature_table(m);
    for (int k = 0; k < 20; ++k) {
      const Coords p = s.chart_point(m);
      EXPECT_LT(max_difference(exact.at(p), fd_curvature_oracle(m, p)), 1e-5) << to_string(m);
    }
  }
}

TEST(FdOracle, NamedValues) {
  const FrameTables hs = fd_curvature_oracle(Model::hstar, Eigen::Vector3d(0.8, -0.6, 0.5));
  EXPECT_NEAR(hs.sectional(X, Y), -7, 1e-4);
  const FrameTables heis = fd_curvature_oracle(Model::heisenberg, Eigen::Vector3d(0.2, 0.1, -0.4));
  EXPECT_NEAR(heis.sectional(X, Y), -3, 1e-4);
  const FrameTables cone = fd_curvature_oracle(Model::cone, Eigen::Vector4d(1.0, 0.5, 0.2, 2.0));
  EXPECT_NEAR(cone.scalar, -1.0 / 3.0, 1e-4);
}

TEST(FdOracle, UnitGeneratorMetricIsNotSasakian) {
  const MetricFn metric = heisenberg_unit_generator_metric;
  const auto gen = heisenberg_generators();
  const std::vector<OneForm> coframe = {
      OneForm("dx", [](const Coords&) -> Eigen::VectorXd { return Eigen::Vector3d(1, 0, 0); }),
      OneForm("dy", [](const Coords&) -> Eigen::VectorXd { return Eigen::Vector3d(0, 1, 0); }),
      OneForm("omega", [](const Coords& p) -> Eigen::VectorXd { return Eigen::Vector3d(-2 * p[1], 2 * p[0], 1); })};
  const Coords p = Eigen::Vector3d(0.3, -0.5, 0.2);
  const Eigen::VectorXd ex = Eigen::Vector3d(1, 0, 0);
  EXPECT_NEAR(fd_sasaki_identity_residual(metric, gen, coframe, T, ex, ex, p), 3, 1e-4);
  const FrameTables t = fd_frame_tables(metric, gen, coframe, p);
  EXPECT_NEAR(t.sectional(X, Y), -12, 1e-4);
  EXPECT_NEAR(t.sectional(X, T), 4, 1e-4);
}

TEST(Killing, ReebFieldExactAndFd) {
  Sampler s(42);
  for (Model m : {Model::hstar, Model::heisenberg}) {
    const ExactFrameTables t = koszul_connection(m);
    const Eigen::VectorXd ex = Eigen::Vector3d(1, 0, 0), ey = Eigen::Vector3d(0, 1, 0);
    EXPECT_EQ(killing_residual(t, ex, ey, base_point(m)), 0.0);
    EXPECT_EQ(killing_residual(t, ex, ex, base_point(m)), 0.0);
    for (int k = 0; k < 20; ++k) {
      const Eigen::VectorXd u = s.unit_vector(3), v = s.unit_vector(3);
      const Coords p = s.chart_point(m);
      EXPECT_LT(killing_residual(t, u, v, p), 1e-10);
      EXPECT_LT(fd_killing_residual(m, u, v, p), 1e-5);
    }
  }
  EXPECT_PU21_ERROR(killing_residual(koszul_connection(Model::cone), Eigen::Vector4d::Ones(), Eigen::Vector4d::Ones(),
                                     base_point(Model::cone)),
                    DomainViolation);
}

TEST(Sasaki, IdentityExactAndFd) {
  Sampler s(43);
  for (Model m : {Model::hstar, Model::heisenberg}) {
    const ExactFrameTables t = curvature_table(m);
    const Eigen::VectorXd ex = Eigen::Vector3d(1, 0, 0), ey = Eigen::Vector3d(0, 1, 0), et = Eigen::Vector3d(0, 0, 1);
    EXPECT_EQ(sasaki_identity_residual(t, ex, ey, base_point(m)), 0.0);
    EXPECT_EQ(sasaki_identity_residual(t, et, et, base_point(m)), 0.0);
    for (int k = 0; k < 20; ++k) {
      const Eigen::VectorXd u = s.unit_vector(3), v = s.unit_vector(3);
      const Coords p = s.chart_point(m);
      EXPECT_LT(sasaki_identity_residual(t, u, v, p), 1e-10);
      EXPECT_LT(fd_sasaki_identity_residual(m, u, v, p), 1e-5);
    }
  }
}

TEST(Sasaki, HStarClosedForm) {
  // R(U,T)V = -ac' X - bc' Y + (aa' + bb') T for U = (a,b,c), V = (a',b',c').
  const ExactFrameTables t = curvature_table(Model::hstar);
  Sampler s(44);
  for (int k = 0; k < 20; ++k) {
    const Eigen::Vector3d u = s.unit_vector(3), v = s.unit_vector(3);
    Eigen::Vector3d lhs = Eigen::Vector3d::Zero();
    for (int a = 0; a < 3; ++a)
      for (int c = 0; c < 3; ++c) lhs += u[a] * v[c] * curvature_vector(t, a, T, c, base_point(Model::hstar));
    const Eigen::Vector3d expected(-u[0] * v[2], -u[1] * v[2], u[0] * v[0] + u[1] * v[1]);
    EXPECT_LT((lhs - expected).norm(), 1e-12);
  }
}
