#include <gtest/gtest.h>

#include "pu21/group_models.hpp"
#include "pu21/moebius.hpp"
#include "pu21/sampling.hpp"
#include "test_support.hpp"

using namespace pu21;
using pu21::testing::same_point;

namespace {

const cplx I{0, 1};
BoundaryPoint pt(cplx z, double t) { return BoundaryPoint::finite(z, t); }
const BoundaryPoint kInf = BoundaryPoint::infinity();

}  // namespace

TEST(Apply, IdentityAndInversion) {
  EXPECT_TRUE(same_point(apply(GroupElement(), pt(I, 2)), pt(I, 2), 1e-15));
  EXPECT_TRUE(apply(inversion(), pt(0, 0)).is_infinity());
  EXPECT_TRUE(same_point(apply(inversion(), kInf), pt(0, 0), 1e-15));
}

TEST(Apply, ComposesAsProduct) {
  Sampler s(11);
  for (int i = 0; i < 100; ++i) {
    const GroupElement g = s.generator(), h = s.generator();
    const BoundaryPoint p = s.finite_boundary_point();
    const BoundaryPoint lhs = apply(g * h, p), rhs = apply(g, apply(h, p));
    if (lhs.is_infinity() || rhs.is_infinity()) continue;
    EXPECT_TRUE(same_point(lhs, rhs, 1e-9 * (1 + std::abs(rhs.z()) + std::abs(rhs.t()))));
  }
}

TEST(HeisTranslation, ActsAsLeftTranslation) {
  EXPECT_TRUE(heis_translation(0, 0).matrix().isApprox(Eigen::Matrix3cd::Identity()));
  EXPECT_TRUE(same_point(apply(heis_translation(1, 0), pt(0, 0)), pt(1, 0), 1e-15));
  EXPECT_LT(verify_form(heis_translation(2.0 + I, 3)), 1e-12);

  Sampler s(12);
  for (int i = 0; i < 100; ++i) {
    const cplx w = s.complex_in_annulus(0, 2), z = s.complex_in_annulus(0, 2);
    const double sv = s.uniform(-2, 2), t = s.uniform(-2, 2);
    const BoundaryPoint expected = pt(w + z, sv + t + 2 * std::imag(w * std::conj(z)));
    EXPECT_TRUE(same_point(apply(heis_translation(w, sv), pt(z, t)), expected, 1e-12));
    const HeisenbergElement prod = heis_mul({w, sv}, {z, t});
    EXPECT_TRUE(same_point(expected, pt(prod.z, prod.t), 1e-12));
    EXPECT_TRUE(apply(heis_translation(w, sv), kInf).is_infinity());
  }
}

TEST(DilationRotation, Action) {
  EXPECT_TRUE(same_point(apply(dilation_rotation(1), pt(I, 3)), pt(I, 3), 1e-15));
  EXPECT_TRUE(same_point(apply(dilation_rotation(2.0 * I), pt(1, 1)), pt(2.0 * I, 4), 1e-12));
  EXPECT_PU21_ERROR(dilation_rotation(0), ZeroScale);

  Sampler s(13);
  for (int i = 0; i < 50; ++i) {
    const cplx lambda = s.complex_in_annulus(0.2, 3);
    const double tan_a = s.uniform(-3, 3);
    EXPECT_TRUE(same_point(apply(dilation_rotation(lambda), pt(1, tan_a)), pt(lambda, std::norm(lambda) * tan_a),
                           1e-12));
    EXPECT_TRUE(same_point(apply(dilation_rotation(lambda), pt(0, 0)), pt(0, 0), 1e-15));
  }
}

TEST(Inversion, SwapsAndInverts) {
  EXPECT_TRUE((inversion() * inversion()).matrix().isApprox(Eigen::Matrix3cd::Identity(), 1e-12));
  EXPECT_EQ(verify_form(inversion()), 0.0);
  Sampler s(14);
  for (int i = 0; i < 50; ++i) {
    const BoundaryPoint p = s.finite_boundary_point();
    const cplx u = -std::norm(p.z()) + I * p.t();
    const BoundaryPoint q = apply(inversion(), p);
    EXPECT_CPLX_NEAR(q.z(), p.z() / u, 1e-12);
    EXPECT_CPLX_NEAR(-std::norm(q.z()) + I * q.t(), 1.0 / u, 1e-12);
  }
}

TEST(VerifyForm, GeneratorProducts) {
  EXPECT_EQ(verify_form(GroupElement()), 0.0);
  Sampler s(15);
  for (int i = 0; i < 100; ++i) {
    GroupElement g;
    for (int k = 0; k < 10; ++k) g = g * s.generator();
    EXPECT_LT(verify_form(g), 1e-10);
    EXPECT_LT(verify_form(g.inverse() * g) , 1e-10);
    EXPECT_TRUE((g.inverse() * g).matrix().isApprox(Eigen::Matrix3cd::Identity(), 1e-10));
  }
}

TEST(Normalize, AlreadyNormal) {
  const Quadruple q{pt(1, 0), kInf, pt(0, 0), pt(2, 1)};
  const auto [n, g] = normalize_quadruple(q);
  EXPECT_NEAR(n.a(), 0, 1e-15);
  EXPECT_CPLX_NEAR(n.z(), 2.0, 1e-15);
  EXPECT_NEAR(n.t(), 1, 1e-15);
  EXPECT_TRUE(g.matrix().isApprox(Eigen::Matrix3cd::Identity()));
}

TEST(Normalize, ImagesAndCartanConsistency) {
  Sampler s(16);
  for (int i = 0; i < 200; ++i) {
    const Quadruple q = s.quadruple();
    const auto [n, g] = normalize_quadruple(q);
    const Quadruple target = n.quadruple();
    for (int k = 0; k < 4; ++k) EXPECT_TRUE(same_point(apply(g, q[k]), target[k], 1e-9)) << k;
    EXPECT_NEAR(n.a(), cartan(Triple{q[0], q[1], q[2]}), 1e-9);
  }
}

TEST(Normalize, Idempotent) {
  Sampler s(17);
  for (int i = 0; i < 100; ++i) {
    const auto [n, g] = normalize_quadruple(s.quadruple());
    const auto [m, h] = normalize_quadruple(n.quadruple());
    EXPECT_NEAR(m.a(), n.a(), 1e-9);
    EXPECT_CPLX_NEAR(m.z(), n.z(), 1e-9);
    EXPECT_NEAR(m.t(), n.t(), 1e-9);
    const Eigen::Matrix3cd mat = h.matrix() / h.matrix()(1, 1);
    EXPECT_TRUE(mat.isApprox(Eigen::Matrix3cd::Identity(), 1e-9));
  }
}

TEST(Normalize, InvariantUnderGroupAction) {
  Sampler s(18);
  for (int i = 0; i < 200; ++i) {
    const Quadruple q = s.quadruple();
    GroupElement g;
    for (int k = 0; k < 4; ++k) g = g * s.generator();
    const Quadruple moved{apply(g, q[0]), apply(g, q[1]), apply(g, q[2]), apply(g, q[3])};
    const auto n = normalize_quadruple(q).first;
    const auto m = normalize_quadruple(moved).first;
    EXPECT_NEAR(m.a(), n.a(), 1e-8);
    EXPECT_CPLX_NEAR(m.z(), n.z(), 1e-8 * std::max(1.0, std::abs(n.z())));
    EXPECT_NEAR(m.t(), n.t(), 1e-8 * std::max(1.0, std::abs(n.t())));
  }
}

TEST(Normalize, ExcludedConfigurations) {
  // p1, p2, p3 on the t-axis chain.
  EXPECT_PU21_ERROR(normalize_quadruple(Quadruple{pt(0, 1), kInf, pt(0, 0), pt(1, 1)}), CCircle123);
  EXPECT_PU21_ERROR(normalize_quadruple(Quadruple{pt(1, 0), kInf, pt(0, 0), pt(0, 5)}), CCircle234);
  // p4 = (2, 0) has t/|z|^2 = 0 = tan a.
  EXPECT_PU21_ERROR(normalize_quadruple(Quadruple{pt(1, 0), kInf, pt(0, 0), pt(2, 0)}), SameOrbit);
  EXPECT_PU21_ERROR(normalize_quadruple(Quadruple{pt(1, 0), kInf, kInf, pt(2, 1)}), NotDistinct);
}

TEST(NormalizedQuadruple, ValidatesSideConditions) {
  EXPECT_PU21_ERROR(NormalizedQuadruple(2.0, 1.0, 1.0), DomainViolation);
  EXPECT_PU21_ERROR(NormalizedQuadruple(0.0, 0.0, 1.0), DomainViolation);
  EXPECT_PU21_ERROR(NormalizedQuadruple(0.0, 1.0, 0.0), DomainViolation);
  EXPECT_NO_THROW(NormalizedQuadruple(0.0, 1.0, 1.0));
}
