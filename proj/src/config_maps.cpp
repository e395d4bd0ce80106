#include "pu21/config_maps.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "pu21/error.hpp"
#include "pu21/group_models.hpp"

namespace pu21 {

namespace {

constexpr double kSideTol = 1e-12;
constexpr double kVarietyTol = 1e-9;
constexpr cplx I{0.0, 1.0};

[[noreturn]] void domain(const std::string& what) { throw Error(ErrorKind::DomainViolation, what); }

cplx inverse_denominator(const VarietyPoint& v) {
  const cplx den = (1.0 + std::exp(-2.0 * I * v.a())) * v.w1();
  if (std::abs(den) < kSideTol) throw Error(ErrorKind::DenominatorVanishes, "(1 + e^{-2ia}) w1 vanishes");
  return den;
}

}  // namespace

ConePointPrime::ConePointPrime(cplx z, double t, double r) : z_(z), t_(t), r_(r) {
  if (!(std::abs(z) > 0)) domain("cone point needs z != 0");
  if (!(r > 0)) domain("cone point needs r > 0");
  if (!(std::abs(std::log(r) - t / std::norm(z)) > kSideTol)) domain("cone point lies on log r = t/|z|^2");
}

double variety_equation(cplx w1, cplx w2, double a) {
  return std::norm(w1 + w2 - 1.0) - 2.0 * std::real(w1 * std::conj(w2) * (1.0 + std::exp(-2.0 * I * a)));
}

VarietyPoint::VarietyPoint(cplx w1, cplx w2, double a) : w1_(w1), w2_(w2), a_(a) {
  if (!(std::abs(a) < std::numbers::pi / 2)) domain("a must lie in (-pi/2, pi/2)");
  const double scale = std::pow(1.0 + std::abs(w1) + std::abs(w2), 2);
  const double residual = std::abs(variety_equation(w1, w2, a));
  if (!(residual <= kVarietyTol * scale)) {
    std::ostringstream os;
    os << "point is off the variety, residual " << residual;
    domain(os.str());
  }
  if (!(std::abs(w1 + w2 - 1.0) > kSideTol)) domain("w1 + w2 = 1");
  if (!(std::real(w1 * std::conj(w2) * std::exp(-I * a)) > kSideTol)) domain("Re(w1 conj(w2) e^{-ia}) <= 0");
  if (!(std::abs(w2) > 0) || !(angle_distance(std::arg(w1 / w2), 2 * a) > kSideTol)) domain("arg(w1/w2) = 2a");
}

ConePointPrime b0(const NormalizedQuadruple& n) { return ConePointPrime(n.z(), n.t(), std::exp(std::tan(n.a()))); }

NormalizedQuadruple b0_inv(const ConePointPrime& c) { return NormalizedQuadruple(std::atan(std::log(c.r())), c.z(), c.t()); }

double crv_residual(cplx x1, cplx x2, double a) { return std::abs(variety_equation(x1, x2, a)); }

VarietyPoint variety_from_quadruple(const Quadruple& q) {
  normalize_quadruple(q);
  const CrossRatioTriple x = cross_ratio_triple(q);
  return VarietyPoint(x.x1, x.x2, cartan(Triple{q[0], q[1], q[2]}));
}

NormalizedQuadruple variety_inverse(const VarietyPoint& v) {
  const cplx den = inverse_denominator(v);
  return NormalizedQuadruple(v.a(), (v.w1() + v.w2() - 1.0) / den, -2.0 * std::imag(v.w2() / den));
}

B1Point b1(const NormalizedQuadruple& n) {
  return {n.z(), (std::norm(n.z()) - I * n.t()) / (1.0 - I * std::tan(n.a()))};
}

NormalizedQuadruple b1_inv(const B1Point& p) {
  const double im = p.w.imag();
  if (std::abs(im) < kSideTol) throw Error(ErrorKind::DenominatorVanishes, "Im w vanishes");
  const double z2 = std::norm(p.zeta);
  return NormalizedQuadruple(std::atan((z2 - p.w.real()) / im), p.zeta, (p.w.real() * z2 - std::norm(p.w)) / im);
}

VarietyPoint g_map(const ConePointPrime& c) {
  const cplx u = -std::norm(c.z()) + I * c.t();
  const cplx q = -1.0 - I * std::log(c.r());
  const cplx d = u + 2.0 * c.z() + q;
  if (std::abs(d) < kSideTol) throw Error(ErrorKind::DenominatorVanishes, "u + 2z + q vanishes");
  return VarietyPoint(q / d, u / d, std::atan(-q.imag()));
}

ConePointPrime g_inv(const VarietyPoint& v) {
  const NormalizedQuadruple n = variety_inverse(v);
  return ConePointPrime(n.z(), n.t(), std::exp(std::tan(v.a())));
}

B1Point f_map(const ConePointPrime& c) {
  return {c.z(), (std::norm(c.z()) - I * c.t()) / (1.0 - I * std::log(c.r()))};
}

ConePointPrime f_inv(const B1Point& p) {
  const double im = p.w.imag();
  if (std::abs(im) < kSideTol) throw Error(ErrorKind::DenominatorVanishes, "Im w vanishes");
  const double z2 = std::norm(p.zeta);
  return ConePointPrime(p.zeta, (p.w.real() * z2 - std::norm(p.w)) / im, std::exp((z2 - p.w.real()) / im));
}

}  // namespace pu21
