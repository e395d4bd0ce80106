#include "pu21/group_models.hpp"

#include <cmath>
#include <numbers>

#include "pu21/error.hpp"

namespace pu21 {

using std::numbers::pi;

double wrap_angle(double theta) {
  double r = std::remainder(theta, 2 * pi);
  if (r <= -pi) r += 2 * pi;
  return r;
}

double angle_distance(double a, double b) { return std::abs(wrap_angle(a - b)); }

HeisenbergElement heis_mul(const HeisenbergElement& a, const HeisenbergElement& b) {
  return {a.z + b.z, a.t + b.t + 2.0 * (a.z * std::conj(b.z)).imag()};
}

HStarElement::HStarElement(cplx z, double t) : z_(z), t_(t) {
  if (!(std::abs(z) >= 1e-300)) throw Error(ErrorKind::DomainViolation, "H* element needs z != 0");
}

HStarElement hstar_mul(const HStarElement& a, const HStarElement& b) {
  return {a.z() * b.z(), a.t() + b.t() * std::norm(a.z())};
}

HStarElement hstar_inv(const HStarElement& a) { return {1.0 / a.z(), -a.t() / std::norm(a.z())}; }

AffRotElement::AffRotElement(double alpha, double beta, double theta)
    : alpha_(alpha), beta_(beta), theta_(wrap_angle(theta)) {
  if (!(alpha > 0)) throw Error(ErrorKind::DomainViolation, "affine part needs alpha > 0");
}

AffRotElement AffRotElement::operator*(const AffRotElement& o) const {
  // [[a, b], [0, 1]] [[a', b'], [0, 1]] = [[a a', a b' + b], [0, 1]].
  return {alpha_ * o.alpha_, alpha_ * o.beta_ + beta_, theta_ + o.theta_};
}

AffRotElement psi_iso(const HStarElement& a) { return {std::norm(a.z()), a.t(), std::arg(a.z())}; }

HStarElement psi_inv(const AffRotElement& e) { return {std::polar(std::sqrt(e.alpha()), e.theta()), e.beta()}; }

std::pair<cplx, cplx> psi_embed(const HStarElement& a) {
  return {cplx(-std::norm(a.z()), a.t()), std::numbers::sqrt2 * a.z()};
}

double rho_star(cplx z1, cplx z2) { return 2.0 * z1.real() / std::norm(z2) + 1.0; }

TangentBundlePoint::TangentBundlePoint(cplx zeta, double phi) : zeta_(zeta), phi_(wrap_angle(phi)) {
  if (!(zeta.real() < 0)) throw Error(ErrorKind::DomainViolation, "zeta must lie in the left half-plane");
}

TangentBundlePoint koranyi(const HStarElement& a) { return {cplx(-std::norm(a.z()), a.t()), std::arg(a.z())}; }

HStarElement koranyi_inv(const TangentBundlePoint& p) {
  return {std::polar(std::sqrt(-p.zeta().real()), p.phi()), p.zeta().imag()};
}

}  // namespace pu21
