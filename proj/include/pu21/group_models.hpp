#pragma once

// The Heisenberg group, the affine-rotational group H* = C_* x R with
// (z,t)*(w,s) = (zw, t + s|z|^2), and its identifications with
// Aff(R) x U(1), with the truncated boundary H* of the Siegel domain, and
// with the unit tangent bundle of the hyperbolic plane (Koranyi map).

#include <complex>
#include <utility>

namespace pu21 {

using cplx = std::complex<double>;

struct HeisenbergElement {
  cplx z;
  double t;
};

/// (z,t)(w,s) = (z + w, t + s + 2 Im(z conj(w))).
HeisenbergElement heis_mul(const HeisenbergElement& a, const HeisenbergElement& b);

class HStarElement {
 public:
  /// Throws DomainViolation when |z| < 1e-300.
  HStarElement(cplx z, double t);

  cplx z() const noexcept { return z_; }
  double t() const noexcept { return t_; }

 private:
  cplx z_;
  double t_;
};

HStarElement hstar_mul(const HStarElement& a, const HStarElement& b);
HStarElement hstar_inv(const HStarElement& a);

/// ([[alpha, beta], [0, 1]], e^{i theta}).
class AffRotElement {
 public:
  /// Throws DomainViolation unless alpha > 0. theta is reduced to (-pi, pi].
  AffRotElement(double alpha, double beta, double theta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double theta() const noexcept { return theta_; }

  AffRotElement operator*(const AffRotElement& o) const;

 private:
  double alpha_;
  double beta_;
  double theta_;
};

AffRotElement psi_iso(const HStarElement& a);
HStarElement psi_inv(const AffRotElement& e);

/// Psi(z,t) = (-|z|^2 + it, sqrt(2) z).
std::pair<cplx, cplx> psi_embed(const HStarElement& a);

/// rho*(z1,z2) = 2 Re(z1)/|z2|^2 + 1, the defining function of the truncated boundary.
double rho_star(cplx z1, cplx z2);

/// Point of the unit tangent bundle of the left half-plane model.
class TangentBundlePoint {
 public:
  /// Throws DomainViolation unless Re(zeta) < 0. phi is reduced to (-pi, pi].
  TangentBundlePoint(cplx zeta, double phi);

  cplx zeta() const noexcept { return zeta_; }
  double phi() const noexcept { return phi_; }

 private:
  cplx zeta_;
  double phi_;
};

/// K(z,t) = (-|z|^2 + it, arg z).
TangentBundlePoint koranyi(const HStarElement& a);
/// K^{-1}(zeta, phi) = (sqrt(-Re zeta) e^{i phi}, Im zeta).
HStarElement koranyi_inv(const TangentBundlePoint& p);

/// Representative of theta in (-pi, pi].
double wrap_angle(double theta);
/// Distance between two angles taken mod 2 pi.
double angle_distance(double a, double b);

}  // namespace pu21
