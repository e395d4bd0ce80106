#pragma once

// Maps between models of the configuration space of quadruples:
//   b0:   normalized quadruples -> punctured cone C'(h*), (a,z,t) -> (z, t, e^{tan a})
//   b1:   normalized quadruples -> C* x (C \ R)
//   G:    punctured cone -> cross-ratio variety (a CR map)
//   F:    punctured cone -> C* x (C \ R), F = b1 o b0^{-1}
// The variety V4 is |w1 + w2 - 1|^2 = 2 Re(w1 conj(w2) (1 + e^{-2ia})).

#include "pu21/boundary.hpp"
#include "pu21/moebius.hpp"

namespace pu21 {

/// (z, t, r) with z != 0, r > 0 and log r != t/|z|^2.
class ConePointPrime {
 public:
  /// Throws DomainViolation.
  ConePointPrime(cplx z, double t, double r);

  cplx z() const noexcept { return z_; }
  double t() const noexcept { return t_; }
  double r() const noexcept { return r_; }

 private:
  cplx z_;
  double t_;
  double r_;
};

/// F(w1, w2, a) from the variety equation.
double variety_equation(cplx w1, cplx w2, double a);

/// Point of V4 satisfying the side conditions w1 + w2 != 1,
/// Re(w1 conj(w2) e^{-ia}) > 0 and arg(w1/w2) != 2a (mod 2 pi).
class VarietyPoint {
 public:
  /// Throws DomainViolation. The equation is accepted to 1e-9 relative to
  /// (1 + |w1| + |w2|)^2; the point is not projected.
  VarietyPoint(cplx w1, cplx w2, double a);

  cplx w1() const noexcept { return w1_; }
  cplx w2() const noexcept { return w2_; }
  double a() const noexcept { return a_; }

 private:
  cplx w1_;
  cplx w2_;
  double a_;
};

/// Point (zeta, w) of C* x (C \ R).
struct B1Point {
  cplx zeta;
  cplx w;
};

ConePointPrime b0(const NormalizedQuadruple& n);
NormalizedQuadruple b0_inv(const ConePointPrime& c);

/// |X1 + X2 - 1|^2 - 2 Re(X1 conj(X2) (1 + e^{-2ia})), absolute value.
double crv_residual(cplx x1, cplx x2, double a);

/// (X1, X2, A(p1,p2,p3)). Throws CCircle123, CCircle234, SameOrbit as
/// normalize_quadruple does.
VarietyPoint variety_from_quadruple(const Quadruple& q);

/// z = (w1+w2-1)/((1+e^{-2ia}) w1), t = -2 Im(w2/((1+e^{-2ia}) w1)).
/// Throws DenominatorVanishes when w1 is degenerate.
NormalizedQuadruple variety_inverse(const VarietyPoint& v);

/// (z, (|z|^2 - it)/(1 - i tan a)).
B1Point b1(const NormalizedQuadruple& n);
/// Throws DenominatorVanishes when Im w = 0.
NormalizedQuadruple b1_inv(const B1Point& p);

/// G(z,t,r) = (q/D, u/D, arctan(-Im q)), u = -|z|^2 + it, q = -1 - i log r,
/// D = u + 2z + q. Throws DenominatorVanishes when |D| < 1e-12.
VarietyPoint g_map(const ConePointPrime& c);
ConePointPrime g_inv(const VarietyPoint& v);

/// F(z,t,r) = (z, (|z|^2 - it)/(1 - i log r)).
B1Point f_map(const ConePointPrime& c);
/// (zeta, (Re w |zeta|^2 - |w|^2)/Im w, e^{(|zeta|^2 - Re w)/Im w}).
ConePointPrime f_inv(const B1Point& p);

}  // namespace pu21
