#include "pu21/moebius.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "pu21/error.hpp"

namespace pu21 {

namespace {
constexpr double kSideTol = 1e-12;
}

Eigen::Matrix3cd hermitian_matrix() {
  Eigen::Matrix3cd h = Eigen::Matrix3cd::Zero();
  h(0, 2) = h(1, 1) = h(2, 0) = 1.0;
  return h;
}

GroupElement GroupElement::inverse() const {
  // m^{-1} = H m^* H for form-preserving m.
  const Eigen::Matrix3cd h = hermitian_matrix();
  return GroupElement(h * m_.adjoint() * h);
}

Lift apply(const GroupElement& g, const Lift& v) { return Lift(g.matrix() * v.vector()); }

BoundaryPoint apply(const GroupElement& g, const BoundaryPoint& p) { return project(apply(g, lift(p))); }

GroupElement heis_translation(cplx w, double s) {
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Identity();
  m(0, 1) = -std::numbers::sqrt2 * std::conj(w);
  m(0, 2) = cplx(-std::norm(w), s);
  m(1, 2) = std::numbers::sqrt2 * w;
  return GroupElement(m);
}

GroupElement dilation_rotation(cplx lambda) {
  const double mod = std::abs(lambda);
  if (mod == 0.0) throw Error(ErrorKind::ZeroScale, "dilation factor must be nonzero");
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
  m(0, 0) = mod;
  m(1, 1) = lambda / mod;
  m(2, 2) = 1.0 / mod;
  return GroupElement(m);
}

GroupElement inversion() { return GroupElement(hermitian_matrix()); }

double verify_form(const GroupElement& g) {
  const Eigen::Matrix3cd h = hermitian_matrix();
  return (g.matrix().adjoint() * h * g.matrix() - h).cwiseAbs().maxCoeff();
}

NormalizedQuadruple::NormalizedQuadruple(double a, cplx z, double t) : a_(a), z_(z), t_(t) {
  if (!(std::abs(a) < std::numbers::pi / 2)) throw Error(ErrorKind::DomainViolation, "a must lie in (-pi/2, pi/2)");
  if (std::abs(z) <= kSideTol) throw Error(ErrorKind::DomainViolation, "z must be nonzero");
  if (std::abs(t / std::norm(z) - std::tan(a)) <= kSideTol) {
    throw Error(ErrorKind::DomainViolation, "t/|z|^2 must differ from tan a");
  }
}

Quadruple NormalizedQuadruple::quadruple() const {
  return {BoundaryPoint::finite(1.0, std::tan(a_)), BoundaryPoint::infinity(), BoundaryPoint::finite(0.0, 0.0),
          BoundaryPoint::finite(z_, t_)};
}

std::pair<NormalizedQuadruple, GroupElement> normalize_quadruple(const Quadruple& q) {
  require_distinct(q);
  GroupElement g;

  // p2 -> infinity: move p2 to the origin, then invert.
  if (!q[1].is_infinity()) {
    g = inversion() * heis_translation(-q[1].z(), -q[1].t());
  }

  // p3 -> origin.
  const BoundaryPoint p3 = apply(g, q[2]);
  g = heis_translation(-p3.z(), -p3.t()) * g;

  // p1 -> (1, tan a) through the stabiliser of {0, inf}.
  const BoundaryPoint p1 = apply(g, q[0]);
  if (std::abs(p1.z()) < kSideTol) {
    throw Error(ErrorKind::CCircle123, "p1, p2, p3 lie on a common complex circle; p1 = " + q[0].to_string());
  }
  g = dilation_rotation(1.0 / p1.z()) * g;

  const BoundaryPoint p4 = apply(g, q[3]);
  if (std::abs(p4.z()) < kSideTol) {
    throw Error(ErrorKind::CCircle234, "p2, p3, p4 lie on a common complex circle; p4 = " + q[3].to_string());
  }
  const double tan_a = apply(g, q[0]).t();
  const double a = std::atan(tan_a);
  if (std::abs(p4.t() / std::norm(p4.z()) - tan_a) < kSideTol) {
    std::ostringstream os;
    os << "p1 = " << q[0].to_string() << " and p4 = " << q[3].to_string()
       << " share an orbit of the stabiliser of p2, p3";
    throw Error(ErrorKind::SameOrbit, os.str());
  }
  return {NormalizedQuadruple(a, p4.z(), p4.t()), g};
}

}  // namespace pu21
