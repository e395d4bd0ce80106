#include "pu21/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "pu21/error.hpp"

namespace pu21 {

bool BoundaryPoint::same_as(const BoundaryPoint& other, double tol) const noexcept {
  if (infinite_ || other.infinite_) return infinite_ == other.infinite_;
  return std::abs(z_ - other.z_) <= tol && std::abs(t_ - other.t_) <= tol;
}

std::string BoundaryPoint::to_string() const {
  if (infinite_) return "inf";
  std::ostringstream os;
  os.precision(12);
  os << "(" << z_.real() << (z_.imag() < 0 ? "-" : "+") << std::abs(z_.imag()) << "i, " << t_ << ")";
  return os.str();
}

Lift::Lift(const Eigen::Vector3cd& v) : v_(v) {
  if (v.squaredNorm() == 0.0) throw Error(ErrorKind::DomainViolation, "lift must be a nonzero vector");
}

void require_distinct(const BoundaryPoint* points, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (points[i].same_as(points[j])) {
        throw Error(ErrorKind::NotDistinct, "points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                                " coincide at " + points[i].to_string());
      }
    }
  }
}

Lift lift(const BoundaryPoint& p) {
  if (p.is_infinity()) return Lift(Eigen::Vector3cd(1.0, 0.0, 0.0));
  const cplx z = p.z();
  return Lift(Eigen::Vector3cd(cplx(-std::norm(z), p.t()), std::numbers::sqrt2 * z, 1.0));
}

BoundaryPoint project(const Lift& v) {
  const double n2 = v.vector().squaredNorm();
  const double defect = std::abs(herm(v, v)) / n2;
  if (defect > kNullTol) {
    std::ostringstream os;
    os << "|<v,v>|/|v|^2 = " << defect;
    throw Error(ErrorKind::NonNullVector, os.str());
  }
  const cplx v3 = v[2];
  if (std::abs(v3) <= 1e-15 * std::sqrt(n2)) return BoundaryPoint::infinity();
  const cplx v1 = v[0] / v3;
  const cplx z = v[1] / (v3 * std::numbers::sqrt2);
  return BoundaryPoint::finite(z, v1.imag());
}

cplx herm(const Lift& v, const Lift& w) {
  return v[0] * std::conj(w[2]) + v[1] * std::conj(w[1]) + v[2] * std::conj(w[0]);
}

double cartan(const Lift& p1, const Lift& p2, const Lift& p3) {
  const cplx prod = -herm(p1, p2) * herm(p2, p3) * herm(p3, p1);
  const double scale = p1.vector().squaredNorm() * p2.vector().squaredNorm() * p3.vector().squaredNorm();
  if (std::abs(prod) <= 1e-28 * scale) throw Error(ErrorKind::DegenerateTriple, "triple Hermitian product vanishes");
  // -prod always has nonnegative real part; clamp rounding spill past +-pi/2.
  return std::clamp(std::arg(prod), -std::numbers::pi / 2, std::numbers::pi / 2);
}

double cartan(const Triple& tr) {
  try {
    require_distinct(tr);
  } catch (const Error& e) {
    throw Error(ErrorKind::DegenerateTriple, e.what());
  }
  return cartan(lift(tr[0]), lift(tr[1]), lift(tr[2]));
}

cplx cross_ratio(const Lift& p1, const Lift& p2, const Lift& p3, const Lift& p4) {
  const cplx num = herm(p4, p2) * herm(p3, p1);
  const cplx den = herm(p4, p1) * herm(p3, p2);
  const double scale =
      p1.vector().norm() * p2.vector().norm() * p3.vector().norm() * p4.vector().norm();
  if (std::abs(den) < 1e-14 * scale) throw Error(ErrorKind::UndefinedCrossRatio, "denominator vanishes");
  return num / den;
}

cplx cross_ratio(const Quadruple& q) {
  return cross_ratio(lift(q[0]), lift(q[1]), lift(q[2]), lift(q[3]));
}

CrossRatioTriple cross_ratio_triple(const Quadruple& q) {
  const Lift l1 = lift(q[0]), l2 = lift(q[1]), l3 = lift(q[2]), l4 = lift(q[3]);
  return {cross_ratio(l1, l2, l3, l4), cross_ratio(l1, l3, l2, l4), cross_ratio(l2, l3, l1, l4)};
}

std::pair<double, double> xratio_identity_residuals(const CrossRatioTriple& c) {
  const double first = std::abs(std::abs(c.x2) - std::abs(c.x1) * std::abs(c.x3));
  const double lhs = std::norm(c.x1 + c.x2 - 1.0);
  const double rhs = 2.0 * (c.x1 * (std::conj(c.x2) + std::conj(c.x1) * c.x3)).real();
  return {first, std::abs(lhs - rhs)};
}

}  // namespace pu21
