#include "pu21/fields.hpp"

#include "pu21/error.hpp"

namespace pu21 {

ChartPoint::ChartPoint(double x, double y, double t, std::optional<double> r) : x_(x), y_(y), t_(t), r_(r) {
  if (!(x * x + y * y > 0)) throw Error(ErrorKind::DomainViolation, "chart point needs z != 0");
  if (r && !(*r > 0)) throw Error(ErrorKind::DomainViolation, "cone point needs r > 0");
}

ChartPoint ChartPoint::from_coords(const Coords& c) {
  if (c.size() == 4) return ChartPoint(c[0], c[1], c[2], c[3]);
  if (c.size() != 3) throw Error(ErrorKind::DomainViolation, "chart coordinates have 3 or 4 entries");
  return ChartPoint(c[0], c[1], c[2]);
}

Coords ChartPoint::coords() const {
  Coords c(r_ ? 4 : 3);
  c.head<3>() << x_, y_, t_;
  if (r_) c[3] = *r_;
  return c;
}

VectorField VectorField::combination(const std::vector<VectorField>& fields, const Eigen::VectorXd& coeffs) {
  return VectorField("combination", [fields, coeffs](const Coords& p) {
    Eigen::VectorXd out = coeffs[0] * fields[0](p);
    for (std::size_t i = 1; i < fields.size(); ++i) out += coeffs[static_cast<Eigen::Index>(i)] * fields[i](p);
    return out;
  });
}

OneForm OneForm::scaled(std::function<double(const Coords&)> f, std::string name) const {
  return OneForm(std::move(name), [fn = fn_, f = std::move(f)](const Coords& p) -> Eigen::VectorXd { return f(p) * fn(p); });
}

TwoForm TwoForm::operator+(const TwoForm& other) const {
  return TwoForm(name_ + "+" + other.name_,
                 [a = fn_, b = other.fn_](const Coords& p) -> Eigen::MatrixXd { return a(p) + b(p); });
}

TwoForm wedge(const OneForm& a, const OneForm& b) {
  return TwoForm(a.name() + "^" + b.name(), [a, b](const Coords& p) -> Eigen::MatrixXd {
    const Eigen::VectorXd ap = a(p), bp = b(p);
    return ap * bp.transpose() - bp * ap.transpose();
  });
}

double wedge(const OneForm& a, const TwoForm& b, const Coords& p, const Eigen::VectorXd& u, const Eigen::VectorXd& v,
             const Eigen::VectorXd& w) {
  return a(p, u) * b(p, v, w) - a(p, v) * b(p, u, w) + a(p, w) * b(p, u, v);
}

VectorField lie_bracket(const VectorField& u, const VectorField& v, double rel_step) {
  return VectorField("[" + u.name() + "," + v.name() + "]", [u, v, rel_step](const Coords& p) -> Eigen::VectorXd {
    const Eigen::MatrixXd du = fd::jacobian([&](const Coords& q) { return u(q); }, p, rel_step);
    const Eigen::MatrixXd dv = fd::jacobian([&](const Coords& q) { return v(q); }, p, rel_step);
    return dv * u(p) - du * v(p);
  });
}

TwoForm exterior_d(const OneForm& eta, double rel_step) {
  return TwoForm("d" + eta.name(), [eta, rel_step](const Coords& p) -> Eigen::MatrixXd {
    // jac(j, i) = d_i eta_j
    const Eigen::MatrixXd jac = fd::jacobian([&](const Coords& q) { return eta(q); }, p, rel_step);
    return jac.transpose() - jac;
  });
}

double exterior_d(const OneForm& eta, const VectorField& u, const VectorField& v, const Coords& p, double rel_step) {
  const fd::ScalarFn eta_v = [&](const Coords& q) { return eta(q, v(q)); };
  const fd::ScalarFn eta_u = [&](const Coords& q) { return eta(q, u(q)); };
  return fd::directional(eta_v, p, u(p), rel_step) - fd::directional(eta_u, p, v(p), rel_step) -
         eta(p, lie_bracket(u, v, rel_step)(p));
}

double exterior_d(const TwoForm& beta, const VectorField& u, const VectorField& v, const VectorField& w,
                  const Coords& p, double rel_step) {
  auto pair = [&](const VectorField& a, const VectorField& b) -> fd::ScalarFn {
    return [&beta, &a, &b](const Coords& q) { return beta(q, a(q), b(q)); };
  };
  const double derivs = fd::directional(pair(v, w), p, u(p), rel_step) -
                        fd::directional(pair(u, w), p, v(p), rel_step) +
                        fd::directional(pair(u, v), p, w(p), rel_step);
  const double brackets = beta(p, lie_bracket(u, v, rel_step)(p), w(p)) -
                          beta(p, lie_bracket(u, w, rel_step)(p), v(p)) +
                          beta(p, lie_bracket(v, w, rel_step)(p), u(p));
  return derivs - brackets;
}

}  // namespace pu21
