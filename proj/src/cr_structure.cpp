#include "pu21/cr_structure.hpp"

#include <cmath>

#include "pu21/error.hpp"
#include "pu21/finite_diff.hpp"
#include "pu21/group_models.hpp"

namespace pu21 {

namespace {

constexpr cplx I{0.0, 1.0};

bool in_pair(const ChartLayout& layout, int index) {
  for (const auto& [re, im] : layout.complex_pairs)
    if (re == index || im == index) return true;
  return false;
}

// Hermitian Levi form of a real function of complex coordinates (u_j, v_j),
// contracted with z: sum rho_{j kbar} z^j conj(z^k).
double levi_from_hessian(const Eigen::MatrixXd& h, const Eigen::VectorXcd& z) {
  cplx sum = 0;
  const Eigen::Index n = z.size();
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k) {
      const Eigen::Index xj = 2 * j, yj = 2 * j + 1, xk = 2 * k, yk = 2 * k + 1;
      const cplx rho = 0.25 * cplx(h(xj, xk) + h(yj, yk), h(xj, yk) - h(yj, xk));
      sum += rho * z[j] * std::conj(z[k]);
    }
  return sum.real();
}

}  // namespace

ChartLayout ChartLayout::cone() { return {4, {{0, 1}}}; }
ChartLayout ChartLayout::variety() { return {5, {{0, 1}, {2, 3}}}; }
ChartLayout ChartLayout::b1() { return {4, {{0, 1}, {2, 3}}}; }

ComplexTangent::ComplexTangent(ChartLayout layout, Eigen::VectorXd base, Eigen::VectorXcd components)
    : layout_(std::move(layout)), base_(std::move(base)), components_(std::move(components)) {
  if (base_.size() != layout_.dimension || components_.size() != layout_.dimension) {
    throw Error(ErrorKind::DomainViolation, "tangent vector does not match its chart");
  }
}

ComplexTangent ComplexTangent::holomorphic(ChartLayout layout, Eigen::VectorXd base, const Eigen::VectorXcd& coeffs) {
  Eigen::VectorXcd comps = Eigen::VectorXcd::Zero(layout.dimension);
  for (std::size_t j = 0; j < layout.complex_pairs.size(); ++j) {
    const auto [re, im] = layout.complex_pairs[j];
    const cplx c = coeffs[static_cast<Eigen::Index>(j)];
    comps[re] = c / 2.0;
    comps[im] = -I * c / 2.0;
  }
  return ComplexTangent(std::move(layout), std::move(base), std::move(comps));
}

Eigen::VectorXcd ComplexTangent::holomorphic_part() const {
  Eigen::VectorXcd out(static_cast<Eigen::Index>(layout_.complex_pairs.size()));
  for (std::size_t j = 0; j < layout_.complex_pairs.size(); ++j) {
    const auto [re, im] = layout_.complex_pairs[j];
    out[static_cast<Eigen::Index>(j)] = components_[re] + I * components_[im];
  }
  return out;
}

Eigen::VectorXcd ComplexTangent::antiholomorphic_part() const {
  Eigen::VectorXcd out(static_cast<Eigen::Index>(layout_.complex_pairs.size()));
  for (std::size_t j = 0; j < layout_.complex_pairs.size(); ++j) {
    const auto [re, im] = layout_.complex_pairs[j];
    out[static_cast<Eigen::Index>(j)] = components_[re] - I * components_[im];
  }
  return out;
}

Eigen::VectorXcd ComplexTangent::real_part() const {
  std::vector<cplx> vals;
  for (int i = 0; i < layout_.dimension; ++i)
    if (!in_pair(layout_, i)) vals.push_back(components_[i]);
  return Eigen::Map<Eigen::VectorXcd>(vals.data(), static_cast<Eigen::Index>(vals.size()));
}

ComplexTangent pushforward(const RealMap& map, const ComplexTangent& v, double rel_step) {
  const Eigen::MatrixXd jac = fd::jacobian(map.fn, v.base(), rel_step);
  return ComplexTangent(map.target, map.fn(v.base()), jac.cast<cplx>() * v.components());
}

Eigen::VectorXd cone_coords(const ConePointPrime& c) {
  return Eigen::Vector4d(c.z().real(), c.z().imag(), c.t(), c.r());
}

Eigen::VectorXd variety_coords(const VarietyPoint& v) {
  Eigen::VectorXd out(5);
  out << v.w1().real(), v.w1().imag(), v.w2().real(), v.w2().imag(), v.a();
  return out;
}

Eigen::VectorXd b1_coords(const B1Point& p) { return Eigen::Vector4d(p.zeta.real(), p.zeta.imag(), p.w.real(), p.w.imag()); }

// The charts evaluate the closed forms without the domain checks, so that
// stencil points near an excluded set still produce values.
RealMap g_chart_map() {
  return {ChartLayout::cone(), ChartLayout::variety(), [](const Eigen::VectorXd& p) -> Eigen::VectorXd {
            const cplx z(p[0], p[1]);
            const cplx u = -std::norm(z) + I * p[2];
            const cplx q = -1.0 - I * std::log(p[3]);
            const cplx d = u + 2.0 * z + q;
            Eigen::VectorXd out(5);
            out << (q / d).real(), (q / d).imag(), (u / d).real(), (u / d).imag(), std::atan(-q.imag());
            return out;
          }};
}

RealMap f_chart_map() {
  return {ChartLayout::cone(), ChartLayout::b1(), [](const Eigen::VectorXd& p) -> Eigen::VectorXd {
            const cplx z(p[0], p[1]);
            const cplx w = (std::norm(z) - I * p[2]) / (1.0 - I * std::log(p[3]));
            return Eigen::Vector4d(z.real(), z.imag(), w.real(), w.imag());
          }};
}

ComplexTangent bold_Z(const ConePointPrime& c) {
  const cplx z = c.z();
  Eigen::VectorXcd comps(4);
  comps << z / 2.0, -I * z / 2.0, I * std::norm(z), 0.0;
  return ComplexTangent(ChartLayout::cone(), cone_coords(c), comps);
}

ComplexTangent bold_W(const ConePointPrime& c) {
  Eigen::VectorXcd comps(4);
  comps << -c.z().imag() / 2.0, c.z().real() / 2.0, 0.0, I * c.r() / 2.0;
  return ComplexTangent(ChartLayout::cone(), cone_coords(c), comps);
}

std::pair<cplx, cplx> variety_alpha_beta(const VarietyPoint& v) {
  const cplx e = std::exp(2.0 * I * v.a());
  const cplx w1b = std::conj(v.w1()), w2b = std::conj(v.w2());
  return {w2b - e * w1b - 1.0, -(w1b - std::conj(e) * w2b - 1.0)};
}

ComplexTangent variety_tangent(const VarietyPoint& v) {
  const auto [alpha, beta] = variety_alpha_beta(v);
  return ComplexTangent::holomorphic(ChartLayout::variety(), variety_coords(v), Eigen::Vector2cd(alpha, beta));
}

cplx cr_factor(const VarietyPoint& v) {
  const cplx w1 = v.w1();
  return -w1 * (w1 + v.w2() - 1.0) / ((1.0 + std::exp(2.0 * I * v.a())) * std::conj(w1));
}

double cr_equivalence_residual(const VarietyPoint& v, double rel_step) {
  const ComplexTangent pushed = pushforward(g_chart_map(), bold_Z(g_inv(v)), rel_step);
  return (pushed.components() - cr_factor(v) * variety_tangent(v).components()).norm();
}

LeviValue levi_rho_star(cplx z1, cplx z2, double rel_step) {
  const fd::ScalarFn f = [](const Eigen::VectorXd& p) { return rho_star(cplx(p[0], p[1]), cplx(p[2], p[3])); };
  const Eigen::Vector4d base(z1.real(), z1.imag(), z2.real(), z2.imag());
  const Eigen::Vector2cd z(-std::norm(z2), z2);
  return {2.0 + 2.0 * z1.real() / std::norm(z2), levi_from_hessian(fd::hessian(f, base, rel_step), z)};
}

LeviValue levi_variety(const VarietyPoint& v, double rel_step) {
  const double a = v.a();
  const fd::ScalarFn f = [a](const Eigen::VectorXd& p) {
    return variety_equation(cplx(p[0], p[1]), cplx(p[2], p[3]), a);
  };
  const Eigen::Vector4d base(v.w1().real(), v.w1().imag(), v.w2().real(), v.w2().imag());
  const auto [alpha, beta] = variety_alpha_beta(v);
  const double c = std::cos(a);
  return {4.0 * c * c, levi_from_hessian(fd::hessian(f, base, rel_step), Eigen::Vector2cd(alpha, beta))};
}

double levi_variety_algebraic(const VarietyPoint& v) {
  const auto [alpha, beta] = variety_alpha_beta(v);
  return std::norm(alpha - std::exp(2.0 * I * v.a()) * beta);
}

double tau_eval(const VarietyPoint& v, const Eigen::Vector4d& d) {
  const auto [alpha, beta] = variety_alpha_beta(v);
  return -beta.imag() * d[0] - beta.real() * d[1] + alpha.imag() * d[2] + alpha.real() * d[3];
}

TauDirections tau_directions(const VarietyPoint& v) {
  const auto [alpha, beta] = variety_alpha_beta(v);
  return {Eigen::Vector4d(alpha.real(), alpha.imag(), beta.real(), beta.imag()),
          Eigen::Vector4d(alpha.imag(), -alpha.real(), beta.imag(), -beta.real()),
          Eigen::Vector4d(-beta.imag(), -beta.real(), alpha.imag(), alpha.real())};
}

}  // namespace pu21
