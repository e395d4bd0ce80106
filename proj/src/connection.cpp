#include "pu21/connection.hpp"

#include <cmath>
#include <sstream>

#include "pu21/error.hpp"
#include "pu21/sampling.hpp"

namespace pu21 {

namespace {

constexpr double kConstancyTol = 1e-8;

Rational abs(const Rational& q) { return q < kZero ? -q : q; }

struct RawConstants {
  std::vector<double> c;  // n^3, c[(i*n+j)*n+k]
  std::vector<double> sigma;
};

RawConstants measure_at(Model m, const Coords& p, double rel_step) {
  const auto frame = named_frame(m);
  const auto coframe = named_coframe(m);
  const int n = dimension(m);
  const double s = structure_scale(m, p);
  RawConstants out{std::vector<double>(static_cast<std::size_t>(n * n * n), 0.0), std::vector<double>(n, 0.0)};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Eigen::VectorXd b = lie_bracket(frame[i], frame[j], rel_step)(p);
      for (int k = 0; k < n; ++k) {
        const double v = coframe[k](p, b) / s;
        out.c[static_cast<std::size_t>((i * n + j) * n + k)] = v;
        out.c[static_cast<std::size_t>((j * n + i) * n + k)] = -v;
      }
    }
  }
  const fd::ScalarFn scale = [m](const Coords& q) { return structure_scale(m, q); };
  for (int i = 0; i < n; ++i) out.sigma[i] = fd::directional(scale, p, frame[i](p), rel_step) / (s * s);
  return out;
}

Rational snap_or_throw(double x, Model m, const std::string& what) {
  if (auto q = snap_rational(x, 1e-6, 64)) return *q;
  std::ostringstream msg;
  msg << to_string(m) << ": " << what << " = " << x << " is not a small rational";
  throw Error(ErrorKind::NonConstantStructure, msg.str());
}

}  // namespace

std::optional<Rational> snap_rational(double x, double tol, std::int64_t max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  for (std::int64_t den = 1; den <= max_den; ++den) {
    const double num = std::round(x * static_cast<double>(den));
    if (std::abs(x - num / static_cast<double>(den)) <= tol) return Rational(static_cast<std::int64_t>(num), den);
  }
  return std::nullopt;
}

StructureConstants measure_structure_constants(Model m, double rel_step, int checks, std::uint64_t seed) {
  const int n = dimension(m);
  const RawConstants base = measure_at(m, base_point(m), rel_step);

  Sampler sampler(seed);
  for (int trial = 0; trial < checks; ++trial) {
    const Coords p = sampler.chart_point(m);
    const RawConstants here = measure_at(m, p, rel_step);
    double worst = 0;
    for (std::size_t k = 0; k < base.c.size(); ++k) worst = std::max(worst, std::abs(here.c[k] - base.c[k]));
    for (int k = 0; k < n; ++k) worst = std::max(worst, std::abs(here.sigma[k] - base.sigma[k]));
    if (worst > kConstancyTol) {
      std::ostringstream msg;
      msg << to_string(m) << ": structure coefficients vary by " << worst << " between sample points";
      throw Error(ErrorKind::NonConstantStructure, msg.str());
    }
  }

  StructureConstants sc{m, n, Table3<Rational>(n), std::vector<Rational>(n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        sc.c(i, j, k) = snap_or_throw(base.c[static_cast<std::size_t>((i * n + j) * n + k)], m, "c");
  for (int i = 0; i < n; ++i) sc.sigma[i] = snap_or_throw(base.sigma[i], m, "sigma");
  return sc;
}

void summarize_curvature(FrameTables& t) {
  const int n = t.n;
  t.sectional = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) t.sectional(i, j) = t.curvature(i, j, i, j);
  t.ricci = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) t.ricci[i] = t.sectional.row(i).sum() / (n - 1);
  t.scalar = t.ricci.sum() / n;
}

ExactFrameTables::ExactFrameTables(StructureConstants sc)
    : sc_(std::move(sc)), gamma_(sc_.n), riemann_(sc_.n) {
  const int n = sc_.n;
  const auto& c = sc_.c;
  // Koszul with X = e_j, Y = e_i, Z = e_k.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) gamma_(i, j, k) = -(c(j, k, i) + c(i, k, j) + c(j, i, k)) / 2;

  const auto& sigma = sc_.sigma;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int cc = 0; cc < n; ++cc)
        for (int m = 0; m < n; ++m) {
          Rational v = gamma_(a, cc, m) * sigma[b] - gamma_(b, cc, m) * sigma[a];
          for (int l = 0; l < n; ++l)
            v += gamma_(a, cc, l) * gamma_(b, l, m) - gamma_(b, cc, l) * gamma_(a, l, m) + c(a, b, l) * gamma_(l, cc, m);
          riemann_(a, b, cc, m) = v;
        }
}

Rational ExactFrameTables::ricci(int i) const {
  Rational sum = kZero;
  for (int j = 0; j < sc_.n; ++j)
    if (j != i) sum += sectional(i, j);
  return sum / (sc_.n - 1);
}

Rational ExactFrameTables::scalar() const {
  Rational sum = kZero;
  for (int i = 0; i < sc_.n; ++i) sum += ricci(i);
  return sum / sc_.n;
}

FrameTables ExactFrameTables::at(const Coords& p) const {
  const int n = sc_.n;
  const double s = scale(p);
  FrameTables t{n, Table3<double>(n), Table4<double>(n), {}, {}, 0};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        t.connection(i, j, k) = s * to_double(gamma_(i, j, k));
        for (int l = 0; l < n; ++l) t.curvature(i, j, k, l) = s * s * to_double(riemann_(i, j, k, l));
      }
  summarize_curvature(t);
  return t;
}

Rational ExactFrameTables::metric_defect() const {
  Rational worst = kZero;
  for (int i = 0; i < sc_.n; ++i)
    for (int j = 0; j < sc_.n; ++j)
      for (int k = 0; k < sc_.n; ++k) worst = std::max(worst, abs(gamma_(i, j, k) + gamma_(i, k, j)));
  return worst;
}

Rational ExactFrameTables::torsion_defect() const {
  Rational worst = kZero;
  for (int i = 0; i < sc_.n; ++i)
    for (int j = 0; j < sc_.n; ++j)
      for (int k = 0; k < sc_.n; ++k)
        worst = std::max(worst, abs(gamma_(i, j, k) - gamma_(j, i, k) - sc_.c(i, j, k)));
  return worst;
}

Rational ExactFrameTables::bianchi_defect() const {
  Rational worst = kZero;
  const int n = sc_.n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int m = 0; m < n; ++m)
          worst = std::max(worst, abs(riemann_(a, b, c, m) + riemann_(b, c, a, m) + riemann_(c, a, b, m)));
  return worst;
}

ExactFrameTables koszul_connection(Model m) { return ExactFrameTables(measure_structure_constants(m)); }

ExactFrameTables curvature_table(Model m) { return koszul_connection(m); }

double killing_residual(const ExactFrameTables& tables, const Eigen::VectorXd& u, const Eigen::VectorXd& v,
                        const Coords& p) {
  const auto reeb = reeb_index(tables.model());
  if (!reeb) throw Error(ErrorKind::DomainViolation, "model has no Reeb field");
  const int n = tables.size();
  const int t = *reeb;
  double sum = 0;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double g = to_double(tables.connection()(i, t, k));
      sum += g * (v[i] * u[k] + u[i] * v[k]);
    }
  return std::abs(sum) * tables.scale(p);
}

Eigen::VectorXd curvature_vector(const ExactFrameTables& tables, int a, int b, int c, const Coords& p) {
  const int n = tables.size();
  const double s = tables.scale(p);
  Eigen::VectorXd out(n);
  for (int m = 0; m < n; ++m) out[m] = s * s * to_double(tables.curvature()(a, b, c, m));
  return out;
}

double sasaki_identity_residual(const ExactFrameTables& tables, const Eigen::VectorXd& u, const Eigen::VectorXd& v,
                                const Coords& p) {
  const auto reeb = reeb_index(tables.model());
  if (!reeb) throw Error(ErrorKind::DomainViolation, "model has no Reeb field");
  const int n = tables.size();
  const int t = *reeb;
  Eigen::VectorXd lhs = Eigen::VectorXd::Zero(n);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      if (u[a] != 0 && v[c] != 0) lhs += u[a] * v[c] * curvature_vector(tables, a, t, c, p);
  Eigen::VectorXd rhs = -v[t] * u;
  rhs[t] += u.dot(v);
  return (lhs - rhs).norm();
}

}  // namespace pu21
