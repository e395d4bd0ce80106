#include "pu21/fd_oracle.hpp"

#include <Eigen/LU>

#include "pu21/error.hpp"

namespace pu21 {

CoordinateGeometry coordinate_geometry(const MetricFn& metric, const Coords& p, double rel_step) {
  const int n = static_cast<int>(p.size());
  CoordinateGeometry geo{metric(p), {}, Table3<double>(n), Table4<double>(n)};
  geo.g_inv = geo.g.inverse();

  std::vector<Eigen::MatrixXd> dg(n), dg_inv(n);
  std::vector<std::vector<Eigen::MatrixXd>> d2g(n, std::vector<Eigen::MatrixXd>(n));
  for (int i = 0; i < n; ++i) {
    dg[i] = fd::partial_extrapolated(metric, p, i, rel_step);
    dg_inv[i] = -geo.g_inv * dg[i] * geo.g_inv;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) d2g[i][j] = d2g[j][i] = fd::second_partial_extrapolated(metric, p, i, j, 10 * rel_step);

  // Lowered symbols [jk, m] and their derivatives.
  auto lowered = [&](int m, int j, int k) { return 0.5 * (dg[j](m, k) + dg[k](m, j) - dg[m](j, k)); };
  auto d_lowered = [&](int i, int m, int j, int k) {
    return 0.5 * (d2g[i][j](m, k) + d2g[i][k](m, j) - d2g[i][m](j, k));
  };

  Table4<double> d_gamma(n);  // d_gamma(i, l, j, k) = d_i Gamma^l_{jk}
  for (int l = 0; l < n; ++l)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double gamma = 0;
        for (int m = 0; m < n; ++m) gamma += geo.g_inv(l, m) * lowered(m, j, k);
        geo.christoffel(l, j, k) = gamma;
        for (int i = 0; i < n; ++i) {
          double d = 0;
          for (int m = 0; m < n; ++m) d += dg_inv[i](l, m) * lowered(m, j, k) + geo.g_inv(l, m) * d_lowered(i, m, j, k);
          d_gamma(i, l, j, k) = d;
        }
      }

  const auto& gam = geo.christoffel;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double r = d_gamma(i, l, j, k) - d_gamma(j, l, i, k);
          for (int m = 0; m < n; ++m) r += gam(m, j, k) * gam(l, i, m) - gam(m, i, k) * gam(l, j, m);
          geo.riemann(i, j, k, l) = -r;  // the library's sign convention
        }
  return geo;
}

Eigen::VectorXd covariant_derivative(const CoordinateGeometry& geo, const VectorField& u, const VectorField& v,
                                     const Coords& p, double rel_step) {
  const int n = static_cast<int>(p.size());
  const Eigen::VectorXd up = u(p), vp = v(p);
  Eigen::VectorXd out = fd::jacobian([&](const Coords& q) { return v(q); }, p, rel_step) * up;
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) out[k] += geo.christoffel(k, a, b) * up[a] * vp[b];
  return out;
}

FrameTables fd_frame_tables(const MetricFn& metric, const std::vector<VectorField>& frame,
                            const std::vector<OneForm>& coframe, const Coords& p, double rel_step) {
  const int n = static_cast<int>(frame.size());
  const CoordinateGeometry geo = coordinate_geometry(metric, p, rel_step);
  std::vector<Eigen::VectorXd> e(n), theta(n);
  for (int i = 0; i < n; ++i) {
    e[i] = frame[i](p);
    theta[i] = coframe[i](p);
  }

  FrameTables t{n, Table3<double>(n), Table4<double>(n), {}, {}, 0};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Eigen::VectorXd nabla = covariant_derivative(geo, frame[i], frame[j], p, rel_step);
      for (int k = 0; k < n; ++k) t.connection(i, j, k) = theta[k].dot(nabla);
    }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Eigen::VectorXd r = Eigen::VectorXd::Zero(n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
              const double w = e[a][i] * e[b][j] * e[c][k];
              if (w == 0) continue;
              for (int l = 0; l < n; ++l) r[l] += w * geo.riemann(i, j, k, l);
            }
        for (int m = 0; m < n; ++m) t.curvature(a, b, c, m) = theta[m].dot(r);
      }
  summarize_curvature(t);
  return t;
}

FrameTables fd_curvature_oracle(Model m, const Coords& p, double rel_step) {
  return fd_frame_tables([m](const Coords& q) { return metric_eval(m, q); }, named_frame(m), named_coframe(m), p,
                         rel_step);
}

double fd_killing_residual(Model m, const Eigen::VectorXd& u, const Eigen::VectorXd& v, const Coords& p,
                           double rel_step) {
  const auto reeb = reeb_index(m);
  if (!reeb) throw Error(ErrorKind::DomainViolation, "model has no Reeb field");
  const MetricFn metric = [m](const Coords& q) { return metric_eval(m, q); };
  const CoordinateGeometry geo = coordinate_geometry(metric, p, rel_step);
  const auto frame = named_frame(m);
  const VectorField uf = VectorField::combination(frame, u), vf = VectorField::combination(frame, v);
  const VectorField& reeb_field = frame[static_cast<std::size_t>(*reeb)];
  const Eigen::VectorXd nv = covariant_derivative(geo, vf, reeb_field, p, rel_step);
  const Eigen::VectorXd nu = covariant_derivative(geo, uf, reeb_field, p, rel_step);
  return std::abs(nv.dot(geo.g * uf(p)) + vf(p).dot(geo.g * nu));
}

double fd_sasaki_identity_residual(const MetricFn& metric, const std::vector<VectorField>& frame,
                                   const std::vector<OneForm>& coframe, int reeb, const Eigen::VectorXd& u,
                                   const Eigen::VectorXd& v, const Coords& p, double rel_step) {
  const int n = static_cast<int>(frame.size());
  const FrameTables t = fd_frame_tables(metric, frame, coframe, p, rel_step);
  Eigen::VectorXd lhs = Eigen::VectorXd::Zero(n);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      for (int m = 0; m < n; ++m) lhs[m] += u[a] * v[c] * t.curvature(a, reeb, c, m);
  Eigen::VectorXd rhs = -v[reeb] * u;
  rhs[reeb] += u.dot(v);
  return (lhs - rhs).norm();
}

double fd_sasaki_identity_residual(Model m, const Eigen::VectorXd& u, const Eigen::VectorXd& v, const Coords& p,
                                   double rel_step) {
  const auto reeb = reeb_index(m);
  if (!reeb) throw Error(ErrorKind::DomainViolation, "model has no Reeb field");
  return fd_sasaki_identity_residual([m](const Coords& q) { return metric_eval(m, q); }, named_frame(m),
                                     named_coframe(m), *reeb, u, v, p, rel_step);
}

}  // namespace pu21
