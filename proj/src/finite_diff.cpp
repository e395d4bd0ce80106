#include "pu21/finite_diff.hpp"

namespace pu21::fd {

namespace {

Eigen::MatrixXd central_jacobian(const VectorFn& f, const Coords& p, double h) {
  const Eigen::Index n = p.size();
  Eigen::MatrixXd jac;
  for (Eigen::Index j = 0; j < n; ++j) {
    Coords plus = p, minus = p;
    plus[j] += h;
    minus[j] -= h;
    const Eigen::VectorXd col = (f(plus) - f(minus)) / (2 * h);
    if (j == 0) jac.resize(col.size(), n);
    jac.col(j) = col;
  }
  return jac;
}

double central_directional(const ScalarFn& f, const Coords& p, const Eigen::VectorXd& v, double h) {
  return (f(p + h * v) - f(p - h * v)) / (2 * h);
}

}  // namespace

Eigen::MatrixXd jacobian(const VectorFn& f, const Coords& p, double rel) {
  const double h = step(p, rel);
  return (4.0 * central_jacobian(f, p, h) - central_jacobian(f, p, 2 * h)) / 3.0;
}

double directional(const ScalarFn& f, const Coords& p, const Eigen::VectorXd& v, double rel) {
  const double h = step(p, rel);
  return (4.0 * central_directional(f, p, v, h) - central_directional(f, p, v, 2 * h)) / 3.0;
}

Eigen::MatrixXd partial(const MatrixFn& f, const Coords& p, int i, double rel) {
  const double h = step(p, rel);
  Coords plus = p, minus = p;
  plus[i] += h;
  minus[i] -= h;
  return (f(plus) - f(minus)) / (2 * h);
}

Eigen::MatrixXd second_partial(const MatrixFn& f, const Coords& p, int i, int j, double rel) {
  const double h = step(p, rel);
  if (i == j) {
    Coords plus = p, minus = p;
    plus[i] += h;
    minus[i] -= h;
    return (f(plus) - 2.0 * f(p) + f(minus)) / (h * h);
  }
  auto shifted = [&](double si, double sj) {
    Coords q = p;
    q[i] += si * h;
    q[j] += sj * h;
    return f(q);
  };
  return (shifted(1, 1) - shifted(1, -1) - shifted(-1, 1) + shifted(-1, -1)) / (4 * h * h);
}

Eigen::MatrixXd partial_extrapolated(const MatrixFn& f, const Coords& p, int i, double rel) {
  return (4.0 * partial(f, p, i, rel) - partial(f, p, i, 2 * rel)) / 3.0;
}

Eigen::MatrixXd second_partial_extrapolated(const MatrixFn& f, const Coords& p, int i, int j, double rel) {
  return (4.0 * second_partial(f, p, i, j, rel) - second_partial(f, p, i, j, 2 * rel)) / 3.0;
}

Eigen::MatrixXd hessian(const ScalarFn& f, const Coords& p, double rel) {
  const MatrixFn wrapped = [&](const Coords& q) { return Eigen::MatrixXd::Constant(1, 1, f(q)); };
  const Eigen::Index n = p.size();
  Eigen::MatrixXd hess(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      hess(i, j) = hess(j, i) = second_partial(wrapped, p, static_cast<int>(i), static_cast<int>(j), rel)(0, 0);
    }
  }
  return hess;
}

}  // namespace pu21::fd
