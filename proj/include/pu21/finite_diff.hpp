#pragma once

// Central finite differences. Steps are relative: h = rel * max(1, |p|).
// jacobian and directional apply one Richardson step, (4 D(h) - D(2h)) / 3,
// so their truncation error is O(h^4).

#include <algorithm>
#include <functional>

#include <Eigen/Core>

namespace pu21::fd {

using Coords = Eigen::VectorXd;
using VectorFn = std::function<Eigen::VectorXd(const Coords&)>;
using ScalarFn = std::function<double(const Coords&)>;
using MatrixFn = std::function<Eigen::MatrixXd(const Coords&)>;

inline double step(const Coords& p, double rel) { return rel * std::max(1.0, p.norm()); }

/// J(i, j) = d f_i / d x_j.
Eigen::MatrixXd jacobian(const VectorFn& f, const Coords& p, double rel);

/// Derivative of f along the direction v.
double directional(const ScalarFn& f, const Coords& p, const Eigen::VectorXd& v, double rel);

/// d/dx_i of a matrix-valued function.
Eigen::MatrixXd partial(const MatrixFn& f, const Coords& p, int i, double rel);

/// d^2/dx_i dx_j of a matrix-valued function (four-point stencil; i == j uses
/// the three-point second difference).
Eigen::MatrixXd second_partial(const MatrixFn& f, const Coords& p, int i, int j, double rel);

/// Richardson-extrapolated versions, (4 D(h) - D(2h)) / 3: truncation O(h^4).
Eigen::MatrixXd partial_extrapolated(const MatrixFn& f, const Coords& p, int i, double rel);
Eigen::MatrixXd second_partial_extrapolated(const MatrixFn& f, const Coords& p, int i, int j, double rel);

/// Real Hessian of a scalar function.
Eigen::MatrixXd hessian(const ScalarFn& f, const Coords& p, double rel);

}  // namespace pu21::fd
