#pragma once

// Independent curvature path: Christoffel symbols and curvature from finite
// differences of the coordinate metric, contracted against a frame.

#include <functional>
#include <vector>

#include <Eigen/Core>

#include "pu21/connection.hpp"
#include "pu21/fields.hpp"
#include "pu21/models.hpp"

namespace pu21 {

using MetricFn = std::function<Eigen::MatrixXd(const Coords&)>;

struct CoordinateGeometry {
  Eigen::MatrixXd g;
  Eigen::MatrixXd g_inv;
  /// christoffel(l, j, k) = Gamma^l_{jk}.
  Table3<double> christoffel;
  /// riemann(i, j, k, l): l-th component of R(d_i, d_j) d_k, sign convention of connection.hpp.
  Table4<double> riemann;
};

/// Metric derivatives are Richardson-extrapolated central differences;
/// second derivatives use ten times rel_step.
CoordinateGeometry coordinate_geometry(const MetricFn& metric, const Coords& p, double rel_step = kDefaultFdStep);

/// Coordinate components of nabla_U V at p.
Eigen::VectorXd covariant_derivative(const CoordinateGeometry& geo, const VectorField& u, const VectorField& v,
                                     const Coords& p, double rel_step = kDefaultFdStep);

/// Frame tables of an arbitrary metric and orthonormal frame.
FrameTables fd_frame_tables(const MetricFn& metric, const std::vector<VectorField>& frame,
                            const std::vector<OneForm>& coframe, const Coords& p, double rel_step = kDefaultFdStep);

FrameTables fd_curvature_oracle(Model m, const Coords& p, double rel_step = kDefaultFdStep);

/// FD versions of the residuals in connection.hpp, same arguments.
double fd_killing_residual(Model m, const Eigen::VectorXd& u, const Eigen::VectorXd& v, const Coords& p,
                           double rel_step = kDefaultFdStep);
double fd_sasaki_identity_residual(Model m, const Eigen::VectorXd& u, const Eigen::VectorXd& v, const Coords& p,
                                   double rel_step = kDefaultFdStep);

/// Sasakian residual of an arbitrary metric with orthonormal frame and Reeb index.
double fd_sasaki_identity_residual(const MetricFn& metric, const std::vector<VectorField>& frame,
                                   const std::vector<OneForm>& coframe, int reeb, const Eigen::VectorXd& u,
                                   const Eigen::VectorXd& v, const Coords& p, double rel_step = kDefaultFdStep);

}  // namespace pu21
