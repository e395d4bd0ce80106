#pragma once

// Contact-geometric checks on H*: the volume identity and the Koranyi
// isometry onto the unit tangent bundle of the hyperbolic plane.

#include <Eigen/Core>

#include "pu21/fields.hpp"

namespace pu21 {

/// |(omega* ^ d omega*)(d_t, d_x, d_y) - 1/|z|^4| at p = (x, y, t).
double volume_identity_residual(const Coords& p, double rel_step = kDefaultFdStep);

/// (d xi^2 + d eta^2)/(4 xi^2) + (d phi - d eta/(2 xi))^2 at (xi, eta, phi).
Eigen::Matrix3d unit_tangent_metric(const Eigen::Vector3d& q);

/// Max-entry residual between g* and the pullback of unit_tangent_metric under
/// the Koranyi map, Jacobian by central differences.
double koranyi_isometry_residual(const Coords& p, double rel_step = kDefaultFdStep);

}  // namespace pu21
