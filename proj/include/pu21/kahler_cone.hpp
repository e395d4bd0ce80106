#pragma once

// Complex structure and fundamental form on the Riemannian cone over H*,
// chart (x, y, t, r).

#include <Eigen/Core>

#include "pu21/fields.hpp"

namespace pu21 {

/// J X = Y, J Y = -X, J T = -r d_r, J (r d_r) = T on the unscaled frame.
Eigen::VectorXd complex_structure_apply(const Coords& p, const Eigen::VectorXd& v);

/// Omega_r = r dr ^ omega* + r^2 phi* ^ psi*.
TwoForm cone_fundamental_form();

/// r^2 omega* / 2, whose exterior derivative is Omega_r.
OneForm cone_potential_form();

/// |Omega_r(u, v) - g_r(J u, v)|.
double fundamental_form_residual(const Coords& p, const Eigen::VectorXd& u, const Eigen::VectorXd& v);

}  // namespace pu21
