#pragma once

// The three model geometries with closed-form orthonormal frames, coframes and
// metrics:
//   hstar       H* with X = x d_x + y d_y, Y = x d_y - y d_x - 2|z|^2 d_t,
//               Reeb T = x d_y - y d_x, metric (phi*)^2 + (psi*)^2 + (omega*)^2;
//   cone        H* x R_{>0} with g_r = dr^2 + r^2 g*, frame X/r, Y/r, T/r, d_r;
//   heisenberg  the Heisenberg group with contact form omega = dt + 2x dy - 2y dx,
//               Reeb T = d_t and the contact metric 2(dx^2 + dy^2) + omega^2.

#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "pu21/fields.hpp"

namespace pu21 {

enum class Model { hstar, cone, heisenberg };

std::string_view to_string(Model m);
int dimension(Model m);
std::vector<std::string> frame_names(Model m);

/// Orthonormal frame of the model.
std::vector<VectorField> named_frame(Model m);
/// Dual coframe of named_frame.
std::vector<OneForm> named_coframe(Model m);
/// Coordinate metric matrix, from the closed-form coordinate expression.
Eigen::MatrixXd metric_eval(Model m, const Coords& p);

/// Index of the Reeb field in the frame (absent on the cone).
std::optional<int> reeb_index(Model m);

/// Frame structure coefficients are constants times this function: 1 on the
/// three-dimensional models, 1/r on the cone.
double structure_scale(Model m, const Coords& p);

/// Where structure constants are first measured.
Coords base_point(Model m);

// H* one-forms in (x, y, t).
OneForm phi_star();    // d(|z|^2) / (2|z|^2)
OneForm psi_star();    // -dt / (2|z|^2)
OneForm omega_star();  // (dt + 2x dy - 2y dx) / (2|z|^2)

/// The left-invariant Heisenberg fields X = d_x + 2y d_t, Y = d_y - 2x d_t, T = d_t.
std::vector<VectorField> heisenberg_generators();
/// dx^2 + dy^2 + (dt + 2x dy - 2y dx)^2, under which the generators are orthonormal.
Eigen::MatrixXd heisenberg_unit_generator_metric(const Coords& p);

}  // namespace pu21
