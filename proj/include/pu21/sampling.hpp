#pragma once

// Seeded samplers for property checks. All draws come from one mt19937_64.

#include <cstdint>
#include <random>

#include <Eigen/Core>

#include "pu21/boundary.hpp"
#include "pu21/models.hpp"
#include "pu21/moebius.hpp"

namespace pu21 {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = 0) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  cplx complex_in_annulus(double rmin, double rmax);
  Eigen::VectorXd unit_vector(int n);

  /// (x, y, t[, r]) with |z| in [0.5, 2], |t| <= 2, r in [0.5, 2]; the
  /// Heisenberg chart uses a box of half-width 1.
  Coords chart_point(Model m);

  BoundaryPoint finite_boundary_point();
  /// Heisenberg translation, dilation-rotation or inversion, at random.
  GroupElement generator();
  /// Parameters (a, z, t) of a normalized quadruple, clear of the excluded sets.
  NormalizedQuadruple normalized_quadruple();
  /// Generic quadruple of finite points.
  Quadruple quadruple();

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace pu21
