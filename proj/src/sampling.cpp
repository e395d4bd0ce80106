#include "pu21/sampling.hpp"

#include <cmath>
#include <numbers>

namespace pu21 {

cplx Sampler::complex_in_annulus(double rmin, double rmax) {
  return std::polar(uniform(rmin, rmax), uniform(-std::numbers::pi, std::numbers::pi));
}

Eigen::VectorXd Sampler::unit_vector(int n) {
  std::normal_distribution<double> normal;
  Eigen::VectorXd v(n);
  do {
    for (int i = 0; i < n; ++i) v[i] = normal(rng_);
  } while (v.norm() < 1e-3);
  return v.normalized();
}

Coords Sampler::chart_point(Model m) {
  if (m == Model::heisenberg) {
    Coords p(3);
    for (int i = 0; i < 3; ++i) p[i] = uniform(-1.0, 1.0);
    return p;
  }
  Coords p(dimension(m));
  const cplx z = complex_in_annulus(0.5, 2.0);
  p[0] = z.real();
  p[1] = z.imag();
  p[2] = uniform(-2.0, 2.0);
  if (m == Model::cone) p[3] = uniform(0.5, 2.0);
  return p;
}

BoundaryPoint Sampler::finite_boundary_point() {
  const cplx z = complex_in_annulus(0.2, 2.0);
  return BoundaryPoint::finite(z, uniform(-2.0, 2.0));
}

GroupElement Sampler::generator() {
  switch (std::uniform_int_distribution<int>(0, 2)(rng_)) {
    case 0: return heis_translation(complex_in_annulus(0.0, 1.0), uniform(-1.0, 1.0));
    case 1: return dilation_rotation(complex_in_annulus(0.8, 1.25));
    default: return inversion();
  }
}

NormalizedQuadruple Sampler::normalized_quadruple() {
  const double a = uniform(-1.2, 1.2);
  const cplx z = complex_in_annulus(0.3, 2.0);
  double t;
  do {
    t = uniform(-2.0, 2.0);
  } while (std::abs(t / std::norm(z) - std::tan(a)) < 0.1);
  return NormalizedQuadruple(a, z, t);
}

Quadruple Sampler::quadruple() {
  for (;;) {
    Quadruple q{finite_boundary_point(), finite_boundary_point(), finite_boundary_point(), finite_boundary_point()};
    bool distinct = true;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (std::abs(q[i].z() - q[j].z()) + std::abs(q[i].t() - q[j].t()) < 0.1) distinct = false;
    if (distinct) return q;
  }
}

}  // namespace pu21
