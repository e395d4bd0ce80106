#pragma once

// Levi-Civita connection and curvature of a model in its orthonormal frame,
// computed exactly from the frame's structure constants.
//
// Conventions, used throughout the library:
//   [e_i, e_j] = s * sum_k c(i,j,k) e_k, s = structure_scale(model, p)
//   nabla_{e_i} e_j = s * sum_k Gamma(i,j,k) e_k
//   R(X,Y)Z = nabla_Y nabla_X Z - nabla_X nabla_Y Z + nabla_{[X,Y]} Z
//   R(e_a,e_b) e_c = s^2 * sum_n R(a,b,c,n) e_n
//   K(U,V) = g(R(U,V)U, V)
//   Ric(e_i) = (1/(n-1)) sum_{j != i} K(e_i,e_j),  scalar = (1/n) sum_i Ric(e_i)

#include <cstdint>
#include <vector>

#include <Eigen/Core>
#include <boost/rational.hpp>

#include "pu21/models.hpp"

namespace pu21 {

using Rational = boost::rational<std::int64_t>;

template <class T>
class Table3 {
 public:
  explicit Table3(int n = 0, T init = T{}) : n_(n), data_(static_cast<std::size_t>(n * n * n), init) {}
  int size() const noexcept { return n_; }
  T& operator()(int i, int j, int k) { return data_[index(i, j, k)]; }
  const T& operator()(int i, int j, int k) const { return data_[index(i, j, k)]; }

 private:
  std::size_t index(int i, int j, int k) const { return static_cast<std::size_t>((i * n_ + j) * n_ + k); }
  int n_;
  std::vector<T> data_;
};

template <class T>
class Table4 {
 public:
  explicit Table4(int n = 0, T init = T{}) : n_(n), data_(static_cast<std::size_t>(n * n * n * n), init) {}
  int size() const noexcept { return n_; }
  T& operator()(int a, int b, int c, int d) { return data_[index(a, b, c, d)]; }
  const T& operator()(int a, int b, int c, int d) const { return data_[index(a, b, c, d)]; }

 private:
  std::size_t index(int a, int b, int c, int d) const {
    return static_cast<std::size_t>(((a * n_ + b) * n_ + c) * n_ + d);
  }
  int n_;
  std::vector<T> data_;
};

// Compare rationals only against Rational values: boost 1.74 mixed-type
// equality recurses forever under C++20 rewritten comparisons.
inline const Rational kZero{0};

inline double to_double(const Rational& q) { return boost::rational_cast<double>(q); }

/// Nearest fraction with denominator <= max_den, if within tol of x.
std::optional<Rational> snap_rational(double x, double tol = 1e-6, std::int64_t max_den = 64);

struct StructureConstants {
  Model model;
  int n;
  Table3<Rational> c;
  /// e_m(s) = sigma[m] * s^2.
  std::vector<Rational> sigma;
};

/// Measures the structure constants at base_point(m) and asserts they are
/// the same (to 1e-8) at `checks` sampled points. Throws NonConstantStructure.
StructureConstants measure_structure_constants(Model m, double rel_step = kDefaultFdStep, int checks = 20,
                                               std::uint64_t seed = 0);

/// Frame tables evaluated at a point.
struct FrameTables {
  int n = 0;
  Table3<double> connection;
  Table4<double> curvature;
  Eigen::MatrixXd sectional;
  Eigen::VectorXd ricci;
  double scalar = 0;
};

/// Fills sectional, ricci and scalar from curvature.
void summarize_curvature(FrameTables& t);

class ExactFrameTables {
 public:
  explicit ExactFrameTables(StructureConstants sc);

  Model model() const noexcept { return sc_.model; }
  int size() const noexcept { return sc_.n; }
  const StructureConstants& structure() const noexcept { return sc_; }
  const Table3<Rational>& connection() const noexcept { return gamma_; }
  const Table4<Rational>& curvature() const noexcept { return riemann_; }

  /// Values in units of s^2.
  Rational sectional(int i, int j) const { return riemann_(i, j, i, j); }
  Rational ricci(int i) const;
  Rational scalar() const;

  double scale(const Coords& p) const { return structure_scale(sc_.model, p); }
  FrameTables at(const Coords& p) const;

  /// max |Gamma(i,j,k) + Gamma(i,k,j)|, zero for a metric connection.
  Rational metric_defect() const;
  /// max |Gamma(i,j,k) - Gamma(j,i,k) - c(i,j,k)|, zero when torsion-free.
  Rational torsion_defect() const;
  /// max over frame triples of |R(a,b)c + R(b,c)a + R(c,a)b|.
  Rational bianchi_defect() const;

 private:
  StructureConstants sc_;
  Table3<Rational> gamma_;
  Table4<Rational> riemann_;
};

/// Connection from the Koszul formula
///   -2 g(Z, nabla_Y X) = g([X,Z],Y) + g([Y,Z],X) + g([X,Y],Z).
ExactFrameTables koszul_connection(Model m);
/// Same tables; curvature is always filled in alongside the connection.
ExactFrameTables curvature_table(Model m);

/// |g(nabla_V T, U) + g(V, nabla_U T)| for constant frame combinations u, v.
double killing_residual(const ExactFrameTables& tables, const Eigen::VectorXd& u, const Eigen::VectorXd& v,
                        const Coords& p);

/// |R(U,T)V - (g(U,V) T - g(T,V) U)|_g for constant frame combinations u, v.
double sasaki_identity_residual(const ExactFrameTables& tables, const Eigen::VectorXd& u, const Eigen::VectorXd& v,
                                const Coords& p);

/// Frame coefficients of R(e_a,e_b)e_c at p.
Eigen::VectorXd curvature_vector(const ExactFrameTables& tables, int a, int b, int c, const Coords& p);

}  // namespace pu21
