#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "pu21/config_maps.hpp"
#include "pu21/connection.hpp"
#include "pu21/contact.hpp"
#include "pu21/cr_structure.hpp"
#include "pu21/error.hpp"
#include "pu21/fd_oracle.hpp"
#include "pu21/group_models.hpp"
#include "pu21/kahler_cone.hpp"
#include "pu21/moebius.hpp"
#include "pu21/sampling.hpp"

namespace pu21::cli {

namespace {

// Gates for rows computed by finite differences. They do not move with --tol.
constexpr double kCurvatureFdGate = 1e-4;
constexpr double kResidualFdGate = 1e-5;
constexpr double kFormGate = 1e-6;
constexpr double kLeviFdGate = 1e-5;
constexpr double kPushforwardGate = 1e-5;
constexpr double kAntiholomorphicFloor = 0.01;
constexpr double kKoranyiGate = 1e-6;
constexpr double kLargeFdStep = 1e-3;

Json number(double x) { return sig12(x); }

Json complex_json(cplx z) { return Json::array({sig12(z.real()), sig12(z.imag())}); }

Json vector_json(const Eigen::VectorXd& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(sig12(v[i]));
  return out;
}

Json point_json(const BoundaryPoint& p) {
  if (p.is_infinity()) return "inf";
  return Json{{"z", complex_json(p.z())}, {"t", number(p.t())}};
}

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

BoundaryPoint parse_point(const Json& entry, std::size_t index) {
  const std::string where = "points[" + std::to_string(index) + "]";
  if (entry.is_string()) {
    if (entry.get<std::string>() != "inf") parse_error(where + ": the only string entry allowed is \"inf\"");
    return BoundaryPoint::infinity();
  }
  if (!entry.is_object()) parse_error(where + ": expected {\"z\": [re, im], \"t\": num} or \"inf\"");
  if (!entry.contains("z") || !entry.contains("t")) parse_error(where + ": missing \"z\" or \"t\"");
  const Json& z = entry["z"];
  if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
    parse_error(where + ".z: expected [re, im]");
  if (!entry["t"].is_number()) parse_error(where + ".t: expected a number");
  const double re = z[0].get<double>(), im = z[1].get<double>(), t = entry["t"].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im) || !std::isfinite(t)) parse_error(where + ": non-finite coordinate");
  return BoundaryPoint::finite(cplx(re, im), t);
}

// Max-accumulating table of expected-versus-computed rows.
class Rows {
 public:
  void add(const std::string& section, const std::string& quantity, const std::string& method, Json expected,
           Json computed, double error, double gate, int samples = 1) {
    const bool ok = std::isfinite(error) && error <= gate;
    push(section, quantity, method, std::move(expected), std::move(computed), error, "<=", gate, samples, ok);
  }

  void add_floor(const std::string& section, const std::string& quantity, const std::string& method,
                 double min_value, double floor, int samples) {
    const bool ok = samples == 0 || min_value > floor;
    push(section, quantity, method, "> " + format_floor(floor), number(min_value), min_value, ">", floor, samples,
         ok);
  }

  bool pass() const noexcept { return pass_; }
  Json take() { return std::move(rows_); }

 private:
  static std::string format_floor(double x) {
    std::ostringstream s;
    s << std::setprecision(12) << x;
    return s.str();
  }

  void push(const std::string& section, const std::string& quantity, const std::string& method, Json expected,
            Json computed, double error, const char* cmp, double gate, int samples, bool ok) {
    rows_.push_back(Json{{"section", section},
                         {"quantity", quantity},
                         {"method", method},
                         {"expected", std::move(expected)},
                         {"computed", std::move(computed)},
                         {"error", number(error)},
                         {"check", cmp},
                         {"gate", number(gate)},
                         {"samples", samples},
                         {"pass", ok}});
    pass_ = pass_ && ok;
  }

  Json rows_ = Json::array();
  bool pass_ = true;
};

struct MaxOf {
  double value = 0;
  void operator()(double x) { value = std::isnan(x) ? x : std::max(value, x); }
};

double max_abs(const Eigen::VectorXd& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

Json settings_json(const Options& opts) {
  return Json{{"tol", number(opts.tol)},
              {"seed", opts.seed},
              {"samples", opts.samples},
              {"fd_step", number(opts.fd_step)}};
}

std::string scalar_text(const Json& j);

Json warnings_json(const Options& opts, bool uses_fd) {
  Json w = Json::array();
  if (opts.samples == 0) w.push_back("samples = 0: sampled checks have no data and pass vacuously");
  if (uses_fd && opts.fd_step >= kLargeFdStep)
    w.push_back("fd-step " + scalar_text(Json(opts.fd_step)) +
                " is large: finite-difference truncation error grows with the step and FD rows are expected to fail");
  return w;
}

// ---------------------------------------------------------------- curvature

struct CurvatureComponent {
  int a, b, c;
  std::string name;
  Eigen::VectorXd expected;
};

std::vector<CurvatureComponent> hstar_reference_table() {
  enum { X, Y, T };
  auto v = [](double x, double y, double t) { return Eigen::VectorXd(Eigen::Vector3d(x, y, t)); };
  return {
      {X, Y, X, "R(X,Y)X", v(0, -7, 0)}, {X, T, X, "R(X,T)X", v(0, 0, 1)},  {Y, T, X, "R(Y,T)X", v(0, 0, 0)},
      {X, Y, Y, "R(X,Y)Y", v(1, 0, 0)},  {X, T, Y, "R(X,T)Y", v(0, 0, 0)},  {Y, T, Y, "R(Y,T)Y", v(0, 0, 1)},
      {X, Y, T, "R(X,Y)T", v(4, 0, 0)},  {X, T, T, "R(X,T)T", v(-1, 0, 0)}, {Y, T, T, "R(Y,T)T", v(0, -1, 0)},
  };
}

Eigen::VectorXd fd_component(const FrameTables& t, int a, int b, int c) {
  Eigen::VectorXd out(t.n);
  for (int m = 0; m < t.n; ++m) out[m] = t.curvature(a, b, c, m);
  return out;
}

void hstar_rows(Rows& rows, Sampler& s, const Options& opts) {
  const ExactFrameTables exact = curvature_table(Model::hstar);
  const Coords base = base_point(Model::hstar);
  std::vector<FrameTables> fd;
  for (int k = 0; k < opts.samples; ++k) fd.push_back(fd_curvature_oracle(Model::hstar, s.chart_point(Model::hstar), opts.fd_step));

  for (const auto& comp : hstar_reference_table()) {
    const Eigen::VectorXd e = curvature_vector(exact, comp.a, comp.b, comp.c, base);
    rows.add("hstar", comp.name, "exact", vector_json(comp.expected), vector_json(e), max_abs(e - comp.expected),
             opts.tol);
    MaxOf err;
    for (const auto& t : fd) err(max_abs(fd_component(t, comp.a, comp.b, comp.c) - comp.expected));
    rows.add("hstar", comp.name, "fd", vector_json(comp.expected), fd.empty() ? Json() : vector_json(fd_component(fd[0], comp.a, comp.b, comp.c)),
             err.value, kCurvatureFdGate, opts.samples);
  }

  const FrameTables at = exact.at(base);
  const std::vector<std::string> names = frame_names(Model::hstar);
  const std::vector<std::pair<std::pair<int, int>, double>> sectional{{{0, 1}, -7}, {{0, 2}, 1}, {{1, 2}, 1}};
  for (const auto& [plane, expected] : sectional) {
    const auto [i, j] = plane;
    const std::string q = "K(" + names[i] + "," + names[j] + ")";
    rows.add("hstar", q, "exact", number(expected), number(at.sectional(i, j)), std::abs(at.sectional(i, j) - expected),
             opts.tol);
    MaxOf err;
    for (const auto& t : fd) err(std::abs(t.sectional(i, j) - expected));
    rows.add("hstar", q, "fd", number(expected), fd.empty() ? Json() : number(fd[0].sectional(i, j)), err.value,
             kCurvatureFdGate, opts.samples);
  }
  const Eigen::Vector3d ricci(-3, -3, 1);
  for (int i = 0; i < 3; ++i) {
    const std::string q = "Ric(" + names[i] + ")";
    rows.add("hstar", q, "exact", number(ricci[i]), number(at.ricci[i]), std::abs(at.ricci[i] - ricci[i]), opts.tol);
    MaxOf err;
    for (const auto& t : fd) err(std::abs(t.ricci[i] - ricci[i]));
    rows.add("hstar", q, "fd", number(ricci[i]), fd.empty() ? Json() : number(fd[0].ricci[i]), err.value,
             kCurvatureFdGate, opts.samples);
  }
  const double scalar = -5.0 / 3.0;
  rows.add("hstar", "scalar", "exact", number(scalar), number(at.scalar), std::abs(at.scalar - scalar), opts.tol);
  MaxOf err;
  for (const auto& t : fd) err(std::abs(t.scalar - scalar));
  rows.add("hstar", "scalar", "fd", number(scalar), fd.empty() ? Json() : number(fd[0].scalar), err.value,
           kCurvatureFdGate, opts.samples);
}

void cone_rows(Rows& rows, Sampler& s, const Options& opts) {
  const ExactFrameTables exact = curvature_table(Model::cone);
  const std::vector<std::string> names = frame_names(Model::cone);
  for (double r : {0.5, 1.0, 2.0}) {
    std::ostringstream sec;
    sec << "cone r=" << r;
    const double r2 = r * r;
    Coords base = base_point(Model::cone);
    base[3] = r;
    const FrameTables at = exact.at(base);
    std::vector<FrameTables> fd;
    for (int k = 0; k < opts.samples; ++k) {
      Coords p = s.chart_point(Model::cone);
      p[3] = r;
      fd.push_back(fd_curvature_oracle(Model::cone, p, opts.fd_step));
    }

    auto emit = [&](const std::string& q, double expected, double exact_value, auto fd_value) {
      rows.add(sec.str(), q, "exact", number(expected), number(exact_value), std::abs(exact_value - expected), opts.tol);
      MaxOf err;
      for (const auto& t : fd) err(std::abs(fd_value(t) - expected));
      rows.add(sec.str(), q, "fd", number(expected), fd.empty() ? Json() : number(fd_value(fd[0])), err.value,
               kCurvatureFdGate, opts.samples);
    };

    const std::vector<std::tuple<int, int, double>> planes{{0, 1, -8 / r2}, {2, 3, -1 / r2}, {0, 2, 0},
                                                           {0, 3, 0},       {1, 2, 0},       {1, 3, 0}};
    for (const auto& [i, j, expected] : planes)
      emit("K(" + names[i] + "," + names[j] + ")", expected, at.sectional(i, j),
           [i = i, j = j](const FrameTables& t) { return t.sectional(i, j); });
    const Eigen::Vector4d ricci = Eigen::Vector4d(-8, -8, -1, -1) / (3 * r2);
    for (int i = 0; i < 4; ++i)
      emit("Ric(" + names[i] + ")", ricci[i], at.ricci[i], [i](const FrameTables& t) { return t.ricci[i]; });
    emit("scalar", -3 / (2 * r2), at.scalar, [](const FrameTables& t) { return t.scalar; });
  }
}

void heisenberg_rows(Rows& rows, Sampler& s, const Options& opts) {
  const ExactFrameTables exact = curvature_table(Model::heisenberg);
  const FrameTables at = exact.at(base_point(Model::heisenberg));
  rows.add("heisenberg", "K(X,Y)", "exact", number(-3), number(at.sectional(0, 1)), std::abs(at.sectional(0, 1) + 3),
           opts.tol);
  MaxOf ex, fd;
  for (int k = 0; k < opts.samples; ++k) {
    const Coords p = s.chart_point(Model::heisenberg);
    const Eigen::VectorXd u = s.unit_vector(3), v = s.unit_vector(3);
    ex(sasaki_identity_residual(exact, u, v, p));
    fd(fd_sasaki_identity_residual(Model::heisenberg, u, v, p, opts.fd_step));
  }
  rows.add("heisenberg", "Sasakian identity", "exact", number(0), number(ex.value), ex.value, opts.tol, opts.samples);
  rows.add("heisenberg", "Sasakian identity", "fd", number(0), number(fd.value), fd.value, kResidualFdGate,
           opts.samples);
}

// ---------------------------------------------------------------- residuals

void contact_rows(Rows& rows, Sampler& s, const Options& opts) {
  for (Model m : {Model::hstar, Model::heisenberg}) {
    const ExactFrameTables exact = koszul_connection(m);
    MaxOf kill, kill_fd, sas, sas_fd;
    for (int k = 0; k < opts.samples; ++k) {
      const Coords p = s.chart_point(m);
      const Eigen::VectorXd u = s.unit_vector(3), v = s.unit_vector(3);
      kill(killing_residual(exact, u, v, p));
      kill_fd(fd_killing_residual(m, u, v, p, opts.fd_step));
      sas(sasaki_identity_residual(exact, u, v, p));
      sas_fd(fd_sasaki_identity_residual(m, u, v, p, opts.fd_step));
    }
    const std::string sec(to_string(m));
    rows.add(sec, "Killing residual", "exact", number(0), number(kill.value), kill.value, opts.tol, opts.samples);
    rows.add(sec, "Killing residual", "fd", number(0), number(kill_fd.value), kill_fd.value, kResidualFdGate,
             opts.samples);
    if (m == Model::hstar) {
      rows.add(sec, "Sasakian identity", "exact", number(0), number(sas.value), sas.value, opts.tol, opts.samples);
      rows.add(sec, "Sasakian identity", "fd", number(0), number(sas_fd.value), sas_fd.value, kResidualFdGate,
               opts.samples);
    }
  }

  MaxOf vol, kor;
  for (int k = 0; k < opts.samples; ++k) {
    const Coords p = s.chart_point(Model::hstar);
    vol(volume_identity_residual(p, opts.fd_step) * std::pow(p.head<2>().squaredNorm(), 2));
    kor(koranyi_isometry_residual(p, opts.fd_step));
  }
  rows.add("hstar", "volume identity |z|^4 residual", "fd", number(0), number(vol.value), vol.value, kFormGate,
           opts.samples);
  rows.add("hstar", "Koranyi pullback residual", "fd", number(0), number(kor.value), kor.value, kKoranyiGate,
           opts.samples);
}

void kahler_rows(Rows& rows, Sampler& s, const Options& opts) {
  const TwoForm omega = cone_fundamental_form();
  const TwoForm d_potential = exterior_d(cone_potential_form(), opts.fd_step);
  const auto frame = named_frame(Model::cone);
  MaxOf closed, exact, compat;
  for (int k = 0; k < opts.samples; ++k) {
    const Coords p = s.chart_point(Model::cone);
    const VectorField u = VectorField::combination(frame, s.unit_vector(4));
    const VectorField v = VectorField::combination(frame, s.unit_vector(4));
    const VectorField w = VectorField::combination(frame, s.unit_vector(4));
    closed(std::abs(exterior_d(omega, u, v, w, p, opts.fd_step)));
    exact((d_potential(p) - omega(p)).cwiseAbs().maxCoeff());
    compat(fundamental_form_residual(p, u(p), v(p)));
  }
  rows.add("cone", "d Omega on frame triples", "fd", number(0), number(closed.value), closed.value, kFormGate,
           opts.samples);
  rows.add("cone", "Omega - d(r^2 omega*/2)", "fd", number(0), number(exact.value), exact.value, kFormGate,
           opts.samples);
  rows.add("cone", "Omega(u,v) - g(Ju,v)", "exact", number(0), number(compat.value), compat.value, opts.tol,
           opts.samples);
}

void levi_rows(Rows& rows, Sampler& s, const Options& opts) {
  MaxOf rho, rho_fd, var, var_fd;
  double min_value = std::numeric_limits<double>::infinity();
  for (int k = 0; k < opts.samples; ++k) {
    const auto [z1, z2] = psi_embed(HStarElement(s.complex_in_annulus(0.5, 2), s.uniform(-2, 2)));
    const LeviValue l = levi_rho_star(z1, z2);
    rho(std::abs(l.closed_form - 1));
    rho_fd(std::abs(l.finite_difference - 1));
    const VarietyPoint v = g_map(b0(s.normalized_quadruple()));
    const LeviValue lv = levi_variety(v);
    const double expected = 4 * std::pow(std::cos(v.a()), 2);
    var(std::abs(lv.closed_form - expected));
    var_fd(std::abs(lv.finite_difference - expected));
    min_value = std::min({min_value, l.finite_difference, lv.finite_difference});
  }
  rows.add("levi", "|L(rho*) - 1|", "exact", number(0), number(rho.value), rho.value, opts.tol, opts.samples);
  rows.add("levi", "|L(rho*) - 1|", "fd", number(0), number(rho_fd.value), rho_fd.value, kLeviFdGate, opts.samples);
  rows.add("levi", "|L(F) - 4cos^2 a|", "exact", number(0), number(var.value), var.value, opts.tol, opts.samples);
  rows.add("levi", "|L(F) - 4cos^2 a|", "fd", number(0), number(var_fd.value), var_fd.value, kLeviFdGate,
           opts.samples);
  rows.add_floor("levi", "min Levi value", "fd", opts.samples == 0 ? 0.0 : min_value, 0.0, opts.samples);
}

void pushforward_rows(Rows& rows, Sampler& s, const Options& opts) {
  MaxOf g_res, f_res;
  for (int k = 0; k < opts.samples; ++k) {
    const ConePointPrime c = b0(s.normalized_quadruple());
    g_res(cr_equivalence_residual(g_map(c)));
    f_res(pushforward(f_chart_map(), bold_Z(c)).antiholomorphic_part().norm());
  }
  rows.add("pushforward", "|G_*(Z) - kZ|", "fd", number(0), number(g_res.value), g_res.value, kPushforwardGate,
           opts.samples);
  rows.add("pushforward", "(0,1) part of F_*(Z)", "fd", number(0), number(f_res.value), f_res.value, kPushforwardGate,
           opts.samples);
  const std::vector<ConePointPrime> fixed{ConePointPrime(1.0, 1, 1), ConePointPrime(cplx(0, 1), 0.5, 2),
                                          ConePointPrime(-2.0, 0, 0.5), ConePointPrime(cplx(1, 1), -1, 3)};
  double min_anti = std::numeric_limits<double>::infinity();
  for (const auto& c : fixed)
    min_anti = std::min(min_anti, pushforward(f_chart_map(), bold_W(c)).antiholomorphic_part().norm());
  rows.add_floor("pushforward", "(0,1) part of F_*(W), fixed set", "fd", min_anti, kAntiholomorphicFloor,
                 static_cast<int>(fixed.size()));
}

// ---------------------------------------------------------------- round trips

double normalized_distance(const NormalizedQuadruple& x, const NormalizedQuadruple& y) {
  return std::abs(x.a() - y.a()) + std::abs(x.z() - y.z()) + std::abs(x.t() - y.t());
}

double cone_distance(const ConePointPrime& x, const ConePointPrime& y) {
  return std::abs(x.z() - y.z()) + std::abs(x.t() - y.t()) + std::abs(x.r() - y.r());
}

double variety_distance(const VarietyPoint& x, const VarietyPoint& y) {
  return std::abs(x.w1() - y.w1()) + std::abs(x.w2() - y.w2()) + std::abs(x.a() - y.a());
}

double hstar_distance(const HStarElement& x, const HStarElement& y) {
  return std::abs(x.z() - y.z()) + std::abs(x.t() - y.t());
}

void cross_ratio_rows(Rows& rows, Sampler& s, const Options& opts) {
  MaxOf modulus, real, crv, inv_a, inv_x;
  for (int k = 0; k < opts.samples; ++k) {
    const Quadruple q = s.quadruple();
    const CrossRatioTriple c = cross_ratio_triple(q);
    const auto [r1, r2] = xratio_identity_residuals(c);
    const double a = cartan(Triple{q[0], q[1], q[2]});
    modulus(r1);
    real(r2);
    crv(crv_residual(c.x1, c.x2, a));

    GroupElement g;
    for (int j = 0; j < 3; ++j) g = s.generator() * g;
    const Quadruple moved{apply(g, q[0]), apply(g, q[1]), apply(g, q[2]), apply(g, q[3])};
    const CrossRatioTriple cm = cross_ratio_triple(moved);
    inv_a(angle_distance(cartan(Triple{moved[0], moved[1], moved[2]}), a));
    inv_x(std::max({std::abs(cm.x1 - c.x1), std::abs(cm.x2 - c.x2), std::abs(cm.x3 - c.x3)}));
  }
  rows.add("cross-ratios", "|X2| = |X1||X3|", "direct", number(0), number(modulus.value), modulus.value, opts.tol,
           opts.samples);
  rows.add("cross-ratios", "real identity", "direct", number(0), number(real.value), real.value, opts.tol, opts.samples);
  rows.add("cross-ratios", "variety equation", "direct", number(0), number(crv.value), crv.value, opts.tol,
           opts.samples);
  rows.add("cross-ratios", "invariance of A", "direct", number(0), number(inv_a.value), inv_a.value, opts.tol,
           opts.samples);
  rows.add("cross-ratios", "invariance of X1, X2, X3", "direct", number(0), number(inv_x.value), inv_x.value, opts.tol,
           opts.samples);
}

void bijection_rows(Rows& rows, Sampler& s, const Options& opts) {
  MaxOf b0_rt, b1_rt, g_rt, g_inv_rt, f_rt, var_rt, psi_rt, kor_rt, diag_g, diag_f;
  for (int k = 0; k < opts.samples; ++k) {
    const NormalizedQuadruple n = s.normalized_quadruple();
    const ConePointPrime c = b0(n);
    b0_rt(normalized_distance(b0_inv(c), n));
    b1_rt(normalized_distance(b1_inv(b1(n)), n));
    const VarietyPoint v = g_map(c);
    g_rt(cone_distance(g_inv(v), c));
    g_inv_rt(variety_distance(g_map(g_inv(v)), v));
    f_rt(cone_distance(f_inv(f_map(c)), c));
    var_rt(normalized_distance(variety_inverse(v), n));
    diag_g(variety_distance(v, variety_from_quadruple(n.quadruple())));
    const B1Point lhs = f_map(c), rhs = b1(b0_inv(c));
    diag_f(std::abs(lhs.zeta - rhs.zeta) + std::abs(lhs.w - rhs.w));

    const HStarElement h(s.complex_in_annulus(0.2, 3), s.uniform(-3, 3));
    psi_rt(hstar_distance(psi_inv(psi_iso(h)), h));
    kor_rt(hstar_distance(koranyi_inv(koranyi(h)), h));
  }
  const std::vector<std::pair<std::string, double>> entries{
      {"b0_inv o b0", b0_rt.value},
      {"b1_inv o b1", b1_rt.value},
      {"g_inv o g_map", g_rt.value},
      {"g_map o g_inv", g_inv_rt.value},
      {"f_inv o f_map", f_rt.value},
      {"variety_inverse o g_map o b0", var_rt.value},
      {"psi_inv o psi_iso", psi_rt.value},
      {"koranyi_inv o koranyi", kor_rt.value},
      {"g_map o b0 = variety_from_quadruple", diag_g.value},
      {"f_map = b1 o b0_inv", diag_f.value},
  };
  for (const auto& [name, err] : entries)
    rows.add("bijections", name, "direct", number(0), number(err), err, opts.tol, opts.samples);
}

CommandResult finish(const std::string& command, const Options& opts, Json warnings, Rows& rows) {
  const bool ok = rows.pass();
  Json report{{"command", command}, {"settings", settings_json(opts)}, {"warnings", std::move(warnings)}};
  report["rows"] = rows.take();
  report["pass"] = ok;
  return {std::move(report), ok ? kPass : kNumericFailure};
}

// ---------------------------------------------------------------- rendering

std::string scalar_text(const Json& j) {
  if (j.is_null()) return "-";
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer() || j.is_number_unsigned()) return j.dump();
  if (j.is_number()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", j.get<double>());
    return buf;
  }
  std::string out = "[";
  for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + scalar_text(j[i]);
  return out + "]";
}

bool is_flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  return std::all_of(j.begin(), j.end(), [](const Json& e) { return is_flat(e) && !e.is_array(); });
}

void render_rows(const Json& rows, std::ostringstream& out) {
  const std::vector<std::string> cols{"section", "quantity", "method", "expected", "computed", "error", "check", "gate"};
  std::vector<std::vector<std::string>> cells{{}};
  for (const auto& c : cols) cells[0].push_back(c);
  cells[0].push_back("verdict");
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (const auto& c : cols) line.push_back(scalar_text(row[c]));
    line.push_back(row["pass"].get<bool>() ? "PASS" : "FAIL");
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& line : cells)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  for (const auto& line : cells) {
    out << "  ";
    for (std::size_t i = 0; i < line.size(); ++i) {
      out << line[i];
      if (i + 1 < line.size()) out << std::string(width[i] - line[i].size() + 2, ' ');
    }
    out << '\n';
  }
}

void render(const Json& j, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (it.key() == "rows" && v.is_array()) {
      out << pad << "rows:\n";
      render_rows(v, out);
    } else if (is_flat(v)) {
      out << pad << it.key() << ": " << scalar_text(v) << '\n';
    } else if (v.is_array()) {
      out << pad << it.key() << ":\n";
      for (const auto& e : v) {
        if (is_flat(e)) {
          out << pad << "  - " << scalar_text(e) << '\n';
        } else {
          out << pad << "  -\n";
          render(e, indent + 4, out);
        }
      }
    } else {
      out << pad << it.key() << ":\n";
      render(v, indent + 2, out);
    }
  }
}

}  // namespace

double sig12(double x) {
  if (!std::isfinite(x) || x == 0) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string render_text(const Json& report) {
  std::ostringstream out;
  render(report, 0, out);
  return out.str();
}

QuadrupleDocument parse_quadruple_document(const Json& doc) {
  if (!doc.is_object()) parse_error("document must be an object with a \"points\" list");
  if (!doc.contains("points") || !doc["points"].is_array()) parse_error("missing \"points\" list");
  const Json& pts = doc["points"];
  if (pts.size() != 4) parse_error("\"points\" must have exactly 4 entries, found " + std::to_string(pts.size()));
  std::optional<std::string> label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) parse_error("\"label\" must be a string");
    label = doc["label"].get<std::string>();
  }
  QuadrupleDocument out{label, {parse_point(pts[0], 0), parse_point(pts[1], 1), parse_point(pts[2], 2),
                                parse_point(pts[3], 3)}};
  try {
    require_distinct(out.points);
  } catch (const Error& e) {
    parse_error(std::string("points must be distinct (") + e.what() + ")");
  }
  return out;
}

QuadrupleDocument read_quadruple_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    parse_error(path + ": " + e.what());
  }
  return parse_quadruple_document(doc);
}

std::vector<std::string> validate(const Options& opts) {
  std::vector<std::string> problems;
  if (!(opts.tol > 0) || !std::isfinite(opts.tol)) problems.push_back("--tol must be a positive number");
  if (opts.samples < 0) problems.push_back("--samples must be non-negative");
  if (!(opts.fd_step > 0) || !(opts.fd_step < 1)) problems.push_back("--fd-step must lie in (0, 1)");
  return problems;
}

CommandResult cmd_invariants(const QuadrupleDocument& doc, const Options& opts) {
  const Quadruple& q = doc.points;
  Json report{{"command", "invariants"}};
  if (doc.label) report["label"] = *doc.label;
  Json pts = Json::array();
  for (const auto& p : q) pts.push_back(point_json(p));
  report["points"] = pts;
  report["tol"] = number(opts.tol);

  Json cartans;
  const std::vector<std::array<int, 3>> triples{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (const auto& [i, j, k] : triples)
    cartans[std::to_string(i + 1) + std::to_string(j + 1) + std::to_string(k + 1)] = number(cartan(Triple{q[i], q[j], q[k]}));
  report["cartan"] = cartans;

  const CrossRatioTriple c = cross_ratio_triple(q);
  report["cross_ratios"] = Json{{"X1", complex_json(c.x1)}, {"X2", complex_json(c.x2)}, {"X3", complex_json(c.x3)}};

  const auto [n, g] = normalize_quadruple(q);
  const ConePointPrime cone = b0(n);
  const VarietyPoint v = variety_from_quadruple(q);
  const B1Point b = b1(n);
  report["normalized"] = Json{{"a", number(n.a())}, {"z", complex_json(n.z())}, {"t", number(n.t())}};
  report["cone"] = Json{{"z", complex_json(cone.z())}, {"t", number(cone.t())}, {"r", number(cone.r())}};
  report["variety"] = Json{{"w1", complex_json(v.w1())}, {"w2", complex_json(v.w2())}, {"a", number(v.a())}};
  report["b1"] = Json{{"zeta", complex_json(b.zeta)}, {"w", complex_json(b.w)}};

  const auto [r1, r2] = xratio_identity_residuals(c);
  const std::vector<std::pair<std::string, double>> residuals{
      {"xratio_modulus", r1},
      {"xratio_real", r2},
      {"crv", crv_residual(c.x1, c.x2, cartan(Triple{q[0], q[1], q[2]}))},
      {"g_map_o_b0", variety_distance(g_map(cone), v)},
      {"b0_roundtrip", normalized_distance(b0_inv(cone), n)},
  };
  Json checks;
  bool ok = true;
  for (const auto& [name, value] : residuals) {
    const bool pass = std::isfinite(value) && value <= opts.tol;
    checks[name] = Json{{"residual", number(value)}, {"pass", pass}};
    ok = ok && pass;
  }
  report["checks"] = checks;
  report["pass"] = ok;
  return {std::move(report), ok ? kPass : kNumericFailure};
}

CommandResult cmd_verify_geometry(const Options& opts) {
  Sampler s(opts.seed);
  Rows rows;
  hstar_rows(rows, s, opts);
  cone_rows(rows, s, opts);
  heisenberg_rows(rows, s, opts);
  contact_rows(rows, s, opts);
  kahler_rows(rows, s, opts);
  levi_rows(rows, s, opts);
  pushforward_rows(rows, s, opts);
  return finish("verify-geometry", opts, warnings_json(opts, true), rows);
}

CommandResult cmd_roundtrips(const Options& opts) {
  Sampler s(opts.seed);
  Rows rows;
  cross_ratio_rows(rows, s, opts);
  bijection_rows(rows, s, opts);
  return finish("roundtrips", opts, warnings_json(opts, false), rows);
}

CommandResult error_result(const std::string& command, const std::exception& e,
                           const std::vector<BoundaryPoint>& points) {
  const auto* err = dynamic_cast<const Error*>(&e);
  Json error{{"kind", err ? std::string(to_string(err->kind())) : std::string("Error")}, {"message", e.what()}};
  if (!points.empty()) {
    Json pts = Json::array();
    for (const auto& p : points) pts.push_back(point_json(p));
    error["points"] = pts;
  }
  return {Json{{"command", command}, {"error", error}, {"pass", false}}, kInputError};
}

}  // namespace pu21::cli
