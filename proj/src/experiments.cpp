#include "hadamard/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "hadamard/multiplier.hpp"
#include "hadamard/weights_quadrature.hpp"

namespace hadamard {

namespace {

constexpr double kStrictTol = 1e-9;
constexpr double kReconstructTol = 1e-10;
// Closed-form values that involve a single rounding.
constexpr double kExactTol = 1e-12;

const LocalPoint kOne{1.0};

CoefficientSeries from_terms(std::size_t len, std::initializer_list<std::pair<std::size_t, double>> terms) {
  std::vector<Complex> c(len, Complex{});
  for (const auto& [k, v] : terms) c[k] += v;
  return CoefficientSeries(std::move(c));
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

double squared_norm_domega(const CoefficientSeries& f, const AtomicWeightMeasure& mu) {
  return std::norm(f[0]) + dirichlet_omega_atomic(f, mu);
}

}  // namespace

SharpnessWitness sharpness_witness(WitnessKind kind, std::size_t n) {
  const double nd = static_cast<double>(n);
  SharpnessWitness w;
  switch (kind) {
    case WitnessKind::dirichlet:
      w.f = from_terms(n + 2, {{0, 1.0}, {n, -(nd + 1.0)}, {n + 1, nd}});
      w.kernel = make_kernel(KernelSpec::dirichlet(n));
      break;
    case WitnessKind::fejer:
      w.f = from_terms(n + 2, {{0, nd}, {1, -(nd + 1.0)}, {n + 1, 1.0}});
      w.kernel = make_kernel(KernelSpec::fejer(n));
      break;
    case WitnessKind::vallee_poussin:
      if (n < 1) throw std::domain_error("vallee-poussin witness requires n >= 1");
      w.f = from_terms(2 * n + 1, {{0, 1.0}, {n, -2.0}, {2 * n, 1.0}});
      w.kernel = make_kernel(KernelSpec::vallee_poussin(n));
      break;
  }
  w.d_f = local_dirichlet_norm(w.f, kOne);
  w.d_kernel_f = local_dirichlet_norm(hadamard(w.kernel, w.f), kOne);
  w.ratio = w.d_f > 0.0 ? w.d_kernel_f / w.d_f : std::numeric_limits<double>::quiet_NaN();
  return w;
}

ExperimentReport fejer_convergence(const CoefficientSeries& f, const AtomicWeightMeasure& mu, std::size_t nmax,
                                   std::optional<double> tail_tol) {
  if (nmax < 1) throw std::domain_error("fejer_convergence requires nmax >= 1");
  ExperimentReport rep;
  rep.name = "fejer_convergence";
  rep.parameters = {{"nmax", nmax}, {"atoms", mu.atoms().size()}};
  rep.columns = {"n", "norm_sq"};
  std::vector<double> values;
  for (std::size_t n = 0; n <= nmax; ++n) {
    const double v = squared_norm_domega(cesaro_mean(f, n) - f, mu);
    values.push_back(v);
    rep.rows.push_back({"n=" + std::to_string(n), {static_cast<double>(n), v}});
  }
  rep.check_le(7, "final value <= value at n=1", values.back(), values[1], 0.0);
  if (tail_tol) rep.check_le(7, "final value below tail tolerance", values.back(), *tail_tol, 0.0);
  return rep;
}

double partial_sum_operator_lower(std::size_t n) {
  if (n < 1) throw std::domain_error("partial_sum_operator_lower requires n >= 1");
  const double nd = static_cast<double>(n);
  const auto fn = from_terms(n + 2, {{n, -(nd + 1.0)}, {n + 1, nd}});
  const auto sn = partial_sum(fn, n);
  const double num = std::norm(sn[0]) + local_dirichlet_norm(sn, kOne);
  const double den = std::norm(fn[0]) + local_dirichlet_norm(fn, kOne);
  return std::sqrt(num / den);
}

ExperimentReport dilation_experiment(const CoefficientSeries& f, const std::vector<double>& r_grid,
                                     const LocalPoint& zeta, double tol) {
  ExperimentReport rep;
  rep.name = "dilation_experiment";
  rep.parameters = {{"zeta", {zeta.zeta().real(), zeta.zeta().imag()}}, {"r_grid", r_grid}};
  rep.columns = {"r", "D(f_r)", "r^2(2-r)D(f)", "2r/(1+r)D(f)"};
  const double df = local_dirichlet_norm(f, zeta);
  for (double r : r_grid) {
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("dilation radii must lie in [0, 1)");
    const double dfr = local_dirichlet_norm(dilate(f, r), zeta);
    const double ours = r * r * (2.0 - r) * df;
    const double prior = 2.0 * r / (1.0 + r) * df;
    rep.rows.push_back({"r=" + fmt(r), {r, dfr, ours, prior}});
    rep.check_le(5, "D(f_r) <= r^2(2-r) D(f) at r=" + fmt(r), dfr, ours, tol);
    rep.check_le(5, "r^2(2-r) D(f) <= 2r/(1+r) D(f) at r=" + fmt(r), ours, prior, tol);
  }
  return rep;
}

CoefficientSeries random_polynomial(std::mt19937_64& rng, std::size_t max_degree) {
  std::uniform_int_distribution<std::size_t> deg_dist(1, std::max<std::size_t>(max_degree, 1));
  std::uniform_real_distribution<double> coeff(0.0, 1.0);
  const auto deg = deg_dist(rng);
  std::vector<Complex> c(deg + 1);
  for (auto& x : c) {
    const double re = coeff(rng);
    const double im = coeff(rng);
    x = {re, im};
  }
  // The top coefficient is nonzero with probability one; force it anyway.
  if (c.back() == Complex{}) c.back() = 1.0;
  return CoefficientSeries(std::move(c));
}

// ---------------------------------------------------------------------------
// Suites

namespace {

double exact_norm(const CoefficientSeries& c) {
  return norm_estimate(CoefficientSequence(c), 1e-12).lower;
}

const std::vector<Complex>& zeta_cycle() {
  static const std::vector<Complex> z = {1.0, -1.0, Complex(0.0, 1.0), 0.0, 0.5};
  return z;
}

ExperimentReport suite_sharpness(double tol) {
  ExperimentReport rep;
  rep.columns = {"n", "observed", "expected"};
  double worst1 = 0.0, worst2 = 0.0;
  for (std::size_t n = 0; n <= 16; ++n) {
    const double nd = static_cast<double>(n);
    const double d = std::pow(exact_norm(make_kernel(KernelSpec::dirichlet(n))), 2);
    const double k = std::pow(exact_norm(make_kernel(KernelSpec::fejer(n))), 2);
    rep.rows.push_back({"dirichlet", {nd, d, nd + 1.0}});
    rep.rows.push_back({"fejer", {nd, k, nd / (nd + 1.0)}});
    rep.check_near(1, "||T_{D_" + std::to_string(n) + "}||^2 = n+1", d, nd + 1.0, tol);
    rep.check_near(1, "||T_{K_" + std::to_string(n) + "}||^2 = n/(n+1)", k, nd / (nd + 1.0), tol);
    worst1 = std::max({worst1, std::abs(d - nd - 1.0), std::abs(k - nd / (nd + 1.0))});
  }
  for (std::size_t n = 1; n <= 8; ++n) {
    const double v = std::pow(exact_norm(make_kernel(KernelSpec::vallee_poussin(n))), 2);
    rep.rows.push_back({"vallee-poussin", {static_cast<double>(n), v, 2.0}});
    rep.check_near(1, "||T_{V_" + std::to_string(n) + "}||^2 = 2", v, 2.0, tol);
  }
  for (std::size_t n = 1; n <= 32; ++n) {
    const double nd = static_cast<double>(n);
    const auto d = sharpness_witness(WitnessKind::dirichlet, n);
    const auto k = sharpness_witness(WitnessKind::fejer, n);
    const auto v = sharpness_witness(WitnessKind::vallee_poussin, n);
    const std::pair<double, double> checks[] = {
        {d.d_f, nd * (nd + 1.0)}, {d.d_kernel_f, (nd + 1.0) * (nd + 1.0) * nd},
        {k.d_f, nd * (nd + 1.0)}, {k.d_kernel_f, nd * nd},
        {v.d_f, 2.0 * nd},        {v.d_kernel_f, 4.0 * nd}};
    for (const auto& [obs, want] : checks) worst2 = std::max(worst2, std::abs(obs - want));
    rep.rows.push_back({"witness", {nd, d.ratio, k.ratio, v.ratio}});
  }
  rep.check_le(2, "max |witness Dirichlet integral - closed form|, n=1..32", worst2, 0.0, tol);
  rep.parameters["worst_kernel_deviation"] = worst1;
  return rep;
}

ExperimentReport suite_bounds_sandwich(std::mt19937_64& rng, double tol) {
  ExperimentReport rep;
  rep.columns = {"lower_i", "norm", "upper_i", "ii", "iii"};
  double worst_low = -std::numeric_limits<double>::infinity();
  double worst_up = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 200; ++i) {
    const CoefficientSequence c(random_polynomial(rng));
    const double norm = norm_estimate(c, 1e-12).lower;
    const double lo = bound_lower_i(c);
    const double u1 = bound_upper_i(c), u2 = bound_ii(c), u3 = bound_iii(c);
    worst_low = std::max(worst_low, lo - norm);
    worst_up = std::max(worst_up, norm - std::min({u1, u2, u3}));
    rep.rows.push_back({"c" + std::to_string(i), {lo, norm, u1, u2, u3}});
  }
  rep.check_le(3, "max(bound_lower_i - norm) over 200 sequences", worst_low, 0.0, tol);
  rep.check_le(3, "max(norm - min upper bound) over 200 sequences", worst_up, 0.0, tol);

  double worst_main = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 200; ++i) {
    const auto h = random_polynomial(rng);
    const auto f = random_polynomial(rng);
    const LocalPoint zeta(zeta_cycle()[static_cast<std::size_t>(i) % zeta_cycle().size()]);
    const double th = exact_norm(h);
    const double lhs = local_dirichlet_norm(hadamard(h, f), zeta);
    const double rhs = th * th * local_dirichlet_norm(f, zeta);
    worst_main = std::max(worst_main, lhs - rhs);
    rep.rows.push_back({"triple" + std::to_string(i), {lhs, rhs}});
  }
  rep.check_le(4, "max(D(h*f) - ||T_h||^2 D(f)) over 200 triples", worst_main, 0.0, tol);
  return rep;
}

const std::vector<double>& r_grid() {
  static const std::vector<double> g = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  return g;
}

ExperimentReport suite_dilation(std::mt19937_64& rng, double tol) {
  ExperimentReport rep;
  rep.columns = {"r", "D(f_r)", "r^2(2-r)D(f)", "2r/(1+r)D(f)"};
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 50; ++i) {
    const auto f = random_polynomial(rng);
    const double df = local_dirichlet_norm(f, kOne);
    for (double r : r_grid()) {
      const double dfr = local_dirichlet_norm(dilate(f, r), kOne);
      worst = std::max(worst, dfr - r * r * (2.0 - r) * df);
    }
  }
  rep.check_le(5, "max(D_1(f_r) - r^2(2-r) D_1(f)) over 50 f and the r grid", worst, 0.0, tol);
  for (double r : r_grid()) {
    const double ours = r * r * (2.0 - r);
    const double prior = 2.0 * r / (1.0 + r);
    const double trunc = operator_norm(tc_truncation(CoefficientSequence::poisson(r), 512));
    const double bound = r * std::sqrt(2.0 - r) + poisson_second_difference_tail(r, 512);
    rep.rows.push_back({"r=" + fmt(r), {r, trunc, bound, ours, prior}});
    rep.check_le(5, "r^2(2-r) <= 2r/(1+r) at r=" + fmt(r), ours, prior, 0.0);
    rep.check_le(6, "||T_{P_r}|| at N=512 <= r sqrt(2-r) + tail, r=" + fmt(r), trunc, bound, 0.0);
  }
  return rep;
}

ExperimentReport suite_fejer() {
  std::vector<Complex> c(65, Complex{});
  for (std::size_t k = 1; k <= 64; ++k) c[k] = 1.0 / static_cast<double>(k);
  const CoefficientSeries f(std::move(c));
  const auto mu = AtomicWeightMeasure::point_mass(1.0);

  auto rep = fejer_convergence(f, mu, 64);
  const double first = rep.rows[1].values[1];
  const double last = rep.rows.back().values[1];
  rep.check_le(7, "||sigma_64(f) - f||^2 / ||sigma_1(f) - f||^2 below 10%", last / first, 0.1, 0.0);

  double worst = 0.0;
  const auto z = CoefficientSeries::monomial(1);
  for (std::size_t n = 0; n <= 64; ++n) {
    const double v = squared_norm_domega(cesaro_mean(z, n) - z, mu);
    const double want = 1.0 / std::pow(static_cast<double>(n + 1), 2);
    worst = std::max(worst, std::abs(v - want));
  }
  rep.check_le(7, "f = z: max |norm^2 - 1/(n+1)^2|, n=0..64", worst, 0.0, kExactTol);
  return rep;
}

ExperimentReport suite_divergence(double tol) {
  ExperimentReport rep;
  rep.columns = {"N", "norm"};
  double worst = 0.0;
  for (std::size_t n = 1; n <= 32; ++n)
    worst = std::max(worst, std::abs(partial_sum_operator_lower(n) - std::sqrt(static_cast<double>(n) + 1.0)));
  rep.check_le(8, "max |partial_sum_operator_lower(n) - sqrt(n+1)|, n=1..32", worst, 0.0, tol);

  for (std::size_t N : {64, 256, 1024}) {
    const double norm = operator_norm(tc_truncation(CoefficientSequence::alternating(), N));
    rep.rows.push_back({"alternating", {static_cast<double>(N), norm}});
    rep.check_ge(8, "alternating ||T_c|| at N=" + std::to_string(N) + " >= sqrt(N-1)", norm,
                 std::sqrt(static_cast<double>(N) - 1.0), 0.0);
  }

  double prev = 0.0, max_drop = 0.0, max_norm = 0.0, last = 0.0;
  for (std::size_t N = 1; N <= 4096; N *= 2) {
    const double norm = operator_norm(cesaro_matrix(N));
    rep.rows.push_back({"cesaro", {static_cast<double>(N), norm}});
    max_drop = std::max(max_drop, prev - norm);
    max_norm = std::max(max_norm, norm);
    prev = last = norm;
  }
  rep.check_le(9, "Cesaro truncation norms nondecreasing (max drop)", max_drop, 0.0, tol);
  rep.check_le(9, "Cesaro truncation norms <= 2", max_norm, 2.0, tol);
  rep.check_ge(9, "Cesaro norm at N=4096 >= 1.8", last, 1.8, 0.0);
  return rep;
}

ExperimentReport suite_quadrature(std::mt19937_64& rng) {
  ExperimentReport rep;
  rep.columns = {"quadrature", "exact", "refinement_gap"};
  const std::vector<Complex> atoms = {0.0, 0.5, Complex(0.0, 0.7), 1.0, -1.0};
  std::vector<AtomicWeightMeasure> measures;
  for (const auto& z : atoms) measures.push_back(AtomicWeightMeasure::point_mass(z));
  measures.push_back(AtomicWeightMeasure({{LocalPoint(0.0), 0.5},
                                          {LocalPoint(Complex(0.0, 0.7)), 0.25},
                                          {LocalPoint(1.0), 1.0},
                                          {LocalPoint(-1.0), 0.75}}));
  std::vector<CoefficientSeries> polys = {CoefficientSeries{0.0, 1.0}, CoefficientSeries{1.0, 2.0, 0.0, -1.0}};
  for (int i = 0; i < 3; ++i) polys.push_back(random_polynomial(rng, 8));

  double worst = 0.0;
  for (std::size_t m = 0; m < measures.size(); ++m) {
    for (std::size_t p = 0; p < polys.size(); ++p) {
      const auto q = quadrature_dirichlet(polys[p], measures[m]);
      const double exact = dirichlet_omega_atomic(polys[p], measures[m]);
      const double rel = std::abs(q.value - exact) / std::max(1.0, exact);
      worst = std::max(worst, rel);
      rep.rows.push_back({"mu" + std::to_string(m) + "/f" + std::to_string(p), {q.value, exact, q.refinement_gap}});
      if (m == 3 && p == 0) rep.check_near(10, "integral of (1-|z|^2)/|1-z|^2 dA = 1", q.value, 1.0, 1e-2);
    }
  }
  rep.check_le(10, "max relative |quadrature - atomic| over the battery", worst, 0.0, 1e-2);
  return rep;
}

ExperimentReport suite_cross_factorization(std::mt19937_64& rng, double tol) {
  ExperimentReport rep;
  rep.columns = {"reconstruction_error", "|F|^2", "|T_h|^2 |g|^2"};
  const std::vector<Complex> zetas = {1.0, -1.0, Complex(0.0, 1.0), 0.0, 0.5, Complex(0.0, 0.7),
                                      std::polar(1.0, 1.0)};
  double worst_rec = 0.0;
  double worst_norm = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 100; ++i) {
    const auto h = random_polynomial(rng);
    const auto f = random_polynomial(rng);
    const LocalPoint zeta(zetas[static_cast<std::size_t>(i) % zetas.size()]);
    const auto fs = f_series(h, f, zeta);
    const auto hf = hadamard(h, f);
    const auto rec = fs.reconstruct();
    double scale = 1.0, err = 0.0;
    for (std::size_t k = 0; k < std::max(rec.size(), hf.size()); ++k) {
      scale = std::max(scale, std::abs(hf[k]));
      err = std::max(err, std::abs(rec[k] - hf[k]));
    }
    const double th = exact_norm(h);
    const double g2 = factorize_local(f, zeta).g.h2_norm_squared();
    const double F2 = fs.g.h2_norm_squared();
    worst_rec = std::max(worst_rec, err / scale);
    worst_norm = std::max(worst_norm, F2 - th * th * g2);
    rep.rows.push_back({"case" + std::to_string(i), {err / scale, F2, th * th * g2}});
  }
  rep.check_le(11, "max relative reconstruction error of A + (z-zeta)F", worst_rec, 0.0, tol);
  rep.check_le(11, "max(||F||^2 - ||T_h||^2 ||g||^2)", worst_norm, 0.0, tol);
  return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"sharpness", "bounds-sandwich",   "fejer",
                                                 "dilation",  "divergence",        "quadrature-oracle",
                                                 "cross-factorization"};
  return names;
}

ExperimentReport run_suite(std::string_view name, const SuiteOptions& options) {
  std::mt19937_64 rng(options.seed);
  const double tol = options.tolerance.value_or(kStrictTol);
  ExperimentReport rep;
  if (name == "sharpness")
    rep = suite_sharpness(tol);
  else if (name == "bounds-sandwich")
    rep = suite_bounds_sandwich(rng, tol);
  else if (name == "fejer")
    rep = suite_fejer();
  else if (name == "dilation")
    rep = suite_dilation(rng, tol);
  else if (name == "divergence")
    rep = suite_divergence(tol);
  else if (name == "quadrature-oracle")
    rep = suite_quadrature(rng);
  else if (name == "cross-factorization")
    rep = suite_cross_factorization(rng, options.tolerance.value_or(kReconstructTol));
  else
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  rep.name = std::string(name);
  rep.parameters["seed"] = options.seed;
  if (options.tolerance) rep.parameters["tolerance_override"] = *options.tolerance;
  return rep;
}

}  // namespace hadamard
