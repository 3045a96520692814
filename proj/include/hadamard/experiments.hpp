#ifndef HADAMARD_EXPERIMENTS_HPP
#define HADAMARD_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hadamard/local_dirichlet.hpp"
#include "hadamard/series.hpp"

namespace hadamard {

struct ReportRow {
  std::string label;
  std::vector<double> values;
};

struct ReportAssertion {
  /// Acceptance criterion this assertion belongs to (1-based).
  int criterion = 0;
  std::string description;
  double observed = 0.0;
  double threshold = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Result of one experiment or suite.  Deterministic for a given seed.
struct ExperimentReport {
  std::string name;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<std::string> columns;
  std::vector<ReportRow> rows;
  std::vector<ReportAssertion> assertions;

  bool passed() const;
  /// Records `observed <= threshold + tolerance`.
  void check_le(int criterion, std::string description, double observed, double threshold, double tolerance);
  /// Records `|observed - expected| <= tolerance`.
  void check_near(int criterion, std::string description, double observed, double expected, double tolerance);
  /// Records `observed >= threshold - tolerance`.
  void check_ge(int criterion, std::string description, double observed, double threshold, double tolerance);

  /// One header line, then one line per row and per assertion.
  std::string to_jsonl() const;
  std::string to_csv() const;
};

enum class WitnessKind { dirichlet, fejer, vallee_poussin };

struct SharpnessWitness {
  CoefficientSeries f;
  CoefficientSeries kernel;
  double d_f = 0.0;         // D_1(f)
  double d_kernel_f = 0.0;  // D_1(kernel * f)
  double ratio = 0.0;
};

/// Extremal functions for the kernel constants at zeta = 1:
///   dirichlet       f = n z^{n+1} - (n+1) z^n + 1
///   fejer           f = z^{n+1} - (n+1) z + n
///   vallee_poussin  f = z^{2n} - 2 z^n + 1
/// For n = 0 the dirichlet and fejer witnesses degenerate to f = 0 and the
/// ratio is NaN.  Throws std::domain_error for vallee_poussin with n = 0.
SharpnessWitness sharpness_witness(WitnessKind kind, std::size_t n);

/// Rows (n, ||sigma_n(f) - f||^2) for n = 0..nmax, where the squared norm is
/// |sigma_n(f)(0) - f(0)|^2 + D_omega(sigma_n(f) - f).  Asserts the last
/// value is below the value at n = 1 and, if given, below tail_tol.
ExperimentReport fejer_convergence(const CoefficientSeries& f, const AtomicWeightMeasure& mu, std::size_t nmax,
                                   std::optional<double> tail_tol = std::nullopt);

/// sqrt(D_1(s_n(f_n)) / D_1(f_n)) for f_n = n z^{n+1} - (n+1) z^n.
double partial_sum_operator_lower(std::size_t n);

/// Rows (r, D_zeta(f_r), r^2(2-r) D_zeta(f), 2r/(1+r) D_zeta(f)).
ExperimentReport dilation_experiment(const CoefficientSeries& f, const std::vector<double>& r_grid,
                                     const LocalPoint& zeta, double tol = 1e-9);

/// Seeded random polynomial: degree uniform in [1, max_degree], coefficients
/// with real and imaginary parts uniform on [0, 1).
CoefficientSeries random_polynomial(std::mt19937_64& rng, std::size_t max_degree = 64);

struct SuiteOptions {
  std::uint64_t seed = 0;
  /// Replaces the strict equality/inequality slack (1e-9 / 1e-10) when set.
  std::optional<double> tolerance;
};

const std::vector<std::string>& suite_names();

/// Runs one of: sharpness, bounds-sandwich, fejer, dilation, divergence,
/// quadrature-oracle, cross-factorization.  Throws std::invalid_argument on
/// an unknown name.
ExperimentReport run_suite(std::string_view name, const SuiteOptions& options = {});

}  // namespace hadamard

#endif  // HADAMARD_EXPERIMENTS_HPP
