#ifndef HADAMARD_MULTIPLIER_HPP
#define HADAMARD_MULTIPLIER_HPP

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hadamard/series.hpp"

namespace hadamard {

// Index convention: the series index k of c_k is the 1-based matrix index k.
// c_0 never enters T_c.  Column k of T_c holds c_k - c_{k-1} in rows 1..k-1
// and c_k on the diagonal; rows below the diagonal are zero.

/// A multiplier sequence (c_k)_{k>=1}: either finitely supported (taken from
/// a CoefficientSeries) or an infinite rule, optionally carrying analytic
/// certificates that make its bounds true upper bounds.
class CoefficientSequence {
 public:
  using Rule = std::function<Complex(std::size_t)>;
  using TailBound = std::function<double(std::size_t)>;

  /// Finite support: c_k = c[k], zero beyond the degree.
  CoefficientSequence(const CoefficientSeries& c);  // NOLINT(google-explicit-constructor)

  /// Infinite rule without certificates.
  CoefficientSequence(std::string name, Rule rule);

  static CoefficientSequence constant(Complex value);
  /// h(z) = z + z^3 + z^5 + ...: c_k = 1 for odd k, 0 for even k.
  static CoefficientSequence alternating();
  /// c_k = 1/k.
  static CoefficientSequence harmonic();
  /// c_k = r^k, the Poisson kernel P_r.
  static CoefficientSequence poisson(double r);

  Complex operator()(std::size_t k) const;
  const std::string& name() const { return name_; }

  bool finite_support() const { return static_cast<bool>(series_); }
  /// Largest k >= 1 with c_k != 0, for finite support.  nullopt if c_k = 0
  /// for every k >= 1 or the support is infinite.
  std::optional<std::size_t> last_nonzero() const;

  /// Certified upper bound for ||T_c||, when one is known in closed form.
  std::optional<double> norm_certificate() const { return norm_certificate_; }
  /// Bound on sum_{k>N} sqrt(k(k+1)) |c_{k+2} - 2c_{k+1} + c_k|, if known.
  std::optional<double> second_difference_tail(std::size_t N) const;
  /// True if c_k -> 0 is known.
  bool decays() const { return decays_; }

 private:
  std::string name_;
  std::optional<CoefficientSeries> series_;
  Rule rule_;
  std::optional<double> norm_certificate_;
  TailBound tail_;
  bool decays_ = false;
};

/// N x N truncation of an upper triangular matrix that is constant above the
/// diagonal within each column: entry (j, k) = diag_k for j = k, above_k for
/// j < k, 0 for j > k.  T_c and the Cesaro matrix both have this shape, so
/// products with the matrix and its adjoint cost O(N).
class MultiplierMatrix {
 public:
  MultiplierMatrix(std::vector<Complex> diag, std::vector<Complex> above);

  std::size_t size() const { return diag_.size(); }
  /// 1-based entry access.
  Complex entry(std::size_t j, std::size_t k) const;
  Eigen::MatrixXcd dense() const;

  void apply(std::span<const Complex> x, std::span<Complex> y) const;
  void apply_adjoint(std::span<const Complex> y, std::span<Complex> x) const;
  /// Euclidean norm of column k (1-based).
  double column_norm(std::size_t k) const;

 private:
  std::vector<Complex> diag_;
  std::vector<Complex> above_;
};

/// Throws std::domain_error for N < 1.
MultiplierMatrix tc_truncation(const CoefficientSequence& c, std::size_t N);
/// Entry (j, k) = 1/k for j <= k.
MultiplierMatrix cesaro_matrix(std::size_t N);
/// Symmetric matrix with entry (j, k) = a_{max(j,k)}, 1-based into a.
Eigen::MatrixXd l_shaped_matrix(std::span<const double> a, std::size_t N);

enum class NormMethod { automatic, power_iteration, full_svd };

struct NormComputation {
  double value = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  NormMethod method = NormMethod::power_iteration;
};

/// Largest singular value.  Power iteration on M*M from a seeded random
/// complex start; the returned value is ||M v|| for a unit vector v, hence
/// never above the true norm.  `automatic` falls back to a full SVD when the
/// iteration has not converged and N <= kSvdLimit.
NormComputation operator_norm_detailed(const MultiplierMatrix& M, NormMethod method = NormMethod::automatic);
double operator_norm(const MultiplierMatrix& M, NormMethod method = NormMethod::automatic);
double operator_norm(const Eigen::MatrixXcd& M, NormMethod method = NormMethod::automatic);
double operator_norm(const Eigen::MatrixXd& M, NormMethod method = NormMethod::automatic);

inline constexpr std::size_t kSvdLimit = 512;

enum class EstimateStatus { exact, bracketed, lower_only, divergent };

struct NormEstimate {
  double lower = 0.0;
  /// +infinity when no finite upper bound is certified.
  double upper = std::numeric_limits<double>::infinity();
  std::size_t truncation = 0;
  EstimateStatus status = EstimateStatus::lower_only;
  std::string method;

  bool exact() const { return status == EstimateStatus::exact; }
  bool upper_infinite() const { return upper == std::numeric_limits<double>::infinity(); }
};

struct NormEstimateOptions {
  std::size_t initial_truncation = 8;
  std::size_t max_truncation = 4096;
  /// A lower bound above this is reported as divergent.
  double divergence_cap = 1e6;
};

/// Adaptive truncation driver: doubles N until the truncation is norm-exact
/// (finite support, N past the last nonzero index) or successive truncation
/// norms differ by less than tol.
NormEstimate norm_estimate(const CoefficientSequence& c, double tol, const NormEstimateOptions& opts = {});

/// Suprema over an infinite sequence are taken over k <= kPrefix.
inline constexpr std::size_t kPrefix = 4096;

/// sup_k |c_k| + 2 sup_{k>=2} k |c_k - c_{k-1}|
double bound_upper_i(const CoefficientSequence& c);
/// sup_k (|c_k|^2 + (k-1) |c_k - c_{k-1}|^2)^{1/2}, the largest column norm of T_c.
double bound_lower_i(const CoefficientSequence& c);
/// sqrt((n+1) sum_{k=1}^n |c_{k+1} - c_k|^2) with n the last nonzero index.
/// Throws std::domain_error for infinite support.
double bound_ii(const CoefficientSequence& c);
/// sum_k sqrt(k(k+1)) |c_{k+2} - 2c_{k+1} + c_k| plus the certified tail for
/// infinite decaying sequences (summed until the tail is below tail_tol).
/// Throws std::domain_error when c is not known to decay.
double bound_iii(const CoefficientSequence& c, double tail_tol = 1e-12);

struct NecsuffProfile {
  double sup_abs = 0.0;           // sup |c_k|
  double sup_sqrt_k_diff = 0.0;   // sup sqrt(k) |c_k - c_{k-1}|
  double sup_k_diff = 0.0;        // sup k |c_k - c_{k-1}|
};

/// Empirical witnesses over 1 <= k <= K for the necessary and sufficient
/// multiplier conditions.  No verdict is drawn from a finite prefix.
NecsuffProfile necsuff_profile(const CoefficientSequence& c, std::size_t K);

}  // namespace hadamard

#endif  // HADAMARD_MULTIPLIER_HPP
