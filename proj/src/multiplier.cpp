#include "hadamard/multiplier.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/SVD>

namespace hadamard {

// ---------------------------------------------------------------------------
// CoefficientSequence

CoefficientSequence::CoefficientSequence(const CoefficientSeries& c)
    : name_("series"), series_(c), decays_(true) {}

CoefficientSequence::CoefficientSequence(std::string name, Rule rule)
    : name_(std::move(name)), rule_(std::move(rule)) {}

CoefficientSequence CoefficientSequence::constant(Complex value) {
  CoefficientSequence s("constant", [value](std::size_t) { return value; });
  s.norm_certificate_ = std::abs(value);
  s.decays_ = value == Complex{};
  if (s.decays_) s.tail_ = [](std::size_t) { return 0.0; };
  return s;
}

CoefficientSequence CoefficientSequence::alternating() {
  return {"alternating", [](std::size_t k) { return Complex(k % 2 == 1 ? 1.0 : 0.0); }};
}

CoefficientSequence CoefficientSequence::harmonic() {
  CoefficientSequence s("harmonic", [](std::size_t k) { return Complex(k == 0 ? 0.0 : 1.0 / static_cast<double>(k)); });
  // sup |c_k| = 1 and sup k|c_k - c_{k-1}| = sup 1/(k-1) = 1.
  s.norm_certificate_ = 3.0;
  s.decays_ = true;
  // sqrt(k(k+1)) * 2/(k(k+1)(k+2)) <= 2/(k(k+1)), which telescopes to 2/(N+1).
  s.tail_ = [](std::size_t N) { return 2.0 / (static_cast<double>(N) + 1.0); };
  return s;
}

CoefficientSequence CoefficientSequence::poisson(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("poisson sequence requires 0 <= r < 1");
  CoefficientSequence s("poisson", [r](std::size_t k) { return Complex(std::pow(r, static_cast<double>(k))); });
  s.norm_certificate_ = r * std::sqrt(2.0 - r);
  s.decays_ = true;
  s.tail_ = [r](std::size_t N) { return poisson_second_difference_tail(r, N); };
  return s;
}

Complex CoefficientSequence::operator()(std::size_t k) const {
  return series_ ? (*series_)[k] : rule_(k);
}

std::optional<std::size_t> CoefficientSequence::last_nonzero() const {
  if (!series_) return std::nullopt;
  const auto deg = series_->degree();
  if (!deg || *deg == 0) return std::nullopt;
  return *deg;
}

std::optional<double> CoefficientSequence::second_difference_tail(std::size_t N) const {
  if (series_) {
    const auto n = last_nonzero();
    return (!n || N >= *n) ? std::optional<double>(0.0) : std::nullopt;
  }
  if (!tail_) return std::nullopt;
  return tail_(N);
}

// ---------------------------------------------------------------------------
// MultiplierMatrix

MultiplierMatrix::MultiplierMatrix(std::vector<Complex> diag, std::vector<Complex> above)
    : diag_(std::move(diag)), above_(std::move(above)) {
  if (diag_.size() != above_.size()) throw std::invalid_argument("diagonal and column data differ in length");
}

Complex MultiplierMatrix::entry(std::size_t j, std::size_t k) const {
  if (j < 1 || k < 1 || j > size() || k > size()) throw std::out_of_range("matrix index out of range");
  if (j == k) return diag_[k - 1];
  return j < k ? above_[k - 1] : Complex{};
}

Eigen::MatrixXcd MultiplierMatrix::dense() const {
  const auto n = static_cast<Eigen::Index>(size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j < k; ++j) m(j, k) = above_[k];
    m(k, k) = diag_[k];
  }
  return m;
}

void MultiplierMatrix::apply(std::span<const Complex> x, std::span<Complex> y) const {
  Complex suffix{};
  for (std::size_t j = size(); j-- > 0;) {
    y[j] = diag_[j] * x[j] + suffix;
    suffix += above_[j] * x[j];
  }
}

void MultiplierMatrix::apply_adjoint(std::span<const Complex> y, std::span<Complex> x) const {
  Complex prefix{};
  for (std::size_t k = 0; k < size(); ++k) {
    x[k] = std::conj(diag_[k]) * y[k] + std::conj(above_[k]) * prefix;
    prefix += y[k];
  }
}

double MultiplierMatrix::column_norm(std::size_t k) const {
  return std::sqrt(std::norm(diag_[k - 1]) + static_cast<double>(k - 1) * std::norm(above_[k - 1]));
}

MultiplierMatrix tc_truncation(const CoefficientSequence& c, std::size_t N) {
  if (N < 1) throw std::domain_error("truncation size must be at least 1");
  std::vector<Complex> diag(N), above(N);
  Complex prev = c(1);
  diag[0] = prev;
  for (std::size_t k = 2; k <= N; ++k) {
    const Complex ck = c(k);
    diag[k - 1] = ck;
    above[k - 1] = ck - prev;
    prev = ck;
  }
  return {std::move(diag), std::move(above)};
}

MultiplierMatrix cesaro_matrix(std::size_t N) {
  if (N < 1) throw std::domain_error("truncation size must be at least 1");
  std::vector<Complex> col(N);
  for (std::size_t k = 1; k <= N; ++k) col[k - 1] = 1.0 / static_cast<double>(k);
  return {col, col};
}

Eigen::MatrixXd l_shaped_matrix(std::span<const double> a, std::size_t N) {
  if (a.size() < N) throw std::domain_error("l_shaped_matrix needs at least N entries");
  const auto n = static_cast<Eigen::Index>(N);
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k) m(j, k) = a[static_cast<std::size_t>(std::max(j, k))];
  return m;
}

// ---------------------------------------------------------------------------
// Norms

namespace {

constexpr double kRelTol = 1e-13;
constexpr std::size_t kMaxIterations = 200000;
constexpr std::uint64_t kStartSeed = 0x5eed'1234'abcdULL;

double sq_norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return s;
}

struct DenseOperator {
  const Eigen::MatrixXcd& m;
  std::size_t size() const { return static_cast<std::size_t>(m.cols()); }
  void apply(std::span<const Complex> x, std::span<Complex> y) const {
    Eigen::Map<const Eigen::VectorXcd> xv(x.data(), m.cols());
    Eigen::Map<Eigen::VectorXcd> yv(y.data(), m.rows());
    yv.noalias() = m * xv;
  }
  void apply_adjoint(std::span<const Complex> y, std::span<Complex> x) const {
    Eigen::Map<const Eigen::VectorXcd> yv(y.data(), m.rows());
    Eigen::Map<Eigen::VectorXcd> xv(x.data(), m.cols());
    xv.noalias() = m.adjoint() * yv;
  }
};

template <class Op>
NormComputation power_iteration(const Op& op) {
  const std::size_t n = op.size();
  NormComputation out;
  out.method = NormMethod::power_iteration;
  if (n == 0) {
    out.converged = true;
    return out;
  }
  std::mt19937_64 rng(kStartSeed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<Complex> v(n), y(n), w(n);
  for (auto& x : v) x = {dist(rng), dist(rng)};
  double vn = std::sqrt(sq_norm(v));
  for (auto& x : v) x /= vn;

  double prev = -1.0;
  for (std::size_t it = 1; it <= kMaxIterations; ++it) {
    op.apply(v, y);
    const double sigma2 = sq_norm(y);  // ||M v||^2 with ||v|| = 1
    out.value = std::max(out.value, std::sqrt(sigma2));
    out.iterations = it;
    op.apply_adjoint(y, w);
    const double wn = std::sqrt(sq_norm(w));
    if (wn == 0.0 || (it > 2 && std::abs(sigma2 - prev) <= kRelTol * sigma2)) {
      out.converged = true;
      break;
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / wn;
    prev = sigma2;
  }
  return out;
}

double svd_norm(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

template <class Op, class DenseFn>
NormComputation dispatch(const Op& op, NormMethod method, DenseFn dense) {
  if (method == NormMethod::full_svd) {
    NormComputation out;
    out.method = NormMethod::full_svd;
    out.value = svd_norm(dense());
    out.converged = true;
    return out;
  }
  auto out = power_iteration(op);
  if (method == NormMethod::automatic && !out.converged && op.size() <= kSvdLimit) {
    out.value = svd_norm(dense());
    out.method = NormMethod::full_svd;
    out.converged = true;
  }
  return out;
}

}  // namespace

NormComputation operator_norm_detailed(const MultiplierMatrix& M, NormMethod method) {
  return dispatch(M, method, [&M] { return M.dense(); });
}

double operator_norm(const MultiplierMatrix& M, NormMethod method) {
  return operator_norm_detailed(M, method).value;
}

double operator_norm(const Eigen::MatrixXcd& M, NormMethod method) {
  DenseOperator op{M};
  return dispatch(op, method, [&M] { return M; }).value;
}

double operator_norm(const Eigen::MatrixXd& M, NormMethod method) {
  const Eigen::MatrixXcd mc = M.cast<Complex>();
  return operator_norm(mc, method);
}

NormEstimate norm_estimate(const CoefficientSequence& c, double tol, const NormEstimateOptions& opts) {
  if (!(tol > 0.0)) throw std::domain_error("norm_estimate requires tol > 0");
  NormEstimate est;

  if (c.finite_support()) {
    // T_c vanishes outside the leading (n+1) x (n+1) block.
    const auto n = c.last_nonzero();
    const std::size_t N = n ? *n + 1 : 1;
    const double value = operator_norm(tc_truncation(c, N));
    est.lower = est.upper = value;
    est.truncation = N;
    est.status = EstimateStatus::exact;
    est.method = "exact-truncation";
    return est;
  }

  std::size_t N = std::max<std::size_t>(opts.initial_truncation, 1);
  double previous = -1.0;
  while (true) {
    const double value = operator_norm(tc_truncation(c, N));
    est.lower = std::max(est.lower, value);
    est.truncation = N;
    if (est.lower > opts.divergence_cap) {
      est.status = EstimateStatus::divergent;
      est.method = "truncation-cap";
      return est;
    }
    if (previous >= 0.0 && std::abs(value - previous) < tol) {
      if (auto cert = c.norm_certificate()) {
        est.upper = std::max(*cert, est.lower);
        est.status = EstimateStatus::bracketed;
        est.method = "truncation+certificate";
      } else {
        est.status = EstimateStatus::lower_only;
        est.method = "truncation";
      }
      return est;
    }
    if (N >= opts.max_truncation) {
      est.status = EstimateStatus::divergent;
      est.method = "truncation-unconverged";
      return est;
    }
    previous = value;
    N = std::min(N * 2, opts.max_truncation);
  }
}

// ---------------------------------------------------------------------------
// Closed-form bounds

namespace {

// Index range over which suprema are taken: through the first zero past the
// support for finite c, a fixed prefix otherwise.
std::size_t sup_extent(const CoefficientSequence& c) {
  if (c.finite_support()) {
    const auto n = c.last_nonzero();
    return n ? *n + 1 : 1;
  }
  return kPrefix;
}

}  // namespace

double bound_upper_i(const CoefficientSequence& c) {
  const auto K = sup_extent(c);
  double sup_abs = 0.0, sup_diff = 0.0;
  Complex prev = c(1);
  sup_abs = std::abs(prev);
  for (std::size_t k = 2; k <= K; ++k) {
    const Complex ck = c(k);
    sup_abs = std::max(sup_abs, std::abs(ck));
    sup_diff = std::max(sup_diff, static_cast<double>(k) * std::abs(ck - prev));
    prev = ck;
  }
  return sup_abs + 2.0 * sup_diff;
}

double bound_lower_i(const CoefficientSequence& c) {
  const auto K = sup_extent(c);
  Complex prev = c(1);
  double best = std::norm(prev);
  for (std::size_t k = 2; k <= K; ++k) {
    const Complex ck = c(k);
    best = std::max(best, std::norm(ck) + static_cast<double>(k - 1) * std::norm(ck - prev));
    prev = ck;
  }
  return std::sqrt(best);
}

double bound_ii(const CoefficientSequence& c) {
  if (!c.finite_support()) throw std::domain_error("bound_ii applies only to finitely supported sequences");
  const std::size_t n = c.last_nonzero().value_or(1);
  double s = 0.0;
  for (std::size_t k = 1; k <= n; ++k) s += std::norm(c(k + 1) - c(k));
  return std::sqrt(static_cast<double>(n + 1) * s);
}

double bound_iii(const CoefficientSequence& c, double tail_tol) {
  if (!c.decays()) throw std::domain_error("bound_iii requires c_k -> 0");
  std::size_t N = 0;
  double tail = 0.0;
  if (c.finite_support()) {
    N = c.last_nonzero().value_or(0);
  } else {
    if (!(tail_tol > 0.0)) throw std::domain_error("bound_iii requires a positive tail tolerance");
    if (!c.second_difference_tail(1)) throw std::domain_error("bound_iii needs a tail certificate for infinite sequences");
    N = 1;
    while (*c.second_difference_tail(N) > tail_tol) {
      if (N > (std::size_t{1} << 26)) throw std::domain_error("bound_iii tail does not reach the requested tolerance");
      N *= 2;
    }
    tail = *c.second_difference_tail(N);
  }
  double s = 0.0;
  for (std::size_t k = 1; k <= N; ++k) {
    const double kk = static_cast<double>(k);
    s += std::sqrt(kk * (kk + 1.0)) * std::abs(c(k + 2) - 2.0 * c(k + 1) + c(k));
  }
  return s + tail;
}

NecsuffProfile necsuff_profile(const CoefficientSequence& c, std::size_t K) {
  if (K < 1) throw std::domain_error("necsuff_profile requires K >= 1");
  if (c.finite_support() && K > sup_extent(c))
    throw std::domain_error("necsuff_profile: K exceeds the support extent of c");
  NecsuffProfile p;
  Complex prev = c(1);
  p.sup_abs = std::abs(prev);
  for (std::size_t k = 2; k <= K; ++k) {
    const Complex ck = c(k);
    const double d = std::abs(ck - prev);
    const double kk = static_cast<double>(k);
    p.sup_abs = std::max(p.sup_abs, std::abs(ck));
    p.sup_sqrt_k_diff = std::max(p.sup_sqrt_k_diff, std::sqrt(kk) * d);
    p.sup_k_diff = std::max(p.sup_k_diff, kk * d);
    prev = ck;
  }
  return p;
}

}  // namespace hadamard
