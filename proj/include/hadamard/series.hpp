#ifndef HADAMARD_SERIES_HPP
#define HADAMARD_SERIES_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hadamard {

using Complex = std::complex<double>;

/// Finite truncation of a formal power series sum_k a_k z^k, indexed from 0.
///
/// Trailing exact zeros are dropped on construction, so two series compare
/// equal iff they agree coefficientwise after zero padding.  The zero series
/// stores no coefficients and has no degree.
class CoefficientSeries {
 public:
  CoefficientSeries() = default;
  explicit CoefficientSeries(std::vector<Complex> coeffs);
  CoefficientSeries(std::initializer_list<Complex> coeffs);

  static CoefficientSeries monomial(std::size_t k, Complex value = 1.0);

  /// Largest index with a nonzero coefficient; std::nullopt for the zero series.
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient k, zero beyond the stored range.
  Complex operator[](std::size_t k) const;

  /// Number of stored coefficients (degree + 1, or 0 for the zero series).
  std::size_t size() const { return coeffs_.size(); }
  std::span<const Complex> coeffs() const { return coeffs_; }

  Complex eval(Complex z) const;
  CoefficientSeries derivative() const;

  /// sum |a_k|^2
  double h2_norm_squared() const;
  bool all_finite() const;

  CoefficientSeries operator-() const;
  friend CoefficientSeries operator+(const CoefficientSeries& f, const CoefficientSeries& g);
  friend CoefficientSeries operator-(const CoefficientSeries& f, const CoefficientSeries& g);
  friend CoefficientSeries operator*(Complex s, const CoefficientSeries& f);
  friend bool operator==(const CoefficientSeries& f, const CoefficientSeries& g) = default;

 private:
  std::vector<Complex> coeffs_;
};

enum class KernelKind { dirichlet, fejer, vallee_poussin, poisson };

/// Classical summability kernel parameters.  Poisson carries a radius and
/// a truncation degree; the others carry an order n.
struct KernelSpec {
  KernelKind kind = KernelKind::dirichlet;
  std::size_t order = 0;
  double radius = 0.0;
  std::size_t truncation = 0;

  static KernelSpec dirichlet(std::size_t n) { return {KernelKind::dirichlet, n, 0.0, 0}; }
  static KernelSpec fejer(std::size_t n) { return {KernelKind::fejer, n, 0.0, 0}; }
  static KernelSpec vallee_poussin(std::size_t n) { return {KernelKind::vallee_poussin, n, 0.0, 0}; }
  static KernelSpec poisson(double r, std::size_t degree) { return {KernelKind::poisson, 0, r, degree}; }

  /// Parses "dirichlet:5", "fejer:8", "vallee-poussin:4" or "poisson:0.9:64".
  static KernelSpec parse(std::string_view text);

  /// Throws std::domain_error when the parameters are out of range.
  void validate() const;
  std::string to_string() const;
};

CoefficientSeries hadamard(const CoefficientSeries& f, const CoefficientSeries& g);
CoefficientSeries make_kernel(const KernelSpec& spec);

/// s_n(f): coefficients 0..n of f.
CoefficientSeries partial_sum(const CoefficientSeries& f, std::size_t n);

/// sigma_n(f): the average of s_0(f), ..., s_n(f).
CoefficientSeries cesaro_mean(const CoefficientSeries& f, std::size_t n);

/// f(rz), for 0 <= r < 1.
CoefficientSeries dilate(const CoefficientSeries& f, double r);

/// Smallest degree N such that the dropped tail
/// sum_{k>N} sqrt(k(k+1)) (1-r)^2 r^k is at most tol.
std::size_t poisson_truncation_degree(double r, double tol);

/// Upper bound for sum_{k>N} sqrt(k(k+1)) (1-r)^2 r^k in closed form.
double poisson_second_difference_tail(double r, std::size_t N);

}  // namespace hadamard

#endif  // HADAMARD_SERIES_HPP
