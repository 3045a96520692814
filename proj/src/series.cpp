#include "hadamard/series.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hadamard {

namespace {

void trim(std::vector<Complex>& c) {
  while (!c.empty() && c.back() == Complex{0.0, 0.0}) c.pop_back();
}

// r^0, r^1, ..., r^n by repeated multiplication.  dilate and the Poisson
// kernel share this so that both routes produce identical coefficients.
std::vector<double> powers(double r, std::size_t n) {
  std::vector<double> p(n + 1);
  double acc = 1.0;
  for (std::size_t k = 0; k <= n; ++k) {
    p[k] = acc;
    acc *= r;
  }
  return p;
}

// Fejer weight 1 - k/(n+1) written as count/(n+1), where count = n+1-k is
// the number of partial sums s_0..s_n that contain index k.
double fejer_weight(std::size_t count, std::size_t n) {
  return static_cast<double>(count) / static_cast<double>(n + 1);
}

std::size_t parse_size(std::string_view s, std::string_view what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("bad " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

double parse_double(std::string_view s, std::string_view what) {
  std::string tmp(s);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(tmp, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != tmp.size())
    throw std::invalid_argument("bad " + std::string(what) + ": '" + tmp + "'");
  return v;
}

}  // namespace

CoefficientSeries::CoefficientSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  trim(coeffs_);
}

CoefficientSeries::CoefficientSeries(std::initializer_list<Complex> coeffs)
    : CoefficientSeries(std::vector<Complex>(coeffs)) {}

CoefficientSeries CoefficientSeries::monomial(std::size_t k, Complex value) {
  std::vector<Complex> c(k + 1, Complex{});
  c[k] = value;
  return CoefficientSeries(std::move(c));
}

std::optional<std::size_t> CoefficientSeries::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Complex CoefficientSeries::operator[](std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Complex{};
}

Complex CoefficientSeries::eval(Complex z) const {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

CoefficientSeries CoefficientSeries::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return CoefficientSeries(std::move(d));
}

double CoefficientSeries::h2_norm_squared() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::norm(c);
  return s;
}

bool CoefficientSeries::all_finite() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Complex& c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
  });
}

CoefficientSeries CoefficientSeries::operator-() const {
  std::vector<Complex> c(coeffs_);
  for (auto& x : c) x = -x;
  return CoefficientSeries(std::move(c));
}

CoefficientSeries operator+(const CoefficientSeries& f, const CoefficientSeries& g) {
  std::vector<Complex> c(std::max(f.size(), g.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = f[k] + g[k];
  return CoefficientSeries(std::move(c));
}

CoefficientSeries operator-(const CoefficientSeries& f, const CoefficientSeries& g) {
  std::vector<Complex> c(std::max(f.size(), g.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = f[k] - g[k];
  return CoefficientSeries(std::move(c));
}

CoefficientSeries operator*(Complex s, const CoefficientSeries& f) {
  std::vector<Complex> c(f.coeffs().begin(), f.coeffs().end());
  for (auto& x : c) x *= s;
  return CoefficientSeries(std::move(c));
}

// ---------------------------------------------------------------------------
// Kernels

KernelSpec KernelSpec::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(':', start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  const auto& name = parts.front();
  KernelSpec spec;
  if (name == "poisson") {
    if (parts.size() != 3) throw std::invalid_argument("poisson kernel expects 'poisson:<r>:<degree>'");
    spec = poisson(parse_double(parts[1], "radius"), parse_size(parts[2], "truncation degree"));
  } else {
    if (parts.size() != 2) throw std::invalid_argument("kernel expects '<name>:<n>', got '" + std::string(text) + "'");
    const auto n = parse_size(parts[1], "kernel order");
    if (name == "dirichlet")
      spec = dirichlet(n);
    else if (name == "fejer")
      spec = fejer(n);
    else if (name == "vallee-poussin" || name == "vallee_poussin")
      spec = vallee_poussin(n);
    else
      throw std::invalid_argument("unknown kernel '" + std::string(name) + "'");
  }
  spec.validate();
  return spec;
}

void KernelSpec::validate() const {
  switch (kind) {
    case KernelKind::vallee_poussin:
      if (order < 1) throw std::domain_error("vallee-poussin kernel requires n >= 1");
      break;
    case KernelKind::poisson:
      if (!(radius >= 0.0 && radius < 1.0)) throw std::domain_error("poisson kernel requires 0 <= r < 1");
      if (truncation < 1) throw std::domain_error("poisson kernel requires truncation degree >= 1");
      break;
    default:
      break;
  }
}

std::string KernelSpec::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case KernelKind::dirichlet: os << "dirichlet:" << order; break;
    case KernelKind::fejer: os << "fejer:" << order; break;
    case KernelKind::vallee_poussin: os << "vallee-poussin:" << order; break;
    case KernelKind::poisson: os << "poisson:" << radius << ':' << truncation; break;
  }
  return os.str();
}

CoefficientSeries hadamard(const CoefficientSeries& f, const CoefficientSeries& g) {
  std::vector<Complex> c(std::min(f.size(), g.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = f[k] * g[k];
  return CoefficientSeries(std::move(c));
}

CoefficientSeries make_kernel(const KernelSpec& spec) {
  spec.validate();
  const std::size_t n = spec.order;
  std::vector<Complex> c;
  switch (spec.kind) {
    case KernelKind::dirichlet:
      c.assign(n + 1, 1.0);
      break;
    case KernelKind::fejer:
      c.resize(n + 1);
      for (std::size_t k = 0; k <= n; ++k) c[k] = fejer_weight(n + 1 - k, n);
      break;
    case KernelKind::vallee_poussin:
      // 1 for k < n, then 2 - k/n for n <= k <= 2n-1.
      c.resize(2 * n);
      for (std::size_t k = 0; k < 2 * n; ++k)
        c[k] = k < n ? 1.0 : static_cast<double>(2 * n - k) / static_cast<double>(n);
      break;
    case KernelKind::poisson: {
      const auto p = powers(spec.radius, spec.truncation);
      c.assign(p.begin(), p.end());
      break;
    }
  }
  return CoefficientSeries(std::move(c));
}

CoefficientSeries partial_sum(const CoefficientSeries& f, std::size_t n) {
  std::vector<Complex> c(std::min(f.size(), n + 1));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = f[k];
  return CoefficientSeries(std::move(c));
}

CoefficientSeries cesaro_mean(const CoefficientSeries& f, std::size_t n) {
  // Count how many of s_0(f), ..., s_n(f) carry each index, then divide.
  const std::size_t len = std::min(f.size(), n + 1);
  std::vector<std::size_t> multiplicity(len, 0);
  for (std::size_t m = 0; m <= n; ++m) {
    const auto top = std::min(len, m + 1);
    for (std::size_t k = 0; k < top; ++k) ++multiplicity[k];
  }
  std::vector<Complex> c(len);
  for (std::size_t k = 0; k < len; ++k) c[k] = f[k] * fejer_weight(multiplicity[k], n);
  return CoefficientSeries(std::move(c));
}

CoefficientSeries dilate(const CoefficientSeries& f, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("dilate requires 0 <= r < 1");
  if (f.is_zero()) return {};
  const auto p = powers(r, *f.degree());
  std::vector<Complex> c(f.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = f[k] * p[k];
  return CoefficientSeries(std::move(c));
}

double poisson_second_difference_tail(double r, std::size_t N) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("poisson tail requires 0 <= r < 1");
  // sqrt(k(k+1)) <= k + 1/2; sum_{k>=m} (k + 1/2) r^k summed in closed form, m = N+1.
  const double m = static_cast<double>(N) + 1.0;
  const double rm = std::pow(r, m);
  return rm * ((m + 0.5) * (1.0 - r) + r);
}

std::size_t poisson_truncation_degree(double r, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("tolerance must be positive");
  std::size_t N = 1;
  while (poisson_second_difference_tail(r, N) > tol) {
    if (N > (std::size_t{1} << 30)) throw std::domain_error("poisson truncation degree overflow");
    N *= 2;
  }
  // Shrink back to the smallest admissible degree.
  std::size_t lo = N / 2, hi = N;
  while (lo + 1 < hi) {
    const auto mid = lo + (hi - lo) / 2;
    (poisson_second_difference_tail(r, mid) > tol ? lo : hi) = mid;
  }
  return poisson_second_difference_tail(r, lo) <= tol && lo >= 1 ? lo : hi;
}

}  // namespace hadamard
