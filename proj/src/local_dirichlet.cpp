#include "hadamard/local_dirichlet.hpp"

#include <cmath>
#include <stdexcept>

namespace hadamard {

LocalPoint::LocalPoint(Complex zeta) : zeta_(zeta), region_(Region::interior) {
  if (!std::isfinite(zeta.real()) || !std::isfinite(zeta.imag()))
    throw std::domain_error("zeta must be finite");
  const double r = std::abs(zeta);
  if (r > 1.0 + kBoundaryTol) throw std::domain_error("zeta must lie in the closed unit disk");
  if (std::abs(r - 1.0) <= kBoundaryTol) {
    region_ = Region::boundary;
  } else {
    near_boundary_ = 1.0 - r < kNearBoundary;
  }
}

CoefficientSeries LocalFactorization::reconstruct() const {
  const auto& b = g;
  const std::size_t len = b.size() + 1;
  std::vector<Complex> c(len);
  c[0] = a - zeta.zeta() * b[0];
  for (std::size_t k = 1; k < len; ++k) c[k] = b[k - 1] - zeta.zeta() * b[k];
  return CoefficientSeries(std::move(c));
}

AtomicWeightMeasure::AtomicWeightMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  for (const auto& atom : atoms_)
    if (!(atom.mass > 0.0) || !std::isfinite(atom.mass)) throw std::domain_error("atom masses must be positive and finite");
}

AtomicWeightMeasure AtomicWeightMeasure::point_mass(Complex zeta, double mass) {
  return AtomicWeightMeasure({{LocalPoint(zeta), mass}});
}

double AtomicWeightMeasure::total_mass() const {
  double m = 0.0;
  for (const auto& atom : atoms_) m += atom.mass;
  return m;
}

LocalFactorization factorize_local(const CoefficientSeries& f, const LocalPoint& zeta) {
  if (!f.all_finite()) throw std::domain_error("factorize_local: series has non-finite coefficients");
  if (f.size() <= 1) return {f[0], {}, zeta};

  const Complex z = zeta.zeta();
  const std::size_t deg = f.size() - 1;
  std::vector<Complex> b(deg);
  b[deg - 1] = f[deg];
  for (std::size_t k = deg - 1; k >= 1; --k) b[k - 1] = f[k] + z * b[k];
  const Complex a = f[0] + z * b[0];
  return {a, CoefficientSeries(std::move(b)), zeta};
}

double local_dirichlet_norm(const CoefficientSeries& f, const LocalPoint& zeta) {
  return factorize_local(f, zeta).g.h2_norm_squared();
}

double dirichlet_omega_atomic(const CoefficientSeries& f, const AtomicWeightMeasure& mu) {
  double total = 0.0;
  for (const auto& atom : mu.atoms()) total += atom.mass * local_dirichlet_norm(f, atom.point);
  return total;
}

LocalFactorization f_series(const CoefficientSeries& h, const CoefficientSeries& f, const LocalPoint& zeta) {
  const auto base = factorize_local(f, zeta);
  const auto& b = base.g;
  const Complex z = zeta.zeta();
  const auto c = [&h](std::size_t k) { return h[k]; };

  std::vector<Complex> F(b.size());
  for (std::size_t j = 0; j < F.size(); ++j) {
    Complex tail{};
    Complex zpow = 1.0;
    for (std::size_t k = j + 1; k < b.size(); ++k) {
      zpow *= z;
      tail += (c(k + 1) - c(k)) * b[k] * zpow;
    }
    F[j] = c(j + 1) * b[j] + tail;
  }
  CoefficientSeries Fs(std::move(F));
  const Complex A = c(0) * f[0] + z * Fs[0];
  return {A, std::move(Fs), zeta};
}

}  // namespace hadamard
