#ifndef HADAMARD_LOCAL_DIRICHLET_HPP
#define HADAMARD_LOCAL_DIRICHLET_HPP

#include <vector>

#include "hadamard/series.hpp"

namespace hadamard {

enum class Region { interior, boundary };

/// A point zeta of the closed unit disk.
///
/// |zeta| within kBoundaryTol of 1 is classified as boundary.  Interior
/// points with 1 - |zeta| < kNearBoundary keep the interior treatment but
/// carry the near_boundary flag so callers can report them.
class LocalPoint {
 public:
  static constexpr double kBoundaryTol = 1e-12;
  static constexpr double kNearBoundary = 1e-8;

  /// Throws std::domain_error if zeta is not finite or |zeta| > 1 + kBoundaryTol.
  explicit LocalPoint(Complex zeta);

  Complex zeta() const { return zeta_; }
  Region region() const { return region_; }
  bool is_boundary() const { return region_ == Region::boundary; }
  bool near_boundary() const { return near_boundary_; }

 private:
  Complex zeta_;
  Region region_;
  bool near_boundary_ = false;
};

/// f(z) = a + (z - zeta) g(z).
struct LocalFactorization {
  Complex a;
  CoefficientSeries g;
  LocalPoint zeta;

  /// Coefficients of a + (z - zeta) g(z).
  CoefficientSeries reconstruct() const;
};

/// Finitely many atoms of the closed disk with positive masses.
class AtomicWeightMeasure {
 public:
  struct Atom {
    LocalPoint point;
    double mass;
  };

  AtomicWeightMeasure() = default;
  /// Throws std::domain_error on a non-positive or non-finite mass.
  explicit AtomicWeightMeasure(std::vector<Atom> atoms);

  static AtomicWeightMeasure point_mass(Complex zeta, double mass = 1.0);

  const std::vector<Atom>& atoms() const { return atoms_; }
  double total_mass() const;

 private:
  std::vector<Atom> atoms_;
};

/// Splits f as a + (z - zeta) g(z) by top-down synthetic division:
/// b_{deg-1} = a_deg, b_{k-1} = a_k + zeta b_k, then a = a_0 + zeta b_0.
/// The recursion never divides by zeta, so it is exact on the circle as well
/// as inside it; for interior zeta the remainder a equals f(zeta).
LocalFactorization factorize_local(const CoefficientSeries& f, const LocalPoint& zeta);

/// D_zeta(f) = ||g||^2 in H^2.
double local_dirichlet_norm(const CoefficientSeries& f, const LocalPoint& zeta);

/// D_omega(f) for omega generated by an atomic measure: sum of mass * D_zeta(f).
double dirichlet_omega_atomic(const CoefficientSeries& f, const AtomicWeightMeasure& mu);

/// Factorization (A, F) of h*f at zeta built directly from the multiplier
/// coefficients c_k of h and the coefficients b_k of g in f = a + (z-zeta) g:
///
///   F_j = c_{j+1} b_j + sum_{k>j} (c_{k+1} - c_k) b_k zeta^{k-j},
///   A   = c_0 a_0 + zeta F_0.
LocalFactorization f_series(const CoefficientSeries& h, const CoefficientSeries& f, const LocalPoint& zeta);

}  // namespace hadamard

#endif  // HADAMARD_LOCAL_DIRICHLET_HPP
