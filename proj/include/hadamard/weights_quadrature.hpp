#ifndef HADAMARD_WEIGHTS_QUADRATURE_HPP
#define HADAMARD_WEIGHTS_QUADRATURE_HPP

#include <cstddef>

#include "hadamard/local_dirichlet.hpp"
#include "hadamard/series.hpp"

namespace hadamard {

/// Superharmonic weight generated by an atomic measure: interior atoms
/// contribute the log kernel log|(1 - conj(zeta) z)/(zeta - z)| * 2/(1-|zeta|^2),
/// boundary atoms the Poisson kernel (1 - |z|^2)/|zeta - z|^2.
///
/// Throws std::domain_error for |z| >= 1 or z on an interior atom.
double weight_eval(const AtomicWeightMeasure& mu, Complex z);

/// Tensor polar grid on the disk of radius rho_max.
///
/// The radial range is split into dyadic annuli [1 - 2^-j, 1 - 2^-(j+1)]
/// (the first one is [0, 1/2]) up to rho_max = 1 - 2^-annuli.  Each annulus
/// gets radial_nodes midpoint nodes.  The angular midpoint rule uses
/// angular_points nodes, raised on annuli near the circle to
/// boundary_refinement / (1 - r_outer) whenever the measure has boundary atoms.
struct QuadratureGrid {
  std::size_t radial_nodes = 8;
  std::size_t angular_points = 64;
  std::size_t annuli = 10;
  double boundary_refinement = 32.0;
  /// Nodes closer than this to an interior atom are skipped.
  double singular_exclusion = 1e-6;

  double rho_max() const;
  /// Throws std::domain_error on an unusable grid.
  void validate() const;
  /// Same grid with radial and angular resolution doubled.
  QuadratureGrid refined() const;
};

struct QuadratureResult {
  /// Fine-grid value with the annulus tail extrapolated.
  double value = 0.0;
  /// Same estimate on the coarse grid.
  double coarse_value = 0.0;
  /// |value - coarse_value|
  double refinement_gap = 0.0;
  std::size_t nodes = 0;
};

/// Integral of |f'|^2 omega over the disk against normalized area measure,
/// evaluated on the grid and on its refinement.  The part of the disk beyond
/// rho_max is restored by one Richardson step from the last two annuli.
QuadratureResult quadrature_dirichlet(const CoefficientSeries& f, const AtomicWeightMeasure& mu,
                                      const QuadratureGrid& grid = {});

/// Single evaluation on one grid, without the refinement pass.
double quadrature_dirichlet_single(const CoefficientSeries& f, const AtomicWeightMeasure& mu,
                                   const QuadratureGrid& grid, std::size_t* nodes = nullptr);

}  // namespace hadamard

#endif  // HADAMARD_WEIGHTS_QUADRATURE_HPP
