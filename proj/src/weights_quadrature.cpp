#include "hadamard/weights_quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace hadamard {

namespace {

// Neumaier compensated sum; summation order is fixed by the caller.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double log_kernel(Complex zeta, Complex z) {
  const double num = std::abs(1.0 - std::conj(zeta) * z);
  const double den = std::abs(zeta - z);
  return std::log(num / den) * 2.0 / (1.0 - std::norm(zeta));
}

double poisson_kernel(Complex zeta, Complex z) {
  return (1.0 - std::norm(z)) / std::norm(zeta - z);
}

bool has_boundary_atom(const AtomicWeightMeasure& mu) {
  for (const auto& atom : mu.atoms())
    if (atom.point.is_boundary()) return true;
  return false;
}

}  // namespace

double weight_eval(const AtomicWeightMeasure& mu, Complex z) {
  if (!(std::abs(z) < 1.0)) throw std::domain_error("weight_eval requires |z| < 1");
  double w = 0.0;
  for (const auto& atom : mu.atoms()) {
    const Complex zeta = atom.point.zeta();
    if (atom.point.is_boundary()) {
      w += atom.mass * poisson_kernel(zeta, z);
    } else {
      if (z == zeta) throw std::domain_error("weight_eval: z coincides with an interior atom");
      w += atom.mass * log_kernel(zeta, z);
    }
  }
  return w;
}

double QuadratureGrid::rho_max() const { return 1.0 - std::ldexp(1.0, -static_cast<int>(annuli)); }

void QuadratureGrid::validate() const {
  if (radial_nodes < 1) throw std::domain_error("quadrature grid needs at least one radial node per annulus");
  if (angular_points < 4) throw std::domain_error("quadrature grid needs at least four angular points");
  if (annuli < 2 || annuli > 40) throw std::domain_error("quadrature grid needs between 2 and 40 annuli");
  if (!(boundary_refinement > 0.0)) throw std::domain_error("boundary refinement factor must be positive");
  if (!(singular_exclusion >= 0.0)) throw std::domain_error("singular exclusion radius must be nonnegative");
}

QuadratureGrid QuadratureGrid::refined() const {
  QuadratureGrid g = *this;
  g.radial_nodes *= 2;
  g.angular_points *= 2;
  g.boundary_refinement *= 2.0;
  return g;
}

double quadrature_dirichlet_single(const CoefficientSeries& f, const AtomicWeightMeasure& mu,
                                   const QuadratureGrid& grid, std::size_t* nodes) {
  grid.validate();
  const auto df = f.derivative();
  if (df.is_zero()) {
    if (nodes) *nodes = 0;
    return 0.0;
  }
  const bool refine_angle = has_boundary_atom(mu);

  std::vector<Complex> interior_atoms;
  for (const auto& atom : mu.atoms())
    if (!atom.point.is_boundary()) interior_atoms.push_back(atom.point.zeta());

  std::size_t count = 0;
  double total = 0.0;
  double last_annulus = 0.0;
  for (std::size_t j = 0; j < grid.annuli; ++j) {
    const double r_in = j == 0 ? 0.0 : 1.0 - std::ldexp(1.0, -static_cast<int>(j));
    const double r_out = 1.0 - std::ldexp(1.0, -static_cast<int>(j + 1));
    const double h = (r_out - r_in) / static_cast<double>(grid.radial_nodes);

    std::size_t M = grid.angular_points;
    if (refine_angle) {
      const auto needed = static_cast<std::size_t>(std::ceil(grid.boundary_refinement / (1.0 - r_out)));
      M = std::max(M, needed);
    }
    const double dtheta = 2.0 * std::numbers::pi / static_cast<double>(M);
    std::vector<Complex> unit(M);
    for (std::size_t t = 0; t < M; ++t) unit[t] = std::polar(1.0, (static_cast<double>(t) + 0.5) * dtheta);

    CompensatedSum annulus;
    for (std::size_t i = 0; i < grid.radial_nodes; ++i) {
      const double r = r_in + (static_cast<double>(i) + 0.5) * h;
      // normalized area: r dr dtheta / pi
      const double node_weight = 2.0 * r * h / static_cast<double>(M);
      CompensatedSum ring;
      for (std::size_t t = 0; t < M; ++t) {
        const Complex z = r * unit[t];
        bool skip = false;
        for (const auto& zeta : interior_atoms)
          if (std::abs(z - zeta) < grid.singular_exclusion) skip = true;
        if (skip) continue;
        ring.add(std::norm(df.eval(z)) * weight_eval(mu, z));
        ++count;
      }
      annulus.add(node_weight * ring.value());
    }
    last_annulus = annulus.value();
    total += last_annulus;
  }
  if (nodes) *nodes = count;
  // The omitted annulus [rho_max, 1) has the width of the last computed one;
  // linear extrapolation in rho adds one more copy of it.
  return total + last_annulus;
}

QuadratureResult quadrature_dirichlet(const CoefficientSeries& f, const AtomicWeightMeasure& mu,
                                      const QuadratureGrid& grid) {
  QuadratureResult out;
  std::size_t coarse_nodes = 0, fine_nodes = 0;
  out.coarse_value = quadrature_dirichlet_single(f, mu, grid, &coarse_nodes);
  out.value = quadrature_dirichlet_single(f, mu, grid.refined(), &fine_nodes);
  out.refinement_gap = std::abs(out.value - out.coarse_value);
  out.nodes = coarse_nodes + fine_nodes;
  return out;
}

}  // namespace hadamard
