#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "hadamard/experiments.hpp"
#include "hadamard/weights_quadrature.hpp"

using hadamard::AtomicWeightMeasure;
using hadamard::CoefficientSeries;
using hadamard::Complex;
using hadamard::LocalPoint;
using hadamard::QuadratureGrid;

TEST_CASE("weight evaluation") {
  const auto at1 = AtomicWeightMeasure::point_mass(1.0);
  CHECK(hadamard::weight_eval(at1, 0.0) == doctest::Approx(1.0));
  CHECK(hadamard::weight_eval(at1, 0.5) == doctest::Approx(3.0));
  CHECK(hadamard::weight_eval(at1, -0.5) == doctest::Approx(1.0 / 3.0));

  const auto at0 = AtomicWeightMeasure::point_mass(0.0, 2.0);
  CHECK(hadamard::weight_eval(at0, 0.5) == doctest::Approx(4.0 * std::log(2.0)));
  CHECK(hadamard::weight_eval(at0, Complex(0.0, 0.25)) == doctest::Approx(4.0 * std::log(4.0)));

  // The log kernel vanishes on the circle and is positive inside.
  const auto interior = AtomicWeightMeasure::point_mass(Complex(0.3, 0.4));
  CHECK(hadamard::weight_eval(interior, std::polar(0.999999, 1.0)) < 1e-4);
  CHECK(hadamard::weight_eval(interior, 0.1) > 0.0);

  CHECK_THROWS_AS(hadamard::weight_eval(at1, 1.0), std::domain_error);
  CHECK_THROWS_AS(hadamard::weight_eval(interior, Complex(0.3, 0.4)), std::domain_error);
}

TEST_CASE("grid validation") {
  QuadratureGrid g;
  CHECK(g.rho_max() == doctest::Approx(1.0 - std::ldexp(1.0, -10)));
  const auto r = g.refined();
  CHECK(r.radial_nodes == 2 * g.radial_nodes);
  CHECK(r.angular_points == 2 * g.angular_points);
  g.annuli = 1;
  CHECK_THROWS_AS(g.validate(), std::domain_error);
  g = {};
  g.radial_nodes = 0;
  CHECK_THROWS_AS(g.validate(), std::domain_error);
}

TEST_CASE("log weight of an atom at the origin gives D_0(z^n) = 1") {
  const auto at0 = AtomicWeightMeasure::point_mass(0.0);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto q = hadamard::quadrature_dirichlet(CoefficientSeries::monomial(n), at0);
    CHECK(q.value == doctest::Approx(1.0).epsilon(1e-2));
  }
}

TEST_CASE("quadrature agrees with the atomic formula") {
  const AtomicWeightMeasure measures[] = {
      AtomicWeightMeasure::point_mass(1.0),
      AtomicWeightMeasure::point_mass(0.5),
      AtomicWeightMeasure::point_mass(Complex(0.0, 0.7)),
      AtomicWeightMeasure({{LocalPoint(-1.0), 0.5}, {LocalPoint(0.5), 2.0}}),
  };
  const CoefficientSeries polys[] = {CoefficientSeries::monomial(1), CoefficientSeries{1.0, 2.0, 0.0, -1.0},
                                     CoefficientSeries{0.0, 0.5, Complex(0.0, 1.0)}};
  for (const auto& mu : measures) {
    for (const auto& f : polys) {
      const double exact = hadamard::dirichlet_omega_atomic(f, mu);
      const auto q = hadamard::quadrature_dirichlet(f, mu);
      CHECK(q.value > 0.0);
      CHECK(std::abs(q.value - exact) <= 1e-2 * exact);
      CHECK(std::abs(q.refinement_gap - std::abs(q.value - q.coarse_value)) <= 1e-15);
      CHECK(q.nodes > 0);
    }
  }
}

TEST_CASE("quadrature is additive over boundary atoms and vanishes on constants") {
  const auto a = AtomicWeightMeasure::point_mass(1.0);
  const auto b = AtomicWeightMeasure::point_mass(-1.0);
  const AtomicWeightMeasure ab({{LocalPoint(1.0), 1.0}, {LocalPoint(-1.0), 1.0}});
  const CoefficientSeries f{0.0, 1.0, 1.0};
  const QuadratureGrid grid;
  const double lhs = hadamard::quadrature_dirichlet_single(f, ab, grid);
  const double rhs = hadamard::quadrature_dirichlet_single(f, a, grid) + hadamard::quadrature_dirichlet_single(f, b, grid);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  CHECK(hadamard::quadrature_dirichlet(CoefficientSeries{3.0}, a).value == 0.0);
}

TEST_CASE("finer grids do not move the value much") {
  const auto mu = AtomicWeightMeasure::point_mass(1.0);
  const CoefficientSeries f{1.0, 2.0, 0.0, -1.0};
  const double exact = hadamard::dirichlet_omega_atomic(f, mu);
  QuadratureGrid g;
  const auto q1 = hadamard::quadrature_dirichlet(f, mu, g);
  g.radial_nodes = 16;
  const auto q2 = hadamard::quadrature_dirichlet(f, mu, g);
  CHECK(std::abs(q2.value - exact) <= std::abs(q1.value - exact) + 1e-3 * exact);
}
