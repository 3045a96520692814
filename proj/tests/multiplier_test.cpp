#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "hadamard/multiplier.hpp"

using hadamard::CoefficientSequence;
using hadamard::CoefficientSeries;
using hadamard::Complex;
using hadamard::KernelSpec;
using hadamard::NormMethod;

namespace {

CoefficientSeries random_series(std::mt19937_64& rng, std::size_t min_deg, std::size_t max_deg) {
  std::uniform_int_distribution<std::size_t> deg(min_deg, max_deg);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> c(deg(rng) + 1);
  for (auto& x : c) x = {u(rng), u(rng)};
  return CoefficientSeries(std::move(c));
}

// Reference values from an independent dense SVD (numpy.linalg.norm(M, 2)).
struct CesaroRef {
  std::size_t n;
  double norm;
};
constexpr CesaroRef kCesaro[] = {
    {1, 1.0},
    {2, 1.1441228056353687},
    {3, 1.2215130049302494},
    {4, 1.2722879897591046},
    {8, 1.3797790416198628},
    {16, 1.4677088491187607},
    {64, 1.5978545967061848},
    {256, 1.6864274079999058},
    {1024, 1.7490124227937187},
    {4096, 1.794775918616375},
};

}  // namespace

TEST_CASE("T_c truncation layout") {
  const CoefficientSequence c(CoefficientSeries{9.0, 1.0, 3.0, 6.0});
  const auto M = hadamard::tc_truncation(c, 4);
  CHECK(M.size() == 4);
  CHECK(M.entry(1, 1) == Complex(1.0));
  CHECK(M.entry(2, 2) == Complex(3.0));
  CHECK(M.entry(1, 2) == Complex(2.0));
  CHECK(M.entry(1, 3) == Complex(3.0));
  CHECK(M.entry(2, 3) == Complex(3.0));
  CHECK(M.entry(3, 3) == Complex(6.0));
  CHECK(M.entry(1, 4) == Complex(-6.0));
  CHECK(M.entry(4, 4) == Complex(0.0));
  CHECK(M.entry(2, 1) == Complex(0.0));
  CHECK_THROWS_AS(hadamard::tc_truncation(c, 0), std::domain_error);

  const auto D = M.dense();
  CHECK(D(0, 2) == Complex(3.0));
  CHECK(M.column_norm(3) == doctest::Approx(std::sqrt(9.0 + 9.0 + 36.0)));
}

TEST_CASE("structured products agree with the dense matrix") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    const auto c = random_series(rng, 1, 30);
    const auto M = hadamard::tc_truncation(CoefficientSequence(c), 33);
    const auto D = M.dense();
    Eigen::VectorXcd x = Eigen::VectorXcd::Random(33);
    std::vector<Complex> xs(x.data(), x.data() + 33), y(33), z(33);
    M.apply(xs, y);
    M.apply_adjoint(xs, z);
    const Eigen::VectorXcd dy = D * x, dz = D.adjoint() * x;
    for (int k = 0; k < 33; ++k) {
      CHECK(std::abs(y[k] - dy(k)) <= 1e-12);
      CHECK(std::abs(z[k] - dz(k)) <= 1e-12);
    }
  }
}

TEST_CASE("kernel norms") {
  CHECK(hadamard::operator_norm(hadamard::tc_truncation(hadamard::make_kernel(KernelSpec::dirichlet(0)), 2)) == 0.0);
  CHECK(hadamard::operator_norm(hadamard::tc_truncation(hadamard::make_kernel(KernelSpec::dirichlet(1)), 2)) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  for (std::size_t n = 1; n <= 64; n *= 2) {
    const auto dn = hadamard::norm_estimate(hadamard::make_kernel(KernelSpec::dirichlet(n)), 1e-12);
    CHECK(dn.exact());
    CHECK(dn.lower * dn.lower == doctest::Approx(static_cast<double>(n + 1)).epsilon(1e-9));
    CHECK(dn.upper == dn.lower);
    const auto kn = hadamard::norm_estimate(hadamard::make_kernel(KernelSpec::fejer(n)), 1e-12);
    CHECK(kn.lower <= 1.0 + 1e-9);
    const auto vn = hadamard::norm_estimate(hadamard::make_kernel(KernelSpec::vallee_poussin(n)), 1e-12);
    CHECK(vn.lower <= std::sqrt(2.0) + 1e-9);
  }
}

TEST_CASE("Cesaro matrix norms match the reference SVD") {
  for (const auto& ref : kCesaro) {
    const auto M = hadamard::cesaro_matrix(ref.n);
    CHECK(hadamard::operator_norm(M) == doctest::Approx(ref.norm).epsilon(1e-9));
  }
}

TEST_CASE("reference norms for infinite sequences") {
  const auto p5 = hadamard::operator_norm(hadamard::tc_truncation(CoefficientSequence::poisson(0.5), 64));
  CHECK(p5 == doctest::Approx(0.5833878197203572).epsilon(1e-9));
  const auto p9 = hadamard::operator_norm(hadamard::tc_truncation(CoefficientSequence::poisson(0.9), 64));
  CHECK(p9 == doctest::Approx(0.9299098282881608).epsilon(1e-9));
  CHECK(*CoefficientSequence::poisson(0.5).norm_certificate() == doctest::Approx(0.6123724356957945));
  CHECK(*CoefficientSequence::poisson(0.9).norm_certificate() == doctest::Approx(0.9439279633531364));

  const auto h = hadamard::operator_norm(hadamard::tc_truncation(CoefficientSequence::harmonic(), 256));
  CHECK(h == doctest::Approx(1.1547005337302454).epsilon(1e-9));

  const auto a8 = hadamard::operator_norm(hadamard::tc_truncation(CoefficientSequence::alternating(), 8));
  CHECK(a8 == doctest::Approx(5.125830895483012).epsilon(1e-9));
  const auto a64 = hadamard::operator_norm(hadamard::tc_truncation(CoefficientSequence::alternating(), 64));
  CHECK(a64 == doctest::Approx(40.74775633446288).epsilon(1e-9));
}

TEST_CASE("L-shaped matrix") {
  const std::vector<double> a{1, 2, 3, 4};
  const auto L = hadamard::l_shaped_matrix(a, 4);
  CHECK(L(0, 0) == 1.0);
  CHECK(L(0, 3) == 4.0);
  CHECK(L(3, 0) == 4.0);
  CHECK(L(1, 2) == 3.0);
  CHECK(hadamard::operator_norm(L) == doctest::Approx(12.862084994701414).epsilon(1e-12));
  CHECK_THROWS(hadamard::l_shaped_matrix(a, 5));
}

TEST_CASE("power iteration agrees with a full SVD") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 30; ++i) {
    const auto c = random_series(rng, 1, 60);
    const auto M = hadamard::tc_truncation(CoefficientSequence(c), 64);
    const auto pi = hadamard::operator_norm_detailed(M, NormMethod::power_iteration);
    const auto svd = hadamard::operator_norm_detailed(M, NormMethod::full_svd);
    CHECK(pi.value <= svd.value * (1.0 + 1e-12));
    if (pi.converged) CHECK(pi.value == doctest::Approx(svd.value).epsilon(1e-9));
    CHECK(hadamard::operator_norm(M) == doctest::Approx(svd.value).epsilon(1e-9));
  }
}

TEST_CASE("norm scaling and monotonicity in the truncation") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    const auto c = random_series(rng, 1, 40);
    const double base = hadamard::operator_norm(hadamard::tc_truncation(CoefficientSequence(c), 48));
    const Complex s{-2.0, 0.5};
    const double scaled = hadamard::operator_norm(hadamard::tc_truncation(CoefficientSequence(s * c), 48));
    CHECK(scaled == doctest::Approx(std::abs(s) * base).epsilon(1e-9));
    double prev = 0.0;
    for (std::size_t N = 1; N <= 48; N += 7) {
      const double v = hadamard::operator_norm(hadamard::tc_truncation(CoefficientSequence(c), N));
      CHECK(v >= prev - 1e-12);
      prev = v;
    }
  }
}

TEST_CASE("adaptive estimate statuses") {
  SUBCASE("finite support is exact") {
    const auto e = hadamard::norm_estimate(CoefficientSequence(CoefficientSeries{0.0, 1.0, 1.0}), 1e-10);
    CHECK(e.exact());
    CHECK(e.truncation == 3);
    CHECK_FALSE(e.upper_infinite());
  }
  SUBCASE("zero multiplier") {
    const auto e = hadamard::norm_estimate(CoefficientSequence(CoefficientSeries{5.0}), 1e-10);
    CHECK(e.exact());
    CHECK(e.lower == 0.0);
  }
  SUBCASE("Poisson is bracketed by its certificate") {
    const auto e = hadamard::norm_estimate(CoefficientSequence::poisson(0.5), 1e-10);
    CHECK(e.status == hadamard::EstimateStatus::bracketed);
    CHECK(e.lower <= e.upper);
    CHECK(e.upper == doctest::Approx(0.6123724356957945));
  }
  SUBCASE("alternating diverges") {
    const auto e = hadamard::norm_estimate(CoefficientSequence::alternating(), 1e-10);
    CHECK(e.status == hadamard::EstimateStatus::divergent);
    CHECK(e.upper_infinite());
  }
  SUBCASE("rule without certificate leaves the upper bound open") {
    const CoefficientSequence c("geometric", [](std::size_t k) { return Complex(std::pow(0.3, k)); });
    const auto e = hadamard::norm_estimate(c, 1e-10);
    CHECK(e.status == hadamard::EstimateStatus::lower_only);
    CHECK(e.upper_infinite());
  }
}

TEST_CASE("closed-form bounds sandwich the norm") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 50; ++i) {
    const CoefficientSequence c(random_series(rng, 1, 40));
    const double norm = hadamard::norm_estimate(c, 1e-12).lower;
    CHECK(hadamard::bound_lower_i(c) <= norm * (1.0 + 1e-9));
    CHECK(norm <= hadamard::bound_upper_i(c) * (1.0 + 1e-9));
    CHECK(norm <= hadamard::bound_ii(c) * (1.0 + 1e-9) + 1e-12);
    CHECK(norm <= hadamard::bound_iii(c) * (1.0 + 1e-9) + 1e-12);
  }
  for (std::size_t n : {1, 2, 5, 16}) {
    const CoefficientSequence d(hadamard::make_kernel(KernelSpec::dirichlet(n)));
    CHECK(hadamard::bound_ii(d) == doctest::Approx(std::sqrt(static_cast<double>(n + 1))));
  }
}

TEST_CASE("bounds for infinite sequences") {
  const auto p = CoefficientSequence::poisson(0.7);
  const double norm = hadamard::operator_norm(hadamard::tc_truncation(p, 256));
  CHECK(norm <= hadamard::bound_iii(p) * (1.0 + 1e-9));
  CHECK(hadamard::bound_lower_i(p) <= norm * (1.0 + 1e-9));
  CHECK_THROWS_AS(hadamard::bound_ii(p), std::domain_error);
  CHECK_THROWS_AS(hadamard::bound_iii(CoefficientSequence::alternating()), std::domain_error);
  CHECK(hadamard::bound_iii(CoefficientSequence::harmonic(), 1e-4) >= 1.1547005337302454);
  CHECK_THROWS_AS(hadamard::bound_iii(CoefficientSequence::harmonic()), std::domain_error);
}

TEST_CASE("necessary and sufficient condition profile") {
  const auto prof = hadamard::necsuff_profile(CoefficientSequence::harmonic(), 100);
  CHECK(prof.sup_abs == 1.0);
  CHECK(prof.sup_k_diff == doctest::Approx(1.0));
  CHECK(prof.sup_sqrt_k_diff == doctest::Approx(std::sqrt(2.0) / 2.0));
  const auto d = hadamard::necsuff_profile(CoefficientSequence(hadamard::make_kernel(KernelSpec::dirichlet(4))), 5);
  CHECK(d.sup_k_diff == doctest::Approx(5.0));
  CHECK_THROWS(hadamard::necsuff_profile(CoefficientSequence::harmonic(), 0));
  CHECK_THROWS(hadamard::necsuff_profile(CoefficientSequence(CoefficientSeries{0.0, 1.0}), 10));
}
