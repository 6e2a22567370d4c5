#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "dhs/hardy.hpp"
#include "dhs/scales.hpp"

using dhs::HardyFunction;

namespace {

HardyFunction random_function(std::uint64_t seed, std::size_t K, double decay) {
  std::vector<double> xi = dhs::gaussian_vector(seed, 2 * K);
  HardyFunction g;
  g.coeffs.resize(K);
  double d = 1.0;
  for (std::size_t k = 0; k < K; ++k) {
    d *= decay;
    g.coeffs[k] = {d * xi[2 * k], d * xi[2 * k + 1]};
  }
  return g;
}

}  // namespace

TEST_CASE("hardy norm closed forms") {
  SECTION("single mode g = z") {
    HardyFunction g;
    g.coeffs = {{1.0, 0.0}};
    CHECK(dhs::hardy_norm(g, 2.0) == Catch::Approx(2.0).epsilon(1e-14));
  }
  SECTION("R = 1 is the ambient norm") {
    const HardyFunction g = random_function(5, 32, 0.8);
    CHECK(dhs::hardy_norm(g, 1.0) == Catch::Approx(dhs::seq_norm(g.coeffs)).epsilon(1e-14));
  }
  SECTION("b_k = 2^{-k} at R = 2 makes every term one") {
    const std::size_t K = 10;
    HardyFunction g;
    g.coeffs.resize(K);
    double b = 1.0;
    for (std::size_t k = 0; k < K; ++k) {
      b *= 0.5;
      g.coeffs[k] = {b, 0.0};
    }
    CHECK(dhs::hardy_norm(g, 2.0) ==
          Catch::Approx(std::sqrt(static_cast<double>(K))).epsilon(1e-12));
  }
}

TEST_CASE("hardy norm domain, monotonicity, and overflow") {
  const HardyFunction g = random_function(7, 24, 0.7);
  CHECK_THROWS_AS(dhs::hardy_norm(g, 0.99), std::domain_error);

  double prev = 0.0;
  for (double R : {1.0, 1.2, 1.5, 2.0, 3.0}) {
    const double cur = dhs::hardy_norm(g, R);
    CHECK(cur >= prev);
    prev = cur;
  }

  SECTION("flat coefficients overflow to infinity") {
    HardyFunction flat;
    flat.coeffs.assign(600, {1.0, 0.0});
    CHECK(std::isinf(dhs::hardy_norm(flat, 2.0)));
  }
  SECTION("zero modes are skipped even where the weight has overflowed") {
    HardyFunction sparse;
    sparse.coeffs.assign(600, {0.0, 0.0});
    sparse.coeffs[0] = {1.0, 0.0};
    CHECK(dhs::hardy_norm(sparse, 2.0) == Catch::Approx(2.0).epsilon(1e-14));
  }
}

TEST_CASE("hardy function validation") {
  HardyFunction empty;
  CHECK_THROWS_AS(dhs::hardy_norm(empty, 2.0), std::invalid_argument);
  HardyFunction bad;
  bad.coeffs = {{std::nan(""), 0.0}};
  CHECK_THROWS_AS(dhs::hardy_norm(bad, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(dhs::differentiate(bad), std::invalid_argument);
}

TEST_CASE("differentiation in coefficient space") {
  SECTION("g = z^2 maps to 2z") {
    HardyFunction g;
    g.coeffs = {{0.0, 0.0}, {1.0, 0.0}};
    const auto d = dhs::differentiate(g);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == std::complex<double>(0.0, 0.0));
    CHECK(d[1] == std::complex<double>(2.0, 0.0));
  }
  SECTION("zero maps to zero") {
    HardyFunction g;
    g.coeffs.assign(8, {0.0, 0.0});
    for (const auto& c : dhs::differentiate(g)) CHECK(c == std::complex<double>(0.0, 0.0));
  }
  SECTION("norm of the derivative matches the direct mode sum") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const HardyFunction g = random_function(seed, 48, 0.9);
      double direct = 0.0;
      for (std::size_t k = 1; k <= g.K(); ++k)
        direct += static_cast<double>(k * k) * std::norm(g.coeffs[k - 1]);
      const double got = dhs::seq_norm(dhs::differentiate(g));
      CHECK(got * got == Catch::Approx(direct).epsilon(1e-12));
    }
  }
}

TEST_CASE("radius norm agrees with the weighted spectral norm machinery") {
  // same quantity through the scales module: lambda_k = k, w_k = |b_k|^2,
  // phi(lambda) = R^{2 lambda} = exp((2 log R) lambda)
  for (double R : {1.5, 2.0}) {
    const HardyFunction g = random_function(11, 40, 1.0 / R);
    dhs::SpectralDensity d;
    d.lambdas.resize(g.K());
    d.weights.resize(g.K());
    for (std::size_t k = 1; k <= g.K(); ++k) {
      d.lambdas[k - 1] = static_cast<double>(k);
      d.weights[k - 1] = std::norm(g.coeffs[k - 1]);
    }
    const auto phi = dhs::IndexFunction::exponential().dilated(2.0 * std::log(R));
    const double via_scales = dhs::vhs_norm(d, phi);
    const double direct = dhs::hardy_norm(g, R);
    CHECK(direct == Catch::Approx(via_scales).epsilon(1e-12));
  }
}

TEST_CASE("derivative error bounds") {
  SECTION("pinned values at C = 1, eps = 1e-4") {
    const auto b = dhs::diff_bounds(1.0, 1e-4, std::exp(1.0), 2.0);
    CHECK(b.vhs == Catch::Approx(2e-4 * std::log(1e4)).epsilon(1e-12));
    CHECK(b.ohs == Catch::Approx(0.02).epsilon(1e-12));
    CHECK(b.vhs < b.ohs);
  }
  SECTION("domains") {
    CHECK_THROWS_AS(dhs::diff_bounds(0.0, 1e-4, 2.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(dhs::diff_bounds(1.0, 0.0, 2.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(dhs::diff_bounds(1.0, 2.0, 2.0, 2.0), std::domain_error);  // eps >= C
    CHECK_THROWS_AS(dhs::diff_bounds(1.0, 1e-4, 1.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(dhs::diff_bounds(1.0, 1e-4, 2.0, 1.0), std::domain_error);
  }
  SECTION("log-scale bound wins for small noise at any fixed C, R, m") {
    for (double m : {1.5, 2.0, 4.0}) {
      const auto b = dhs::diff_bounds(2.0, 1e-6, 1.5, m);
      CHECK(b.vhs < b.ohs);
    }
  }
}

TEST_CASE("canonical truth has unit radius norm") {
  const HardyFunction g = dhs::unit_hardy_truth(256, 2.0);
  CHECK(dhs::hardy_norm(g, 2.0) == Catch::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(dhs::unit_hardy_truth(0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(dhs::unit_hardy_truth(8, 1.0), std::domain_error);
}

TEST_CASE("differentiation experiment") {
  const double R = 2.0;
  const HardyFunction g = dhs::unit_hardy_truth(256, R);

  SECTION("noiseless recovery is exact up to truncation") {
    const auto rep = dhs::diff_experiment(g, R, 0.0, 99);
    CHECK(rep.empirical_error <= 1e-10);
    CHECK(rep.k_star == g.K());
    CHECK(rep.vhs_bound == 0.0);
    CHECK(rep.ohs_bound == 0.0);
    CHECK(rep.C == Catch::Approx(1.0).epsilon(1e-12));
  }
  SECTION("cutoff level matches the balance point") {
    const auto rep = dhs::diff_experiment(g, R, 1e-3, 1);
    CHECK(rep.k_star == 9);  // floor(log(1e3)/log 2)
  }
  SECTION("error stays under the log-scale bound across the sweep") {
    for (double eps : {1e-2, 1e-3, 1e-4}) {
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto rep = dhs::diff_experiment(g, R, eps, seed);
        INFO("eps=" << eps << " seed=" << seed);
        CHECK(rep.empirical_error <= rep.vhs_bound);
        if (eps <= 1e-3) CHECK(rep.vhs_bound < rep.ohs_bound);
      }
    }
  }
  SECTION("deterministic in the seed") {
    const auto a = dhs::diff_experiment(g, R, 1e-3, 7);
    const auto b = dhs::diff_experiment(g, R, 1e-3, 7);
    const auto c = dhs::diff_experiment(g, R, 1e-3, 8);
    CHECK(a.empirical_error == b.empirical_error);
    CHECK(a.empirical_error != c.empirical_error);
  }
  SECTION("domains") {
    CHECK_THROWS_AS(dhs::diff_experiment(g, 1.0, 1e-3, 1), std::domain_error);
    CHECK_THROWS_AS(dhs::diff_experiment(g, R, -1.0, 1), std::domain_error);
    CHECK_THROWS_AS(dhs::diff_experiment(g, R, 2.0, 1), std::domain_error);  // eps >= C
    HardyFunction flat;
    flat.coeffs.assign(600, {1.0, 0.0});
    CHECK_THROWS_AS(dhs::diff_experiment(flat, 2.0, 1e-3, 1), std::domain_error);
  }
}
