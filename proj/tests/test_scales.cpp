#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "dhs/index_functions.hpp"
#include "dhs/random.hpp"
#include "dhs/scales.hpp"
#include "dhs/spectral.hpp"

namespace {

using dhs::IndexFunction;

// Synthetic density on a positive band, weights in (0,1].
dhs::SpectralDensity band_density(std::uint64_t seed, std::size_t n, double lo, double hi) {
  dhs::SpectralDensity d;
  d.lambdas = dhs::log_grid(lo, hi, n);
  d.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) d.weights[i] = dhs::uniform_at(seed, i);
  return d;
}

// Same but starting at lambda = 0, to exercise the origin bin.
dhs::SpectralDensity origin_density(std::uint64_t seed, std::size_t n, double hi) {
  dhs::SpectralDensity d;
  d.lambdas = dhs::lin_grid(0.0, hi, n);
  d.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) d.weights[i] = dhs::uniform_at(seed, i);
  return d;
}

dhs::SpectralDensity point_mass(double lambda0, double w) {
  return dhs::SpectralDensity{{lambda0}, {w}};
}

// Real bandlimited signal built in the spectral domain: coefficients are
// random inside |omega| <= band and zero outside (including the unpaired
// Nyquist bin), with Hermitian symmetry so the grid samples are real.
dhs::Spectrum bandlimited_spectrum(std::uint64_t seed, std::size_t n, double dx, double x0,
                                   double band) {
  dhs::Spectrum s;
  s.coeffs.assign(n, {0.0, 0.0});
  s.dx = dx;
  s.x0 = x0;
  s.coeffs[n / 2] = {dhs::normal_at(seed, 0), 0.0};  // DC stays real
  for (std::size_t i = n / 2 + 1; i < n; ++i) {
    if (std::abs(s.omega(i)) > band) continue;
    const std::complex<double> c(dhs::normal_at(seed, 2 * i), dhs::normal_at(seed, 2 * i + 1));
    s.coeffs[i] = c;
    s.coeffs[n - i] = std::conj(c);
  }
  return s;
}

dhs::ConcaveWitness identity_witness() {
  return dhs::make_concave_witness([](double x) { return x; }, dhs::log_grid(1e-8, 1e8, 48));
}

dhs::ConcaveWitness sqrt_witness() {
  return dhs::make_concave_witness([](double x) { return std::sqrt(x); },
                                   dhs::log_grid(1e-8, 1e8, 48));
}

}  // namespace

TEST_CASE("weighted norm basics: skip, saturate, point mass") {
  auto expw = IndexFunction::exponential();

  // zero-weight bins are skipped even when the weight there overflows
  dhs::SpectralDensity d{{1.0, 1000.0}, {1.0, 0.0}};
  CHECK(dhs::vhs_norm_sq(d, expw) == Catch::Approx(std::exp(1.0)).epsilon(1e-15));

  d.weights[1] = 1.0;
  CHECK(std::isinf(dhs::vhs_norm_sq(d, expw)));
  CHECK(std::isinf(dhs::dhs_norm(d, expw, 2.0)));

  // point mass: ||f||_s = sqrt(a(s lambda0) w)
  auto pm = point_mass(2.0, 4.0);
  CHECK(dhs::dhs_norm(pm, expw, 1.0) == Catch::Approx(2.0 * std::exp(1.0)).epsilon(1e-15));

  // s = 0 reproduces the ambient norm exactly
  auto d2 = band_density(11, 33, 1e-3, 20.0);
  double tot = 0.0;
  for (double w : d2.weights) tot += w;
  CHECK(dhs::dhs_norm_sq(d2, expw, 0.0) == tot);

  CHECK_THROWS_AS(dhs::dhs_norm(d2, IndexFunction::power_law(2.0), 1.0), std::domain_error);
  CHECK_THROWS_AS(dhs::dhs_norm(d2, expw, -0.5), std::domain_error);
}

TEST_CASE("power weight reproduces the derivative norm of a bandlimited signal") {
  const std::size_t n = 512;
  const double dx = 0.05, x0 = -12.8;
  for (std::uint64_t seed : {3u, 9u, 27u}) {
    auto s = bandlimited_spectrum(seed, n, dx, x0, 20.0);
    auto f = dhs::dft_inverse(s);

    // spectral differentiation oracle: fhat -> i omega fhat
    auto ds = s;
    for (std::size_t i = 0; i < n; ++i) ds.coeffs[i] *= std::complex<double>(0.0, s.omega(i));
    const double lhs = std::pow(dhs::l2_norm(dhs::dft_inverse(ds)), 2);

    const double rhs = dhs::vhs_norm_sq(dhs::spectral_density(s), IndexFunction::power_law(1.0));
    CHECK(lhs == Catch::Approx(rhs).epsilon(1e-8));
  }
}

TEST_CASE("dhs embedding: the scale is nested in s") {
  for (std::uint64_t seed : {5u, 6u, 7u}) {
    auto d = origin_density(seed, 40, 6.0);
    for (auto a : {IndexFunction::exponential(), IndexFunction::power_plus_one(2.0),
                   IndexFunction::exp_sqrt()}) {
      double prev = dhs::dhs_norm(d, a, 0.0);
      for (double s : {0.3, 1.0, 2.0}) {
        const double cur = dhs::dhs_norm(d, a, s);
        CHECK(cur >= prev * (1.0 - 1e-12));
        prev = cur;
      }
    }
  }
}

TEST_CASE("generalized Hoelder margin: reciprocal pair with identity envelopes") {
  auto phi = IndexFunction::power_law(-1.0);
  auto psi = IndexFunction::power_law(1.0);
  auto theta = IndexFunction::one();
  auto idw = identity_witness();

  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto d = band_density(seed, 24, 1e-2, 50.0);
    auto rep = dhs::holder_margin(d, phi, psi, theta, idw, idw);
    CHECK(rep.hypotheses_ok);
    CHECK(rep.margin >= -1e-9);
    // pointwise condition is an identity here: phi psi = 1
    CHECK(std::abs(rep.condition_margin) <= 1e-12);
  }

  // a point mass collapses the margin onto the pointwise condition
  auto pm = point_mass(1.7, 0.9);
  auto rep = dhs::holder_margin(pm, phi, psi, theta, idw, idw);
  CHECK(std::abs(rep.margin - rep.condition_margin) <= 1e-12);
}

TEST_CASE("generalized Hoelder margin: exponential pair flags the convex envelope") {
  // Phi(x) = 1/x is convex, so the certificate must refuse to endorse the
  // hypotheses, yet the inequality itself still holds for this pair.
  auto phi = IndexFunction::exponential().dilated(0.5);
  auto psi = IndexFunction::exponential();
  auto theta = IndexFunction::one();
  auto recip = dhs::make_concave_witness([](double x) { return 1.0 / x; },
                                         dhs::log_grid(1e-4, 1e4, 48));
  auto root = sqrt_witness();
  CHECK_FALSE(recip.ok);

  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto d = origin_density(seed, 24, 4.0);
    auto rep = dhs::holder_margin(d, phi, psi, theta, recip, root);
    CHECK(rep.margin >= -1e-9);
    CHECK_FALSE(rep.hypotheses_ok);
    CHECK(rep.condition_margin >= -1e-12);  // (1/e^{l/2}) sqrt(e^l) = 1
  }
}

TEST_CASE("Hoelder margin rejects degenerate densities") {
  auto idw = identity_witness();
  auto one = IndexFunction::one();
  dhs::SpectralDensity zero{{1.0, 2.0}, {0.0, 0.0}};
  CHECK_THROWS_AS(dhs::holder_margin(zero, one, one, one, idw, idw), std::domain_error);

  // infinite ||f||_theta is refused rather than divided by
  dhs::SpectralDensity wide{{1.0, 900.0}, {1.0, 1.0}};
  CHECK_THROWS_AS(
      dhs::holder_margin(wide, one, one, IndexFunction::exponential(), idw, idw),
      std::domain_error);
}

TEST_CASE("interpolation margin: hand-checked two-atom density") {
  dhs::SpectralDensity d{{1.0, 4.0}, {1.0, 1.0}};
  auto one = IndexFunction::one();

  // phi = lambda, psi = lambda^3: RHS = 2 (65/2)^{1/3}, LHS = 5
  auto rep = dhs::interp_margin(d, IndexFunction::power_law(1.0),
                                IndexFunction::power_law(3.0), one);
  CHECK(rep.hypotheses_ok);
  CHECK(rep.scale == Catch::Approx(2.0 * std::cbrt(32.5)).epsilon(1e-13));
  CHECK(rep.margin == Catch::Approx(2.0 * std::cbrt(32.5) - 5.0).epsilon(1e-12));

  // swapped: phi o psi^{-1} = y^3 is convex; inequality genuinely reverses
  auto bad = dhs::interp_margin(d, IndexFunction::power_law(3.0),
                                IndexFunction::power_law(1.0), one);
  CHECK_FALSE(bad.hypotheses_ok);
  CHECK(bad.margin == Catch::Approx(2.0 * std::pow(2.5, 3) - 65.0).epsilon(1e-12));
  CHECK(bad.margin < 0.0);
}

TEST_CASE("interpolation margin: phi = psi collapses to equality") {
  auto psi = IndexFunction::exponential();
  for (std::uint64_t seed : {2u, 12u, 22u}) {
    auto d = origin_density(seed, 30, 5.0);
    auto rep = dhs::interp_margin(d, psi, psi, IndexFunction::one());
    CHECK(rep.hypotheses_ok);
    CHECK(std::abs(rep.margin) <= 1e-12 * rep.scale);
  }
}

TEST_CASE("interpolation margin stays nonnegative on random densities") {
  auto phi = IndexFunction::power_law(1.0);
  auto psi = IndexFunction::power_law(3.0);
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto d = band_density(seed, 28, 1e-2, 30.0);
    for (auto theta : {IndexFunction::one(), IndexFunction::power_law(1.0)}) {
      auto rep = dhs::interp_margin(d, phi, psi, theta);
      CHECK(rep.hypotheses_ok);
      CHECK(rep.margin >= -1e-9 * std::max(1.0, rep.scale));
    }
  }

  // origin bin included: admissible pair, psi-image hits a(0) = 1
  auto p1 = IndexFunction::power_plus_one(1.0);
  auto p2 = IndexFunction::power_plus_one(2.0);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto d = origin_density(seed, 26, 8.0);
    auto rep = dhs::interp_margin(d, p1, p2, IndexFunction::one());
    CHECK(rep.hypotheses_ok);
    CHECK(rep.margin >= -1e-9 * std::max(1.0, rep.scale));
  }
}

TEST_CASE("dilational interpolation: exact endpoints and point masses") {
  auto gens = {IndexFunction::exponential(), IndexFunction::power_plus_one(2.0),
               IndexFunction::exp_sqrt()};
  for (auto a : gens) {
    auto d = origin_density(31, 30, 3.0);
    CHECK(dhs::dhs_interp_margin(d, a, 1.0, 0.0).margin == 0.0);
    auto at_one = dhs::dhs_interp_margin(d, a, 1.0, 1.0);
    CHECK(std::abs(at_one.margin) <= 1e-12 * std::max(1.0, at_one.scale));

    auto pm = point_mass(1.7, 0.9);
    for (double sigma : {0.25, 0.37, 0.75}) {
      auto rep = dhs::dhs_interp_margin(pm, a, 1.0, sigma);
      CHECK(std::abs(rep.margin) <= 1e-12 * std::max(1.0, rep.scale));
      CHECK(rep.closed_form);
    }
  }
}

TEST_CASE("dilational interpolation margin is nonnegative across the family") {
  auto gens = {IndexFunction::exponential(), IndexFunction::power_plus_one(2.0),
               IndexFunction::exp_sqrt()};
  for (auto a : gens) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      auto d = origin_density(seed, 32, 8.0);
      for (double sigma : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        auto rep = dhs::dhs_interp_margin(d, a, 1.0, sigma);
        CHECK(rep.margin >= -1e-9 * std::max(1.0, rep.scale));
      }
    }
  }
}

TEST_CASE("dilational interpolation: tabulated generator and domain errors") {
  auto d = origin_density(4, 24, 6.0);
  auto exp1 = IndexFunction::exponential();

  CHECK_THROWS_AS(dhs::dhs_interp_margin(d, exp1, 1.0, -0.1), std::domain_error);
  CHECK_THROWS_AS(dhs::dhs_interp_margin(d, exp1, 1.0, 1.2), std::domain_error);
  CHECK_THROWS_AS(dhs::dhs_interp_margin(d, exp1, 0.0, 0.5), std::domain_error);

  auto far = point_mass(500.0, 1.0);
  CHECK_THROWS_AS(dhs::dhs_interp_margin(far, exp1, 2.0, 0.5), std::overflow_error);

  // a tabulated profile goes through the generic inverse, not a closed form
  auto tab = dhs::generate_from_alpha(dhs::AlphaFunction::reciprocal1p(), 4.0, 40.0, 512);
  auto rep = dhs::dhs_interp_margin(d, tab, 1.0, 0.5);
  CHECK_FALSE(rep.closed_form);
  CHECK(rep.margin >= -1e-6 * std::max(1.0, rep.scale));
}

TEST_CASE("variant Cauchy-Schwarz: equality, orthogonality, degeneracy") {
  // r = g with theta = psi collapses to the plain Cauchy-Schwarz equality
  auto s = bandlimited_spectrum(17, 64, 0.5, -16.0, 4.0);
  auto cd = dhs::cross_density(s, s);
  auto p1 = IndexFunction::power_plus_one(1.0);
  auto eq = dhs::variant_cs_margin(cd, p1, p1);
  CHECK(std::abs(eq.margin) <= 1e-12 * eq.scale);

  // disjoint supports: the inner product vanishes, margin equals the scale
  dhs::CrossDensity dj;
  dj.lambdas = {1.0, 2.0};
  dj.weights_g = {1.5, 0.0};
  dj.weights_r = {0.0, 2.5};
  dj.cross = {{0.0, 0.0}, {0.0, 0.0}};
  auto rep = dhs::variant_cs_margin(dj, p1, IndexFunction::exponential());
  CHECK(rep.margin == rep.scale);
  CHECK(rep.scale > 0.0);

  // psi must stay positive where r lives
  dhs::CrossDensity van;
  van.lambdas = {0.0, 1.0};
  van.weights_g = {1.0, 1.0};
  van.weights_r = {1.0, 1.0};
  van.cross = {{0.5, 0.0}, {0.5, 0.0}};
  CHECK_THROWS_AS(dhs::variant_cs_margin(van, p1, IndexFunction::power_law(1.0)),
                  std::domain_error);
}

TEST_CASE("variant Cauchy-Schwarz margin on synthetic cross densities") {
  // any per-bin consistent cross density satisfies the weighted inequality
  auto theta = IndexFunction::power_plus_one(2.0).dilated(0.7);
  auto psi = IndexFunction::exponential().dilated(0.05);
  const double two_pi = 6.283185307179586;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const std::size_t n = 24;
    dhs::CrossDensity cd;
    cd.lambdas = dhs::log_grid(1e-3, 50.0, n);
    cd.weights_g.resize(n);
    cd.weights_r.resize(n);
    cd.cross.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      cd.weights_g[i] = dhs::uniform_at(seed, 4 * i);
      cd.weights_r[i] = dhs::uniform_at(seed, 4 * i + 1);
      const double rho = dhs::uniform_at(seed, 4 * i + 2);
      const double ang = two_pi * dhs::uniform_at(seed, 4 * i + 3);
      cd.cross[i] = rho * std::sqrt(cd.weights_g[i] * cd.weights_r[i]) *
                    std::complex<double>(std::cos(ang), std::sin(ang));
    }
    auto rep = dhs::variant_cs_margin(cd, theta, psi);
    CHECK(rep.margin >= -1e-9 * std::max(1.0, rep.scale));
  }

  // and on genuine signal pairs
  for (std::uint64_t seed = 40; seed <= 44; ++seed) {
    auto g = bandlimited_spectrum(seed, 64, 0.5, -16.0, 5.0);
    auto r = bandlimited_spectrum(seed + 1000, 64, 0.5, -16.0, 5.0);
    auto cd = dhs::cross_density(g, r);
    auto rep = dhs::variant_cs_margin(cd, IndexFunction::power_plus_one(1.0),
                                      IndexFunction::exponential().dilated(0.02));
    CHECK(rep.margin >= -1e-9 * std::max(1.0, rep.scale));
  }
}
