#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "qumode/mixture.hpp"
#include "qumode/spectrum.hpp"

using namespace qumode;

namespace {

PhaseSpectrum single_phase(double phase) {
  return make_spectrum(0, {{phase, 1, {}}});
}

}  // namespace

TEST_CASE("state constructors validate their ranges") {
  CHECK_THROWS_AS(squeezed_state(0.5), std::invalid_argument);
  CHECK_THROWS_AS(squeezed_state(2e9), std::invalid_argument);
  CHECK_THROWS_AS(squeezed_state(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(coherent_state({std::nan(""), 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(coherent_state({0.0, 1.0}, -1.0), std::invalid_argument);
  CHECK(squeezed_state(3.0).s0 == 3.0);
  CHECK(coherent_state({1.0, 2.0}).alpha == std::complex<double>{1.0, 2.0});
}

TEST_CASE("squeezed mixture carries the eigenphases at width 1/(sqrt2 s0 tau)") {
  const PhaseSpectrum spec = modular_spectrum(15, 2);
  const GaussianMixture mix =
      momentum_distribution(spec, squeezed_state(4.0), 2.0);
  CHECK(mix.sigma ==
        doctest::Approx(1.0 / (std::sqrt(2.0) * 4.0 * 2.0)).epsilon(1e-15));
  CHECK(mix.s0_eff == 4.0);
  CHECK(mix.tau == 2.0);
  REQUIRE(mix.components.size() == spec.entries.size());
  for (std::size_t i = 0; i < mix.components.size(); ++i) {
    CHECK(mix.components[i].mean == spec.entries[i].phase);
    // Weights are exact binary fractions: multiplicity / 2^n.
    CHECK(mix.components[i].weight ==
          static_cast<double>(spec.entries[i].multiplicity) / 16.0);
    if (i > 0) CHECK(mix.components[i].mean > mix.components[i - 1].mean);
  }
  CHECK(mix.total_weight() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(momentum_distribution(spec, squeezed_state(1.0), 0.0),
                  std::invalid_argument);
}

TEST_CASE("coherent input shifts every peak by Im(alpha)/tau at unit width") {
  const PhaseSpectrum spec = make_spectrum(1, {{0.0, 1, {}}, {2.0, 1, {}}});
  const GaussianMixture mix =
      momentum_distribution(spec, coherent_state({1.0, 3.0}), 2.0);
  CHECK(mix.s0_eff == 1.0);
  CHECK(mix.sigma == doctest::Approx(1.0 / (std::sqrt(2.0) * 2.0)));
  REQUIRE(mix.components.size() == 2);
  CHECK(mix.components[0].mean == doctest::Approx(0.0 + 1.5).epsilon(1e-15));
  CHECK(mix.components[1].mean == doctest::Approx(2.0 + 1.5).epsilon(1e-15));
}

TEST_CASE("density matches the Gaussian formula on a single peak") {
  const GaussianMixture mix =
      momentum_distribution(single_phase(1.25), squeezed_state(2.0), 1.0);
  const double sigma = 1.0 / (std::sqrt(2.0) * 2.0);
  for (const double p : {1.25, 1.0, 0.4, 2.5}) {
    const double z = (p - 1.25) / sigma;
    const double expect =
        std::exp(-0.5 * z * z) / (sigma * std::sqrt(kTwoPi));
    CHECK(density_at(mix, p) == doctest::Approx(expect).epsilon(1e-14));
  }
  // Far tails underflow cleanly instead of producing junk.
  CHECK(density_at(mix, 1e6) == 0.0);
}

TEST_CASE("density integrates to one") {
  const GaussianMixture mix =
      momentum_distribution(modular_spectrum(15, 2), squeezed_state(1.0), 1.0);
  const double lo = mix.components.front().mean - 10.0 * mix.sigma;
  const double hi = mix.components.back().mean + 10.0 * mix.sigma;
  const std::size_t n = 200001;
  const double h = (hi - lo) / static_cast<double>(n - 1);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    sum += w * density_at(mix, lo + static_cast<double>(i) * h);
  }
  CHECK(sum * h == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("characteristic function equals the quadrature of exp(i w p)") {
  const PhaseSpectrum spec = make_spectrum(2, {{0.0, 3, {}}, {1.5, 1, {}}});
  const GaussianMixture mix =
      momentum_distribution(spec, squeezed_state(1.0), 1.0);
  CHECK(characteristic_function(mix, 0.0) == std::complex<double>{1.0, 0.0});

  const double lo = -8.0;
  const double hi = 1.5 + 8.0;
  const std::size_t n = 400001;
  const double h = (hi - lo) / static_cast<double>(n - 1);
  for (const double w : {0.5, 1.0, 2.0}) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
      const double p = lo + static_cast<double>(i) * h;
      const double trap = (i == 0 || i == n - 1) ? 0.5 : 1.0;
      acc += trap * density_at(mix, p) * std::polar(1.0, w * p);
    }
    acc *= h;
    const std::complex<double> cf = characteristic_function(mix, w);
    CHECK(std::abs(acc - cf) < 1e-9);
    // Triangle inequality: no mixture beats the pure Gaussian damping.
    CHECK(std::abs(cf) <= std::exp(-0.5 * w * w * mix.sigma * mix.sigma) + 1e-15);
  }
}
