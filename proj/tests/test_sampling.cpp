#include "doctest.h"

#include <cmath>

#include "qumode/mixture.hpp"
#include "qumode/sampling.hpp"
#include "qumode/spectrum.hpp"

using namespace qumode;

TEST_CASE("sampling is a pure function of (mix, count, seed)") {
  const GaussianMixture mix =
      momentum_distribution(modular_spectrum(15, 2), squeezed_state(1.0), 1.0);
  // Counts straddling chunk boundaries, so the multi-threaded path really
  // splits work.
  for (const std::size_t count : {std::size_t{1}, kSampleChunk,
                                  kSampleChunk + 1, std::size_t{10000}}) {
    const auto a = sample_momentum(mix, count, 42);
    const auto b = sample_momentum(mix, count, 42);
    const auto c = sample_momentum(mix, count, 42, 4);
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a.size() == count);
  }
  const auto base = sample_momentum(mix, 256, 42);
  const auto other = sample_momentum(mix, 256, 43);
  CHECK(base != other);
  CHECK(sample_momentum(mix, 0, 1).empty());
}

TEST_CASE("longer runs extend shorter ones drawn from the same seed") {
  const GaussianMixture mix =
      momentum_distribution(modular_spectrum(15, 2), squeezed_state(2.0), 1.0);
  const auto small = sample_momentum(mix, 5000, 9);
  const auto large = sample_momentum(mix, 9000, 9);
  for (std::size_t i = 0; i < small.size(); ++i) CHECK(small[i] == large[i]);
}

TEST_CASE("sample moments match the target mixture") {
  const PhaseSpectrum spec = make_spectrum(0, {{0.7, 1, {}}});
  const GaussianMixture mix =
      momentum_distribution(spec, squeezed_state(1.0), 1.0);
  const std::size_t n = 200000;
  const auto draws = sample_momentum(mix, n, 123);
  double sum = 0.0;
  for (const double d : draws) sum += d;
  const double mean = sum / static_cast<double>(n);
  double ss = 0.0;
  for (const double d : draws) ss += (d - mean) * (d - mean);
  const double var = ss / static_cast<double>(n - 1);

  const double sigma2 = 0.5;  // (1/(sqrt2 * 1 * 1))^2
  CHECK(std::abs(mean - 0.7) < 5.0 * std::sqrt(sigma2 / n));
  CHECK(std::abs(var - sigma2) < 5.0 * sigma2 * std::sqrt(2.0 / n));
}

TEST_CASE("component pick frequencies follow the weights") {
  const double pi = kTwoPi / 2.0;
  const PhaseSpectrum spec = make_spectrum(4, {{0.0, 8, {}}, {pi, 8, {}}});
  const GaussianMixture mix =
      momentum_distribution(spec, squeezed_state(8.0), 1.0);
  const std::size_t n = 100000;
  const auto draws = sample_momentum(mix, n, 77);
  std::size_t low = 0;
  for (const double d : draws) low += d < pi / 2.0;
  const double frac = static_cast<double>(low) / static_cast<double>(n);
  CHECK(std::abs(frac - 0.5) < 5.0 * std::sqrt(0.25 / n));
}
