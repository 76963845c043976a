#include "qumode/fourier_check.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace qumode {

namespace {

constexpr std::size_t kMinGridPoints = 1u << 12;
constexpr std::size_t kMaxPhases = 64;
constexpr double kPi = 3.1415926535897932384626433832795;

void validate_grid(const GridSpec& grid, const GaussianMixture& mix) {
  if (grid.n_points < kMinGridPoints) {
    throw std::invalid_argument("grid: need at least 2^12 points");
  }
  if (!(grid.p_max > grid.p_min)) {
    throw std::invalid_argument("grid: p_max must exceed p_min");
  }
  double lo = mix.components.front().mean;
  double hi = lo;
  for (const auto& c : mix.components) {
    lo = std::min(lo, c.mean);
    hi = std::max(hi, c.mean);
  }
  // Tiny slack so a grid built from these same endpoints revalidates.
  const double pad = 1e-9 * mix.sigma;
  if (grid.p_min > lo - 10.0 * mix.sigma + pad ||
      grid.p_max < hi + 10.0 * mix.sigma - pad) {
    throw std::invalid_argument("grid: must cover means +- 10 sigma");
  }
  if (grid.spacing() > mix.sigma / 8.0) {
    throw std::invalid_argument("grid: sigma under-resolved, need >= 8 points per sigma");
  }
}

}  // namespace

double GridSpec::spacing() const {
  return (p_max - p_min) / static_cast<double>(n_points - 1);
}

double GridSpec::at(std::size_t i) const {
  return p_min + spacing() * static_cast<double>(i);
}

GridSpec default_density_grid(const GaussianMixture& mix) {
  if (mix.components.empty()) {
    throw std::invalid_argument("default_density_grid: empty mixture");
  }
  double lo = mix.components.front().mean;
  double hi = lo;
  for (const auto& c : mix.components) {
    lo = std::min(lo, c.mean);
    hi = std::max(hi, c.mean);
  }
  GridSpec grid;
  grid.p_min = lo - 10.0 * mix.sigma;
  grid.p_max = hi + 10.0 * mix.sigma;
  const double required =
      std::ceil((grid.p_max - grid.p_min) / (mix.sigma / 8.0)) + 1.0;
  grid.n_points = std::max<std::size_t>(kMinGridPoints,
                                        static_cast<std::size_t>(required));
  return grid;
}

std::vector<double> numerical_momentum_density(const PhaseSpectrum& spec,
                                               const QumodeWavefunction& psi,
                                               double tau, const GridSpec& grid,
                                               std::size_t x_points) {
  if (spec.distinct_phases() > kMaxPhases) {
    throw std::invalid_argument("numerical_momentum_density: more than 64 distinct phases");
  }
  if (x_points < 2) {
    throw std::invalid_argument("numerical_momentum_density: x_points too small");
  }
  const GaussianMixture mix = momentum_distribution(spec, psi, tau);  // validates tau
  validate_grid(grid, mix);

  // Everything below works in the dimensionless coordinate u = x/x0, where
  // the hybrid interaction contributes exp(i*phase*tau*u) and the conjugate
  // momentum is x0*p. The measured variable is p_E = (x0*p)/tau.
  const bool squeezed = psi.kind == QumodeWavefunction::Kind::kSqueezed;
  const double width = squeezed ? psi.s0 : 1.0;
  const double center = squeezed ? 0.0 : psi.alpha.real() / psi.x0;
  const double half_range = std::max(10.0 * width, 10.0 / width);
  if (std::abs(center) + 8.0 * width > half_range) {
    throw std::invalid_argument(
        "numerical_momentum_density: position grid cannot contain the wavepacket");
  }

  const double h = 2.0 * half_range / static_cast<double>(x_points - 1);
  std::vector<std::complex<double>> wave(x_points);
  for (std::size_t j = 0; j < x_points; ++j) {
    const double u = -half_range + h * static_cast<double>(j);
    if (squeezed) {
      wave[j] = std::exp(-u * u / (2.0 * width * width)) /
                (std::sqrt(width) * std::pow(kPi, 0.25));
    } else {
      const double d = u - center;
      const double mag = std::exp(-0.5 * d * d) / std::pow(kPi, 0.25);
      wave[j] = std::polar(mag, psi.alpha.imag() * u);
    }
  }

  const double norm = h / std::sqrt(kTwoPi);
  std::vector<double> density(grid.n_points, 0.0);
  for (std::size_t m = 0; m < spec.entries.size(); ++m) {
    const double weight = mix.components[m].weight;
    const double phase = spec.entries[m].phase;
    for (std::size_t i = 0; i < grid.n_points; ++i) {
      // Trapezoid sum of integral wave(u) * exp(i*u*omega) du at the
      // frequency this grid point and eigenphase select.
      const double omega = tau * (phase - grid.at(i));
      const std::complex<double> step = std::polar(1.0, h * omega);
      std::complex<double> rot = std::polar(1.0, -half_range * omega);
      std::complex<double> sum{0.0, 0.0};
      for (std::size_t j = 0; j < x_points; ++j) {
        // Re-anchor periodically so multiplicative phase drift stays far
        // below the 1e-6 verification tolerance.
        if ((j & 0xfff) == 0 && j != 0) {
          rot = std::polar(1.0, (-half_range + h * static_cast<double>(j)) * omega);
        }
        sum += wave[j] * rot;
        rot *= step;
      }
      const double amp2 = std::norm(sum * norm);
      density[i] += weight * tau * amp2;
    }
  }
  return density;
}

}  // namespace qumode
