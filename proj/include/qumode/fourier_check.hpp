#pragma once

#include <cstddef>
#include <vector>

#include "qumode/mixture.hpp"

namespace qumode {

// Evaluation grid in p_E. Must cover [min mean - 10 sigma, max mean +
// 10 sigma] of the corresponding mixture, hold at least 2^12 points, and
// resolve sigma with at least 8 points.
struct GridSpec {
  double p_min = 0.0;
  double p_max = 0.0;
  std::size_t n_points = 0;

  double spacing() const;
  double at(std::size_t i) const;
};

// Smallest valid default grid for `mix`: the required coverage interval at
// 2^12 points, widened until sigma is resolved.
GridSpec default_density_grid(const GaussianMixture& mix);

// Momentum density recomputed from first principles: the position
// wavefunction acquires phase exp(i*phase*tau*u) per eigenstate and is
// numerically Fourier-transformed term by term; the weighted squared
// magnitudes are summed on the grid. No closed-form Gaussian knowledge is
// used, so this cross-checks momentum_distribution end to end. O(x_points *
// n_points * phases); intended for verification, not hot paths.
//
// The position grid spans +-max(10*s, 10/s) in ground-width units (s = s0
// for squeezed input, 1 for coherent) with `x_points` samples. Throws if the
// grid violates its contract, if the spectrum has more than 64 distinct
// phases, or if the position grid cannot contain the wavepacket.
std::vector<double> numerical_momentum_density(const PhaseSpectrum& spec,
                                               const QumodeWavefunction& psi,
                                               double tau, const GridSpec& grid,
                                               std::size_t x_points = 1u << 16);

}  // namespace qumode
