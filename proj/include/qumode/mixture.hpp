#pragma once

#include <complex>
#include <vector>

#include "qumode/spectrum.hpp"

namespace qumode {

// Control-mode input state. Widths are in units of the ground-state width
// x0, so s0 = 1 is an unsqueezed (coherent-width) wavepacket.
struct QumodeWavefunction {
  enum class Kind { kSqueezed, kCoherent };

  Kind kind = Kind::kSqueezed;
  double s0 = 1.0;                   // squeezing factor, squeezed states only
  double x0 = 1.0;                   // ground-state width scale, > 0
  std::complex<double> alpha{0, 0};  // coherent amplitude, coherent states only
};

// Requires 1 <= s0 <= 1e9 (the delta-function limit s0 -> infinity is out of
// scope) and x0 > 0.
QumodeWavefunction squeezed_state(double s0, double x0 = 1.0);

// Requires x0 > 0 and finite alpha.
QumodeWavefunction coherent_state(std::complex<double> alpha, double x0 = 1.0);

struct GaussianComponent {
  double mean = 0.0;    // energy units (p_E)
  double weight = 0.0;  // multiplicity / 2^n
};

// Momentum distribution of the control mode after the hybrid interaction,
// expressed in energy units: an equal-width Gaussian mixture with one
// component per distinct eigenphase.
struct GaussianMixture {
  std::vector<GaussianComponent> components;  // sorted by mean
  double sigma = 0.0;   // common standard deviation, 1/(sqrt(2)*s0_eff*tau)
  double s0_eff = 1.0;  // s0 for squeezed input, 1 for coherent input
  double tau = 1.0;     // interaction time

  double total_weight() const;
};

// Builds the exact measured distribution of p_E = p*x0/tau. Squeezed input:
// components at the eigenphases with sigma = 1/(sqrt(2)*s0*tau). Coherent
// input: components shifted by Im(alpha)/tau with sigma = 1/(sqrt(2)*tau).
// Requires tau > 0.
GaussianMixture momentum_distribution(const PhaseSpectrum& spec,
                                      const QumodeWavefunction& psi,
                                      double tau);

// Mixture density at p_E; far tails underflow cleanly to 0.
double density_at(const GaussianMixture& mix, double p_e);

// E[exp(i*omega*p_E)] in closed form.
std::complex<double> characteristic_function(const GaussianMixture& mix,
                                             double omega);

}  // namespace qumode
