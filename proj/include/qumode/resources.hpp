#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace qumode {

// Squeezing <-> energy <-> qudit-dimension accounting for the three
// pipelines. Pure arithmetic; nothing here samples.

// sinh^2(ln s0): photon number of the squeezed control mode, 0 at s0 = 1,
// asymptotically s0^2/4. Requires s0 >= 1.
double mean_photon_number(double s0);

// D = s0 * delta_phi (proportionality constant 1 by convention), floored
// at 1: below one resolvable peak spacing there is no encodable qudit.
// Requires s0 >= 1, delta_phi > 0.
double qudit_dimension(double s0, double delta_phi);

enum class ResourceContext { kDqc1, kFactoring, kPhaseEstimation };

struct ResourceReport {
  ResourceContext context = ResourceContext::kDqc1;
  double s0 = 1.0;
  double mean_photons = 0.0;
  double delta_phi = 0.0;           // peak spacing feeding the D formula
  double peak_width = 1.0;          // w = 1/s0
  double qudit_dim = 1.0;           // from the formula (or context override)
  double equivalent_qubits = 0.0;   // log2(qudit_dim)
  std::optional<std::int64_t> N;    // factoring only
  // Factoring only: the idealized D = N that s0 = N^2, delta_phi = 1/N
  // would give; differs from qudit_dim because s0 is padded to 2^{2n}.
  std::optional<double> qudit_dim_idealized;
  std::optional<double> delta_E;    // phase estimation only
  std::string note;                 // conventions and discrepancies, in words
};

// Two-peak trace-estimation setting: s0 = 1, D = 2, one equivalent qubit.
ResourceReport dqc1_report();

// Order-finding setting for composite N: s0 = 2^{2n} with n = ceil(log2 N),
// delta_phi = 1/N. Both the formula D = 2^{2n}/N and the idealized D = N
// are reported; they disagree exactly when N is not a power of two.
ResourceReport factoring_report(std::int64_t N);

// Minimal squeezing meeting the resolution criterion at equality,
// t_bound * tau * s0 * delta_E = 1, floored at the unsqueezed s0 = 1.
// Requires delta_E > 0, tau > 0, t_bound >= 1.
ResourceReport phase_estimation_report(double delta_E, std::int64_t t_bound,
                                       double tau);

// Aligned two-column text rendering for terminal output.
std::string format_table(const ResourceReport& report);

}  // namespace qumode
