#pragma once

#include <cstdint>
#include <vector>

#include "qumode/spectrum.hpp"

namespace qumode {

// Shared knobs for the measurement pipelines. validate() enforces the
// ranges; functions taking a config call it on entry.
struct ExperimentConfig {
  double s0 = 1.0;        // squeezing, [1, 1e9]
  double tau = 1.0;       // interaction time, > 0
  double x0 = 1.0;        // ground-state width, > 0
  double delta_E = 0.1;   // target eigenvalue resolution, > 0
  std::int64_t t_bound = 100;  // measurement budget, >= 1
  std::int64_t samples = 10000;  // draws per estimation call, >= 1
  std::uint64_t seed = 0;
  int threads = 1;
};

void validate(const ExperimentConfig& cfg);

// Probability that one squeezed-input measurement lands within delta_E of
// some eigenphase: the mixture mass of the union of intervals
// [phase - delta_E, phase + delta_E], overlaps merged so nothing is counted
// twice. Bounded below by erf(s0*tau*delta_E).
double success_probability(const PhaseSpectrum& spec, const ExperimentConfig& cfg);

// The same mass split into the per-phase diagonal term erf(s0*tau*delta_E)
// and the cross-component overlap, with no interval merging. diagonal +
// overlap >= union_total; the split is reported for comparison only.
struct SuccessSplit {
  double diagonal = 0.0;
  double overlap = 0.0;
  double union_total = 0.0;
};
SuccessSplit success_probability_split(const PhaseSpectrum& spec,
                                       const ExperimentConfig& cfg);

// ceil(1/p) measurements to expect one success. Requires 0 < p <= 1.
std::int64_t measurement_budget(double p);

// Resolution criterion: t_bound * erf(tau * s0 * delta_E) >= 1, reported in
// both the exact erf form and the small-argument linearization.
struct TimeEnergyReport {
  bool satisfied = false;
  double erf_margin = 0.0;     // t_bound * erf(tau*s0*delta_E)
  double linear_margin = 0.0;  // t_bound * (2/sqrt(pi)) * tau*s0*delta_E
};
TimeEnergyReport time_energy_check(const ExperimentConfig& cfg);

struct Peak {
  double estimate = 0.0;
  double mass = 0.0;
};

// Histogram-based peak extraction over measured p_E values.
struct PhaseEstimateReport {
  std::vector<Peak> peaks;  // sorted by mass, descending
  double bin_width = 0.0;
  double bin_origin = 0.0;  // center of bin 0
  std::vector<double> bin_mass;
  std::int64_t samples_used = 0;
};

// Bins samples at width min(delta_E, 1/(2*s0*tau)), then reports one peak
// per local maximum whose surrounding mass segment clears `threshold`
// (fraction of total mass). Segment boundaries are the minima between
// maxima; each peak's estimate is the mass-weighted mean of its segment's
// bin centers and its mass is the segment mass, so peak masses sum to <= 1.
// Equal-mass plateaus resolve to the lowest p_E bin. Throws on empty input.
PhaseEstimateReport estimate_phases(const std::vector<double>& samples,
                                    const ExperimentConfig& cfg,
                                    double threshold = 0.01);

// Posterior weight of each spectrum entry given one measured p_E:
// proportional to multiplicity * exp(-(s0*tau)^2 * (p - phase)^2). Output
// aligns with spec.entries and sums to 1. Throws std::domain_error when
// every weight underflows to zero in double precision (measurement
// impossibly far from all phases).
std::vector<double> eigenvector_posterior(const PhaseSpectrum& spec,
                                          double p_measured,
                                          const ExperimentConfig& cfg);

}  // namespace qumode
