#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qumode/spectrum.hpp"

namespace qumode {

// Sampling overhead of finite squeezing: sinh(1/(2*s0^2)) + exp(-1/(2*s0^2)).
// Decreases monotonically to 1 as s0 grows. Requires s0 >= 1.
double sample_overhead_factor(double s0);

// Measurements sufficient to pin both trace components to their target
// errors: ceil(overhead / min(Re delta, Im delta)^2). Both components of
// delta must be positive.
std::int64_t required_samples(std::complex<double> delta, double s0);

struct TraceEstimate {
  std::complex<double> value{0.0, 0.0};     // de-biased estimate
  std::complex<double> raw_mean{0.0, 0.0};  // mean of exp(i * p_E)
  std::int64_t samples_used = 0;
  double correction = 1.0;  // exp(-1/(4*s0^2)); value = raw_mean / correction
  std::complex<double> target_delta{0.0, 0.0};
};

// Normalized-trace estimator at tau = 1: averages exp(i * p_E) over the
// samples and divides out the squeezing damping exp(-1/(4*s0^2)).
// `apply_correction = false` reports the raw mean as the value. |raw_mean|
// never exceeds 1.
TraceEstimate estimate_trace(const std::vector<double>& p_samples, double s0,
                             bool apply_correction = true);

// General-evolution-time variant. A run of length tau narrows the mixture
// peaks to 1/(sqrt(2)*s0*tau), so the same observable exp(i*p_E) carries the
// exact damping exp(-1/(4*(s0*tau)^2)) in front of the normalized trace.
// Equivalent to estimate_trace with effective squeezing s0*tau.
TraceEstimate estimate_trace_at_tau(const std::vector<double>& p_samples,
                                    double s0, double tau,
                                    bool apply_correction = true);

// What the estimator converges to: exp(-1/(4*s0^2)) * normalized trace.
std::complex<double> analytic_trace_expectation(const PhaseSpectrum& spec,
                                                double s0);

// Exact per-sample variances of cos(p_E) and sin(p_E) under the tau = 1
// mixture (second moments via the frequency-2 characteristic function),
// with the closed-form bound exp(-1/(2*s0^2)) * overhead both must satisfy.
struct VarianceBounds {
  double sigma_r2 = 0.0;
  double sigma_i2 = 0.0;
  double bound = 0.0;
};
VarianceBounds variance_bounds(const PhaseSpectrum& spec, double s0);

}  // namespace qumode
