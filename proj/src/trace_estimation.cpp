#include "qumode/trace_estimation.hpp"

#include <cmath>
#include <stdexcept>

namespace qumode {

namespace {

void check_s0(double s0) {
  if (!(s0 >= 1.0) || !std::isfinite(s0)) {
    throw std::invalid_argument("trace estimation: s0 must be >= 1");
  }
}

TraceEstimate estimate_impl(const std::vector<double>& p_samples, double damping,
                            bool apply_correction) {
  if (p_samples.empty()) {
    throw std::invalid_argument("estimate_trace: no samples");
  }
  TraceEstimate est;
  est.samples_used = static_cast<std::int64_t>(p_samples.size());
  est.correction = damping;
  std::complex<double> sum{0.0, 0.0};
  for (double p : p_samples) {
    sum += std::polar(1.0, p);
  }
  est.raw_mean = sum / static_cast<double>(p_samples.size());
  est.value = apply_correction ? est.raw_mean / est.correction : est.raw_mean;
  return est;
}

}  // namespace

double sample_overhead_factor(double s0) {
  check_s0(s0);
  const double a = 1.0 / (2.0 * s0 * s0);
  return std::sinh(a) + std::exp(-a);
}

std::int64_t required_samples(std::complex<double> delta, double s0) {
  if (!(delta.real() > 0.0) || !(delta.imag() > 0.0)) {
    throw std::invalid_argument("required_samples: both delta components must be positive");
  }
  const double worst = std::min(delta.real(), delta.imag());
  return static_cast<std::int64_t>(
      std::ceil(sample_overhead_factor(s0) / (worst * worst)));
}

TraceEstimate estimate_trace(const std::vector<double>& p_samples, double s0,
                             bool apply_correction) {
  check_s0(s0);
  return estimate_impl(p_samples, std::exp(-1.0 / (4.0 * s0 * s0)),
                       apply_correction);
}

TraceEstimate estimate_trace_at_tau(const std::vector<double>& p_samples,
                                    double s0, double tau,
                                    bool apply_correction) {
  check_s0(s0);
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("estimate_trace_at_tau: tau must be positive");
  }
  const double st = s0 * tau;
  return estimate_impl(p_samples, std::exp(-1.0 / (4.0 * st * st)),
                       apply_correction);
}

std::complex<double> analytic_trace_expectation(const PhaseSpectrum& spec,
                                                double s0) {
  check_s0(s0);
  return std::exp(-1.0 / (4.0 * s0 * s0)) * exact_normalized_trace(spec, 1.0);
}

VarianceBounds variance_bounds(const PhaseSpectrum& spec, double s0) {
  check_s0(s0);
  const double a = 1.0 / (2.0 * s0 * s0);
  const double d1 = std::exp(-a / 2.0);  // frequency-1 damping exp(-1/(4 s0^2))
  const double d2 = std::exp(-2.0 * a);  // frequency-2 damping exp(-1/(s0^2))
  const double total = static_cast<double>(std::int64_t{1} << spec.n_qubits);
  double c1 = 0.0, s1 = 0.0, c2 = 0.0, s2 = 0.0;
  for (const auto& e : spec.entries) {
    const double w = static_cast<double>(e.multiplicity) / total;
    c1 += w * std::cos(e.phase);
    s1 += w * std::sin(e.phase);
    c2 += w * std::cos(2.0 * e.phase);
    s2 += w * std::sin(2.0 * e.phase);
  }
  VarianceBounds vb;
  vb.sigma_r2 = 0.5 * (1.0 + d2 * c2) - d1 * d1 * c1 * c1;
  vb.sigma_i2 = 0.5 * (1.0 - d2 * c2) - d1 * d1 * s1 * s1;
  vb.bound = std::exp(-a) * sample_overhead_factor(s0);
  return vb;
}

}  // namespace qumode
