#include "qumode/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qumode/mixture.hpp"

namespace qumode {

namespace {

constexpr double kSqrtPi = 1.7724538509055160272981674833411;

// Mass of one unit-weight component centered at mu inside [a, b].
double component_mass(double mu, double s0tau, double a, double b) {
  return 0.5 * (std::erf(s0tau * (b - mu)) - std::erf(s0tau * (a - mu)));
}

struct Interval {
  double lo, hi;
};

std::vector<Interval> merged_intervals(const PhaseSpectrum& spec, double half_width) {
  std::vector<Interval> raw;
  raw.reserve(spec.entries.size());
  for (const auto& e : spec.entries) {
    raw.push_back(Interval{e.phase - half_width, e.phase + half_width});
  }
  std::sort(raw.begin(), raw.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> merged;
  for (const auto& iv : raw) {
    if (!merged.empty() && iv.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    } else {
      merged.push_back(iv);
    }
  }
  return merged;
}

}  // namespace

void validate(const ExperimentConfig& cfg) {
  if (!(cfg.s0 >= 1.0) || cfg.s0 > 1e9) {
    throw std::invalid_argument("config: s0 must lie in [1, 1e9]");
  }
  if (!(cfg.tau > 0.0) || !std::isfinite(cfg.tau)) {
    throw std::invalid_argument("config: tau must be positive");
  }
  if (!(cfg.x0 > 0.0) || !std::isfinite(cfg.x0)) {
    throw std::invalid_argument("config: x0 must be positive");
  }
  if (!(cfg.delta_E > 0.0) || !std::isfinite(cfg.delta_E)) {
    throw std::invalid_argument("config: delta_E must be positive");
  }
  if (cfg.t_bound < 1) {
    throw std::invalid_argument("config: t_bound must be >= 1");
  }
  if (cfg.samples < 1) {
    throw std::invalid_argument("config: samples must be >= 1");
  }
  if (cfg.threads < 1) {
    throw std::invalid_argument("config: threads must be >= 1");
  }
}

double success_probability(const PhaseSpectrum& spec, const ExperimentConfig& cfg) {
  validate(cfg);
  if (spec.entries.empty()) {
    throw std::invalid_argument("success_probability: empty spectrum");
  }
  const double s0tau = cfg.s0 * cfg.tau;
  const double total = static_cast<double>(std::int64_t{1} << spec.n_qubits);
  double p = 0.0;
  for (const auto& iv : merged_intervals(spec, cfg.delta_E)) {
    for (const auto& e : spec.entries) {
      p += static_cast<double>(e.multiplicity) / total *
           component_mass(e.phase, s0tau, iv.lo, iv.hi);
    }
  }
  return std::min(p, 1.0);
}

SuccessSplit success_probability_split(const PhaseSpectrum& spec,
                                       const ExperimentConfig& cfg) {
  validate(cfg);
  if (spec.entries.empty()) {
    throw std::invalid_argument("success_probability_split: empty spectrum");
  }
  const double s0tau = cfg.s0 * cfg.tau;
  const double total = static_cast<double>(std::int64_t{1} << spec.n_qubits);
  SuccessSplit split;
  split.diagonal = std::erf(s0tau * cfg.delta_E);
  for (const auto& target : spec.entries) {
    for (const auto& e : spec.entries) {
      if (&e == &target) {
        continue;
      }
      split.overlap += static_cast<double>(e.multiplicity) / total *
                       component_mass(e.phase, s0tau, target.phase - cfg.delta_E,
                                      target.phase + cfg.delta_E);
    }
  }
  split.union_total = success_probability(spec, cfg);
  return split;
}

std::int64_t measurement_budget(double p) {
  if (!(p > 0.0) || p > 1.0) {
    throw std::invalid_argument("measurement_budget: need 0 < p <= 1");
  }
  return static_cast<std::int64_t>(std::ceil(1.0 / p));
}

TimeEnergyReport time_energy_check(const ExperimentConfig& cfg) {
  validate(cfg);
  const double arg = cfg.tau * cfg.s0 * cfg.delta_E;
  TimeEnergyReport report;
  report.erf_margin = static_cast<double>(cfg.t_bound) * std::erf(arg);
  report.linear_margin = static_cast<double>(cfg.t_bound) * 2.0 * arg / kSqrtPi;
  report.satisfied = report.erf_margin >= 1.0;
  return report;
}

PhaseEstimateReport estimate_phases(const std::vector<double>& samples,
                                    const ExperimentConfig& cfg,
                                    double threshold) {
  validate(cfg);
  if (samples.empty()) {
    throw std::invalid_argument("estimate_phases: no samples");
  }
  if (!(threshold >= 0.0) || threshold >= 1.0) {
    throw std::invalid_argument("estimate_phases: threshold must lie in [0, 1)");
  }
  PhaseEstimateReport report;
  report.samples_used = static_cast<std::int64_t>(samples.size());
  report.bin_width = std::min(cfg.delta_E, 1.0 / (2.0 * cfg.s0 * cfg.tau));

  for (double s : samples) {
    if (!std::isfinite(s)) {
      throw std::invalid_argument("estimate_phases: non-finite sample");
    }
  }
  const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  const double span_bins = std::floor((hi - lo) / report.bin_width);
  if (span_bins >= static_cast<double>(std::size_t{1} << 27)) {
    throw std::invalid_argument(
        "estimate_phases: histogram too fine for the sample span; raise "
        "delta_E or lower s0*tau");
  }
  const std::size_t n_bins = static_cast<std::size_t>(span_bins) + 1;
  report.bin_origin = lo;  // bin centers at lo + k * width
  report.bin_mass.assign(n_bins, 0.0);
  const double per_sample = 1.0 / static_cast<double>(samples.size());
  for (double s : samples) {
    std::size_t k = static_cast<std::size_t>(
        std::floor((s - lo) / report.bin_width + 0.5));
    k = std::min(k, n_bins - 1);
    report.bin_mass[k] += per_sample;
  }

  // Local maxima with lowest-bin plateau representatives.
  std::vector<std::size_t> maxima;
  const auto& mass = report.bin_mass;
  for (std::size_t i = 0; i < n_bins; ++i) {
    if (i > 0 && mass[i] <= mass[i - 1]) {
      continue;  // not rising into i, or plateau continuing
    }
    std::size_t j = i;
    while (j + 1 < n_bins && mass[j + 1] == mass[i]) {
      ++j;
    }
    const bool falls_right = j + 1 == n_bins || mass[j + 1] < mass[i];
    if (falls_right) {
      maxima.push_back(i);
    }
  }

  // Segment boundaries at the first minimum between consecutive maxima.
  std::vector<std::size_t> starts{0};
  for (std::size_t m = 1; m < maxima.size(); ++m) {
    std::size_t valley = maxima[m - 1];
    for (std::size_t k = maxima[m - 1] + 1; k < maxima[m]; ++k) {
      if (mass[k] < mass[valley]) {
        valley = k;
      }
    }
    starts.push_back(valley + 1);
  }
  starts.push_back(n_bins);

  for (std::size_t m = 0; m < maxima.size(); ++m) {
    double seg_mass = 0.0;
    double weighted = 0.0;
    for (std::size_t k = starts[m]; k < starts[m + 1]; ++k) {
      seg_mass += mass[k];
      weighted += mass[k] * (report.bin_origin +
                             report.bin_width * static_cast<double>(k));
    }
    if (seg_mass > threshold) {
      report.peaks.push_back(Peak{weighted / seg_mass, seg_mass});
    }
  }
  std::stable_sort(report.peaks.begin(), report.peaks.end(),
                   [](const Peak& a, const Peak& b) { return a.mass > b.mass; });
  return report;
}

std::vector<double> eigenvector_posterior(const PhaseSpectrum& spec,
                                          double p_measured,
                                          const ExperimentConfig& cfg) {
  validate(cfg);
  if (spec.entries.empty()) {
    throw std::invalid_argument("eigenvector_posterior: empty spectrum");
  }
  if (!std::isfinite(p_measured)) {
    throw std::invalid_argument("eigenvector_posterior: non-finite measurement");
  }
  const double s0tau = cfg.s0 * cfg.tau;
  std::vector<double> weights(spec.entries.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < spec.entries.size(); ++i) {
    const double d = s0tau * (p_measured - spec.entries[i].phase);
    weights[i] = static_cast<double>(spec.entries[i].multiplicity) *
                 std::exp(-d * d);
    sum += weights[i];
  }
  if (sum <= 0.0 || !std::isfinite(sum)) {
    throw std::domain_error(
        "eigenvector_posterior: all weights underflow; measurement is "
        "impossibly far from every phase at this resolution");
  }
  for (double& w : weights) {
    w /= sum;
  }
  return weights;
}

}  // namespace qumode
