#include "qumode/resources.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qumode/factoring.hpp"

namespace qumode {
namespace {

void check_s0(double s0) {
  if (!(s0 >= 1.0) || !std::isfinite(s0)) {
    throw std::invalid_argument("resources: s0 must be >= 1");
  }
}

void fill_common(ResourceReport& r) {
  r.mean_photons = mean_photon_number(r.s0);
  r.peak_width = 1.0 / r.s0;
  r.equivalent_qubits = std::log2(r.qudit_dim);
}

void row(std::ostringstream& os, const std::string& key, double value) {
  os << "  " << key;
  for (std::size_t i = key.size(); i < 20; ++i) os << ' ';
  os << value << '\n';
}

}  // namespace

double mean_photon_number(double s0) {
  check_s0(s0);
  const double sh = std::sinh(std::log(s0));
  return sh * sh;
}

double qudit_dimension(double s0, double delta_phi) {
  check_s0(s0);
  if (!(delta_phi > 0.0) || !std::isfinite(delta_phi)) {
    throw std::invalid_argument("qudit_dimension: delta_phi must be > 0");
  }
  return std::max(1.0, s0 * delta_phi);
}

ResourceReport dqc1_report() {
  ResourceReport r;
  r.context = ResourceContext::kDqc1;
  r.s0 = 1.0;
  r.delta_phi = 2.0;
  r.qudit_dim = 2.0;
  fill_common(r);
  r.note =
      "trace estimation encodes one effective qubit: D fixed at 2 by the "
      "two-peak convention, s0 = 1";
  return r;
}

ResourceReport factoring_report(std::int64_t N) {
  if (N < 4 || is_prime(N)) {
    throw std::invalid_argument("factoring_report: N must be composite");
  }
  const int n =
      static_cast<int>(std::bit_width(static_cast<std::uint64_t>(N - 1)));
  ResourceReport r;
  r.context = ResourceContext::kFactoring;
  r.N = N;
  r.s0 = std::ldexp(1.0, 2 * n);
  r.delta_phi = 1.0 / static_cast<double>(N);
  r.qudit_dim = qudit_dimension(r.s0, r.delta_phi);
  r.qudit_dim_idealized = static_cast<double>(N);
  fill_common(r);
  if (r.qudit_dim != *r.qudit_dim_idealized) {
    r.note =
        "formula D = s0/N uses the padded register s0 = 2^{2 ceil(log2 N)}, "
        "so it exceeds the idealized D = N from s0 = N^2";
  } else {
    r.note = "N is a power of two: formula and idealized D coincide";
  }
  return r;
}

ResourceReport phase_estimation_report(double delta_E, std::int64_t t_bound,
                                       double tau) {
  if (!(delta_E > 0.0) || !std::isfinite(delta_E)) {
    throw std::invalid_argument("phase_estimation_report: delta_E must be > 0");
  }
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("phase_estimation_report: tau must be > 0");
  }
  if (t_bound < 1) {
    throw std::invalid_argument("phase_estimation_report: t_bound must be >= 1");
  }
  ResourceReport r;
  r.context = ResourceContext::kPhaseEstimation;
  r.delta_E = delta_E;
  r.s0 = std::max(1.0, 1.0 / (static_cast<double>(t_bound) * tau * delta_E));
  r.delta_phi = delta_E;
  r.qudit_dim = qudit_dimension(r.s0, r.delta_phi);
  fill_common(r);
  r.note =
      "s0 solves t_bound * tau * s0 * delta_E = 1 (floored at 1); delta_phi "
      "taken as the target resolution";
  return r;
}

std::string format_table(const ResourceReport& report) {
  std::ostringstream os;
  os.precision(12);
  switch (report.context) {
    case ResourceContext::kDqc1:
      os << "context: trace estimation\n";
      break;
    case ResourceContext::kFactoring:
      os << "context: factoring N=" << *report.N << '\n';
      break;
    case ResourceContext::kPhaseEstimation:
      os << "context: phase estimation delta_E=" << *report.delta_E << '\n';
      break;
  }
  row(os, "s0", report.s0);
  row(os, "mean_photons", report.mean_photons);
  row(os, "delta_phi", report.delta_phi);
  row(os, "peak_width", report.peak_width);
  row(os, "qudit_dim", report.qudit_dim);
  if (report.qudit_dim_idealized) {
    row(os, "qudit_dim_ideal", *report.qudit_dim_idealized);
  }
  row(os, "equivalent_qubits", report.equivalent_qubits);
  os << "  note: " << report.note << '\n';
  return os.str();
}

}  // namespace qumode
