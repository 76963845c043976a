#include "qumode/mixture.hpp"

#include <cmath>
#include <stdexcept>

namespace qumode {

namespace {

constexpr double kMaxSqueezing = 1e9;
constexpr double kSqrt2 = 1.4142135623730950488016887242097;

void check_x0(double x0) {
  if (!(x0 > 0.0) || !std::isfinite(x0)) {
    throw std::invalid_argument("wavefunction: x0 must be positive and finite");
  }
}

}  // namespace

QumodeWavefunction squeezed_state(double s0, double x0) {
  check_x0(x0);
  if (!(s0 >= 1.0) || !std::isfinite(s0)) {
    throw std::invalid_argument("squeezed_state: s0 must be >= 1");
  }
  if (s0 > kMaxSqueezing) {
    throw std::invalid_argument("squeezed_state: s0 capped at 1e9");
  }
  QumodeWavefunction psi;
  psi.kind = QumodeWavefunction::Kind::kSqueezed;
  psi.s0 = s0;
  psi.x0 = x0;
  return psi;
}

QumodeWavefunction coherent_state(std::complex<double> alpha, double x0) {
  check_x0(x0);
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
    throw std::invalid_argument("coherent_state: alpha must be finite");
  }
  QumodeWavefunction psi;
  psi.kind = QumodeWavefunction::Kind::kCoherent;
  psi.alpha = alpha;
  psi.x0 = x0;
  return psi;
}

double GaussianMixture::total_weight() const {
  double total = 0.0;
  for (const auto& c : components) {
    total += c.weight;
  }
  return total;
}

GaussianMixture momentum_distribution(const PhaseSpectrum& spec,
                                      const QumodeWavefunction& psi,
                                      double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("momentum_distribution: tau must be positive");
  }
  const bool squeezed = psi.kind == QumodeWavefunction::Kind::kSqueezed;
  const double s0_eff = squeezed ? psi.s0 : 1.0;
  const double shift = squeezed ? 0.0 : psi.alpha.imag() / tau;

  GaussianMixture mix;
  mix.s0_eff = s0_eff;
  mix.tau = tau;
  mix.sigma = 1.0 / (kSqrt2 * s0_eff * tau);
  // Dividing an integer multiplicity by 2^n is exact in binary, so the
  // weights sum to 1 exactly.
  const double total = static_cast<double>(std::int64_t{1} << spec.n_qubits);
  mix.components.reserve(spec.entries.size());
  for (const auto& e : spec.entries) {
    mix.components.push_back(GaussianComponent{
        e.phase + shift, static_cast<double>(e.multiplicity) / total});
  }
  return mix;
}

double density_at(const GaussianMixture& mix, double p_e) {
  const double inv_sigma = 1.0 / mix.sigma;
  const double norm = inv_sigma / std::sqrt(kTwoPi);
  double density = 0.0;
  for (const auto& c : mix.components) {
    const double z = (p_e - c.mean) * inv_sigma;
    density += c.weight * norm * std::exp(-0.5 * z * z);
  }
  return density;
}

std::complex<double> characteristic_function(const GaussianMixture& mix,
                                             double omega) {
  const double damping =
      std::exp(-0.5 * omega * omega * mix.sigma * mix.sigma);
  std::complex<double> sum{0.0, 0.0};
  for (const auto& c : mix.components) {
    sum += c.weight * std::polar(1.0, omega * c.mean);
  }
  return damping * sum;
}

}  // namespace qumode
