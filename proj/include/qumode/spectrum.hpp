#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace qumode {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Fraction of a full turn in lowest terms: phase = 2*pi*num/den,
// 0 <= num < den.
struct PhaseFraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  bool operator==(const PhaseFraction&) const = default;
};

// Reduces num/den, normalizing num into [0, den).
PhaseFraction reduce_fraction(std::int64_t num, std::int64_t den);

struct PhaseEntry {
  double phase = 0.0;             // radians
  std::int64_t multiplicity = 1;  // >= 1
  // Set when the phase is exactly 2*pi*num/den (always set for modular
  // spectra); merging is then exact instead of tolerance-based.
  std::optional<PhaseFraction> fraction;
};

// Eigenphase multiset of an n-qubit diagonal unitary. Entries are sorted by
// phase, duplicates are merged, and multiplicities sum to 2^n. This is the
// single source of truth every distribution downstream is built from.
struct PhaseSpectrum {
  int n_qubits = 0;
  std::vector<PhaseEntry> entries;

  std::int64_t total_multiplicity() const;
  std::size_t distinct_phases() const { return entries.size(); }
};

// Validates, sorts, and merges `entries` into a well-formed spectrum.
// Throws std::invalid_argument on: n_qubits outside [0, 24], multiplicities
// < 1, non-finite phases, or multiplicities not summing to 2^n_qubits.
PhaseSpectrum make_spectrum(int n_qubits, std::vector<PhaseEntry> entries);

// Order-finding instance: the permutation l -> l*q mod N on computational
// basis states l < N, with states l >= N left fixed as padding.
struct ModularProblem {
  std::int64_t N = 0;
  std::int64_t q = 0;
  std::int64_t order = 0;  // multiplicative order of q mod N
  int n_qubits = 0;        // ceil(log2 N)
};

// Requires N >= 3, 1 < q < N, gcd(q, N) == 1.
ModularProblem make_modular_problem(std::int64_t N, std::int64_t q);

// Smallest r >= 1 with q^r = 1 mod N. Same preconditions as above.
std::int64_t multiplicative_order(std::int64_t N, std::int64_t q);

// Eigenphase spectrum of the modular multiplication permutation, padding
// included. Each cycle of length L contributes phases 2*pi*m/L, m = 0..L-1;
// equal fractions are merged exactly.
PhaseSpectrum modular_spectrum(std::int64_t N, std::int64_t q);

// 2^n phases drawn uniformly from [0, 2*pi), multiplicity 1 each.
// Requires 0 <= n_qubits <= 12.
PhaseSpectrum random_spectrum(int n_qubits, std::uint64_t seed);

// (1/2^n) * sum_m mult_m * exp(i * t * phase_m).
std::complex<double> exact_normalized_trace(const PhaseSpectrum& spec,
                                            double t = 1.0);

}  // namespace qumode
