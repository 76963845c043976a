#include "qumode/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qumode/rng.hpp"

namespace qumode {

namespace {

constexpr int kMaxQubits = 24;
constexpr int kMaxRandomQubits = 12;
// Two floating-point phases closer than this are treated as one eigenvalue.
constexpr double kMergeTolerance = 1e-12;

bool mergeable(const PhaseEntry& a, const PhaseEntry& b) {
  if (a.fraction && b.fraction) {
    return *a.fraction == *b.fraction;
  }
  return std::abs(a.phase - b.phase) <= kMergeTolerance;
}

}  // namespace

PhaseFraction reduce_fraction(std::int64_t num, std::int64_t den) {
  if (den <= 0) {
    throw std::invalid_argument("reduce_fraction: denominator must be positive");
  }
  num %= den;
  if (num < 0) {
    num += den;
  }
  const std::int64_t g = std::gcd(num, den);
  return PhaseFraction{num / g, den / g};
}

std::int64_t PhaseSpectrum::total_multiplicity() const {
  std::int64_t total = 0;
  for (const auto& e : entries) {
    total += e.multiplicity;
  }
  return total;
}

PhaseSpectrum make_spectrum(int n_qubits, std::vector<PhaseEntry> entries) {
  if (n_qubits < 0 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("make_spectrum: n_qubits out of range");
  }
  for (auto& e : entries) {
    if (!std::isfinite(e.phase)) {
      throw std::invalid_argument("make_spectrum: non-finite phase");
    }
    if (e.multiplicity < 1) {
      throw std::invalid_argument("make_spectrum: multiplicity must be >= 1");
    }
    if (e.fraction) {
      const PhaseFraction reduced = reduce_fraction(e.fraction->num, e.fraction->den);
      e.fraction = reduced;
      e.phase = kTwoPi * static_cast<double>(reduced.num) /
                static_cast<double>(reduced.den);
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const PhaseEntry& a, const PhaseEntry& b) { return a.phase < b.phase; });
  std::vector<PhaseEntry> merged;
  for (auto& e : entries) {
    if (!merged.empty() && mergeable(merged.back(), e)) {
      merged.back().multiplicity += e.multiplicity;
      if (!merged.back().fraction && e.fraction) {
        merged.back().fraction = e.fraction;
        merged.back().phase = e.phase;
      }
    } else {
      merged.push_back(e);
    }
  }
  PhaseSpectrum spec{n_qubits, std::move(merged)};
  const std::int64_t expected = std::int64_t{1} << n_qubits;
  if (spec.total_multiplicity() != expected) {
    throw std::invalid_argument(
        "make_spectrum: multiplicities sum to " + std::to_string(spec.total_multiplicity()) +
        ", expected 2^n = " + std::to_string(expected));
  }
  return spec;
}

std::int64_t multiplicative_order(std::int64_t N, std::int64_t q) {
  if (N < 3 || q <= 1 || q >= N) {
    throw std::invalid_argument("multiplicative_order: need N >= 3 and 1 < q < N");
  }
  if (std::gcd(N, q) != 1) {
    throw std::invalid_argument("multiplicative_order: q shares a factor with N");
  }
  std::int64_t r = 1;
  std::int64_t x = q % N;
  while (x != 1) {
    x = (x * q) % N;
    ++r;
  }
  return r;
}

ModularProblem make_modular_problem(std::int64_t N, std::int64_t q) {
  const std::int64_t r = multiplicative_order(N, q);  // validates N, q
  int n = 1;
  while ((std::int64_t{1} << n) < N) {
    ++n;
  }
  return ModularProblem{N, q, r, n};
}

PhaseSpectrum modular_spectrum(std::int64_t N, std::int64_t q) {
  const ModularProblem prob = make_modular_problem(N, q);
  const std::int64_t size = std::int64_t{1} << prob.n_qubits;
  std::vector<PhaseEntry> entries;
  std::vector<bool> seen(static_cast<std::size_t>(size), false);
  for (std::int64_t l = 0; l < size; ++l) {
    if (seen[static_cast<std::size_t>(l)]) {
      continue;
    }
    // Padding states and l = 0 are fixed points; other states sit on
    // multiplicative cycles whose length divides the order of q.
    std::int64_t len = 0;
    std::int64_t x = l;
    while (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
      ++len;
      x = (l < N) ? (x * q) % N : x;
    }
    for (std::int64_t m = 0; m < len; ++m) {
      const PhaseFraction f = reduce_fraction(m, len);
      PhaseEntry e;
      e.fraction = f;
      e.phase = kTwoPi * static_cast<double>(f.num) / static_cast<double>(f.den);
      e.multiplicity = 1;
      entries.push_back(e);
    }
  }
  return make_spectrum(prob.n_qubits, std::move(entries));
}

PhaseSpectrum random_spectrum(int n_qubits, std::uint64_t seed) {
  if (n_qubits < 0 || n_qubits > kMaxRandomQubits) {
    throw std::invalid_argument("random_spectrum: n_qubits out of [0, 12]");
  }
  SeededRng rng(seed);
  std::vector<PhaseEntry> entries;
  const std::int64_t count = std::int64_t{1} << n_qubits;
  entries.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    PhaseEntry e;
    e.phase = kTwoPi * rng.uniform01_halfopen();
    e.multiplicity = 1;
    entries.push_back(e);
  }
  return make_spectrum(n_qubits, std::move(entries));
}

std::complex<double> exact_normalized_trace(const PhaseSpectrum& spec, double t) {
  std::complex<double> sum{0.0, 0.0};
  for (const auto& e : spec.entries) {
    sum += static_cast<double>(e.multiplicity) *
           std::polar(1.0, t * e.phase);
  }
  const double total = static_cast<double>(std::int64_t{1} << spec.n_qubits);
  return sum / total;
}

}  // namespace qumode
