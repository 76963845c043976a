#include "doctest.h"

#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

#include "qumode/spectrum.hpp"

using namespace qumode;

TEST_CASE("reduce_fraction normalizes into [0, den) in lowest terms") {
  CHECK(reduce_fraction(3, 6) == PhaseFraction{1, 2});
  CHECK(reduce_fraction(-1, 4) == PhaseFraction{3, 4});
  CHECK(reduce_fraction(5, 4) == PhaseFraction{1, 4});
  CHECK(reduce_fraction(0, 7) == PhaseFraction{0, 1});
  CHECK(reduce_fraction(4, 4) == PhaseFraction{0, 1});
  CHECK(reduce_fraction(-9, 6) == PhaseFraction{1, 2});
  CHECK_THROWS_AS(reduce_fraction(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(reduce_fraction(1, -2), std::invalid_argument);
}

TEST_CASE("make_spectrum sorts, merges, and enforces the 2^n budget") {
  const PhaseSpectrum spec =
      make_spectrum(2, {{3.0, 1, {}}, {1.0, 2, {}}, {3.0, 1, {}}});
  REQUIRE(spec.entries.size() == 2);
  CHECK(spec.entries[0].phase == 1.0);
  CHECK(spec.entries[0].multiplicity == 2);
  CHECK(spec.entries[1].phase == 3.0);
  CHECK(spec.entries[1].multiplicity == 2);
  CHECK(spec.total_multiplicity() == 4);
  CHECK(spec.distinct_phases() == 2);

  // Phases closer than the merge tolerance collapse into one entry.
  const PhaseSpectrum merged =
      make_spectrum(1, {{2.0, 1, {}}, {2.0 + 5e-13, 1, {}}});
  CHECK(merged.entries.size() == 1);
  CHECK(merged.entries[0].multiplicity == 2);

  CHECK_THROWS_AS(make_spectrum(2, {{0.0, 3, {}}}), std::invalid_argument);
  CHECK_THROWS_AS(make_spectrum(-1, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_spectrum(25, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_spectrum(0, {{0.0, 0, {}}}), std::invalid_argument);
  const double bad = std::nan("");
  CHECK_THROWS_AS(make_spectrum(0, {{bad, 1, {}}}), std::invalid_argument);
}

TEST_CASE("multiplicative_order agrees with the naive loop") {
  for (std::int64_t N = 3; N <= 40; ++N) {
    for (std::int64_t q = 2; q < N; ++q) {
      if (std::gcd(q, N) != 1) continue;
      std::int64_t r = 1;
      std::int64_t acc = q % N;
      while (acc != 1) {
        acc = acc * q % N;
        ++r;
      }
      CHECK(multiplicative_order(N, q) == r);
    }
  }
  CHECK(multiplicative_order(15, 2) == 4);
  CHECK(multiplicative_order(15, 4) == 2);
  CHECK(multiplicative_order(21, 2) == 6);
  CHECK_THROWS_AS(multiplicative_order(15, 3), std::invalid_argument);
  CHECK_THROWS_AS(multiplicative_order(15, 1), std::invalid_argument);
  CHECK_THROWS_AS(multiplicative_order(15, 15), std::invalid_argument);
}

TEST_CASE("make_modular_problem fills order and register size") {
  const ModularProblem p = make_modular_problem(15, 2);
  CHECK(p.N == 15);
  CHECK(p.q == 2);
  CHECK(p.order == 4);
  CHECK(p.n_qubits == 4);
  CHECK(make_modular_problem(16, 3).n_qubits == 4);
  CHECK(make_modular_problem(17, 3).n_qubits == 5);
  CHECK_THROWS_AS(make_modular_problem(15, 5), std::invalid_argument);
}

TEST_CASE("modular spectrum of l -> 2l mod 15") {
  const PhaseSpectrum spec = modular_spectrum(15, 2);
  REQUIRE(spec.n_qubits == 4);
  REQUIRE(spec.entries.size() == 4);
  // 0 and 15 are fixed, {5,10} is a 2-cycle, the rest fall in 4-cycles:
  // multiplicities 6, 3, 4, 3 at phases 0, 1/4, 1/2, 3/4 of a turn.
  const PhaseFraction fracs[] = {{0, 1}, {1, 4}, {1, 2}, {3, 4}};
  const std::int64_t mults[] = {6, 3, 4, 3};
  for (std::size_t i = 0; i < 4; ++i) {
    REQUIRE(spec.entries[i].fraction.has_value());
    CHECK(*spec.entries[i].fraction == fracs[i]);
    CHECK(spec.entries[i].multiplicity == mults[i]);
    const double expect = kTwoPi * static_cast<double>(fracs[i].num) /
                          static_cast<double>(fracs[i].den);
    CHECK(spec.entries[i].phase == doctest::Approx(expect).epsilon(1e-15));
  }
  CHECK(spec.total_multiplicity() == 16);
}

// Independent oracle: the trace of the k-th power of a permutation unitary
// counts the permutation's fixed points. The spectrum must reproduce that
// count for every power, padding included.
TEST_CASE("spectrum reproduces permutation power traces") {
  for (std::int64_t N : {9, 15, 21, 33, 35}) {
    for (std::int64_t q = 2; q < N; ++q) {
      if (std::gcd(q, N) != 1) continue;
      const PhaseSpectrum spec = modular_spectrum(N, q);
      const std::int64_t dim = std::int64_t{1} << spec.n_qubits;
      for (int k = 1; k <= 8; ++k) {
        std::int64_t fixed = 0;
        for (std::int64_t l = 0; l < dim; ++l) {
          std::int64_t image = l;
          if (l < N) {
            for (int step = 0; step < k; ++step) image = image * q % N;
          }
          fixed += image == l;
        }
        const std::complex<double> tr =
            exact_normalized_trace(spec, static_cast<double>(k)) *
            static_cast<double>(dim);
        CHECK(tr.real() == doctest::Approx(static_cast<double>(fixed))
                               .epsilon(1e-9));
        CHECK(std::abs(tr.imag()) < 1e-8);
      }
    }
  }
}

TEST_CASE("random_spectrum is deterministic in the seed and well formed") {
  const PhaseSpectrum a = random_spectrum(4, 7);
  const PhaseSpectrum b = random_spectrum(4, 7);
  const PhaseSpectrum c = random_spectrum(4, 8);
  CHECK(a.total_multiplicity() == 16);
  REQUIRE(a.entries.size() == b.entries.size());
  bool same = true;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    same = same && a.entries[i].phase == b.entries[i].phase;
    CHECK(a.entries[i].phase >= 0.0);
    CHECK(a.entries[i].phase < kTwoPi);
  }
  CHECK(same);
  bool differs = a.entries.size() != c.entries.size();
  for (std::size_t i = 0; !differs && i < a.entries.size(); ++i) {
    differs = a.entries[i].phase != c.entries[i].phase;
  }
  CHECK(differs);
  CHECK_THROWS_AS(random_spectrum(13, 0), std::invalid_argument);
}

TEST_CASE("exact_normalized_trace on hand-checkable spectra") {
  const PhaseSpectrum identity = make_spectrum(3, {{0.0, 8, {}}});
  CHECK(exact_normalized_trace(identity).real() == doctest::Approx(1.0));
  CHECK(exact_normalized_trace(identity).imag() == doctest::Approx(0.0));

  const double pi = kTwoPi / 2.0;
  const PhaseSpectrum balanced = make_spectrum(1, {{0.0, 1, {}}, {pi, 1, {}}});
  CHECK(std::abs(exact_normalized_trace(balanced)) < 1e-15);
  // At t = 2 both phases wind back to 1.
  CHECK(exact_normalized_trace(balanced, 2.0).real() ==
        doctest::Approx(1.0).epsilon(1e-12));
}
