#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace qumode {

// Phase exp(i*phi*x*tau/x0) the hybrid interaction attaches to an eigenstate
// with eigenvalue phi when the control mode sits at position x. Requires
// x0 > 0.
std::complex<double> hybrid_phase(double phi, double x, double tau, double x0);

// One diagonal summand of a target Hamiltonian, listed by basis state.
struct DiagonalTerm {
  std::vector<double> phases;
};

struct CommutingProductReport {
  double max_deviation = 0.0;
  bool ok = false;
};

// Checks that applying the per-term interaction phases in sequence equals a
// single interaction with the summed term, at every supplied control
// position. All terms must share one length. Exact commutation makes the
// deviation pure floating-point noise; ok means < 1e-12.
CommutingProductReport verify_commuting_product(
    const std::vector<DiagonalTerm>& terms, const std::vector<double>& x_samples,
    double tau = 1.0, double x0 = 1.0);

// Permutation adding `shift` modulo `modulus` on states below the modulus;
// padding states above it are fixed.
struct AdditionGate {
  std::int64_t shift = 0;
  std::int64_t modulus = 1;

  std::int64_t apply(std::int64_t l) const {
    return l < modulus ? (l + shift) % modulus : l;
  }
};

// Decomposition of "add q-1 mod N" into one gate per set binary digit of
// q-1, with the checks that make it usable as a circuit: the gates commute
// pairwise as permutations of the full padded state space, and their product
// sends 1 to q.
struct AdditionDecomposition {
  std::int64_t N = 0;
  std::int64_t q = 0;
  int n_qubits = 0;
  std::vector<AdditionGate> gates;
  std::vector<std::vector<bool>> commute_matrix;
  bool all_commute = false;
  std::int64_t image_of_one = 0;
  bool product_ok = false;  // image_of_one == q
};

// Requires 1 < q < N. gcd(q, N) is irrelevant here; only the additive
// structure is exercised.
AdditionDecomposition addition_decomposition(std::int64_t N, std::int64_t q);

// True when the decomposition commutes pairwise and reaches q from 1.
bool verify_addition_decomposition(std::int64_t N, std::int64_t q);

}  // namespace qumode
