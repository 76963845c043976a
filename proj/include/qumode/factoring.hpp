#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qumode/estimation.hpp"
#include "qumode/spectrum.hpp"

namespace qumode {

// Input failed a purely classical screening check (prime, even, prime
// power); sampling would not help and none is attempted.
class ClassicalRejection : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The measurement budget ran out before the pipeline finished.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// (base^exp) mod m. Requires m >= 1, exp >= 0; base may be any value.
std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m);

std::int64_t euler_phi(std::int64_t n);
bool is_prime(std::int64_t n);
// Smallest prime p with n == p^k (k >= 1), absent when n is not a prime
// power. Requires n >= 2.
std::optional<std::int64_t> prime_power_root(std::int64_t n);

// Best rational approximation m/r to p_prime with denominator r <= N,
// found by walking continued-fraction convergents and the final
// semiconvergent. Accepted only when |p_prime - m/r| <= 1/(2N^2); inside
// that window the answer is unique, because distinct fractions with
// denominators <= N are more than 1/N^2 apart. A draw within the window of
// both 0 and 1 reduces to 0/1. Requires N >= 2 and p_prime in [0, 1).
std::optional<PhaseFraction> continued_fraction_recover(double p_prime,
                                                        std::int64_t N);

struct OrderRun {
  double p_prime = 0.0;  // measured p_E folded to [0, 1) turns
  std::optional<PhaseFraction> fraction;
  bool verified = false;  // q^den = 1 mod N for the exponent this run tried
};

struct OrderResult {
  ModularProblem problem;
  // Present only when q^recovered_r = 1 mod N was checked and holds; the
  // smallest such exponent is the order, but any verified multiple counts.
  std::optional<std::int64_t> recovered_r;
  std::int64_t runs_used = 0;
  std::vector<OrderRun> runs;  // in run order, one entry per draw consumed
};

// Draws p_E from the squeezed-input modular distribution, folds to p', and
// runs continued-fraction recovery until some denominator verifies or
// cfg.t_bound draws are consumed (budget exhaustion is reported in the
// result, not thrown). combine_lcm additionally tries the running lcm of
// recovered denominators, capped at N. Requires cfg.s0 * cfg.tau >= 1.
OrderResult order_from_samples(const ModularProblem& problem,
                               const ExperimentConfig& cfg,
                               bool combine_lcm = false);

struct FactorResult {
  std::int64_t N = 0;
  std::pair<std::int64_t, std::int64_t> factors{0, 0};  // ascending, > 1
  std::int64_t q_used = 0;
  std::int64_t total_runs = 0;  // measurements consumed across all q draws
};

// Full factoring loop: draw q uniformly from (1, N); a shared factor with N
// is returned immediately (zero measurements), otherwise order finding runs
// and an even order r with q^{r/2} != -1 mod N yields gcd(q^{r/2} +- 1, N).
// Unusable q (odd order, trivial square root) triggers a redraw.
// cfg.t_bound is the total measurement budget across the whole call.
// Deterministic in (cfg, seed). Throws ClassicalRejection for even, prime,
// or prime-power N and BudgetExhausted when the budget runs out.
FactorResult factor(std::int64_t N, const ExperimentConfig& cfg,
                    std::uint64_t seed);

// Large-N heuristic for the expected number of runs,
// e^gamma * ln(ln N) / erf(pi * s0 * tau / 2^{2n}), n = ceil(log2 N).
// A diagnostic, not a guarantee: it overshoots badly at small N.
// Requires N >= 5 and s0 * tau > 0.
double run_bound(std::int64_t N, double s0, double tau);

struct TotientCheck {
  std::int64_t phi = 0;
  double lower = 0.0;  // r / (e^gamma * ln(ln r)); 0 when vacuous
  bool ok = false;     // phi > lower; true when vacuous
  bool vacuous = false;  // ln(ln r) <= 0, comparison meaningless
};

// Exact totient against the asymptotic lower bound r/(e^gamma ln(ln r)).
// The bound fails for small r; callers report ok, they do not assert it.
TotientCheck totient_bound_check(std::int64_t r);

// Exact probability that a single run verifies: the mixture mass, wrapped
// to [0, 1) turns, inside the recovery window of any fraction a/b in
// lowest terms with b <= N and order | b.
double analytic_run_success(const ModularProblem& problem, double s0,
                            double tau);

// Ignoring cross-peak leakage: (coprime mass) * erf(pi * s0 * tau / N^2),
// where the coprime mass is the weight of eigenphases whose denominator is
// exactly the order. Approaches analytic_run_success as s0*tau grows.
double diagonal_run_success(const ModularProblem& problem, double s0,
                            double tau);

}  // namespace qumode
