#include "qumode/factoring.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

#include "qumode/mixture.hpp"
#include "qumode/rng.hpp"
#include "qumode/sampling.hpp"

namespace qumode {
namespace {

constexpr double kPi = kTwoPi / 2.0;
constexpr double kEulerGamma = 0.57721566490153286061;

// Safety cap on q redraws; in practice a usable q appears within a handful
// of draws for any valid N, so hitting this means the budget logic is the
// real problem.
constexpr int kMaxQDraws = 256;

int ceil_log2(std::int64_t n) {
  return static_cast<int>(std::bit_width(static_cast<std::uint64_t>(n - 1)));
}

double pow2(int e) { return std::ldexp(1.0, e); }

std::int64_t draw_q(std::uint64_t seed, std::int64_t N) {
  SeededRng rng(seed);
  // 53-bit uniform over (1, N); floor keeps it in [2, N-1].
  auto q = static_cast<std::int64_t>(
      2.0 + rng.uniform01_halfopen() * static_cast<double>(N - 2));
  return std::min(q, N - 1);
}

void screen_composite(std::int64_t N) {
  if (N < 4) {
    throw ClassicalRejection("factor: N=" + std::to_string(N) +
                             " is not composite");
  }
  if (N % 2 == 0) {
    throw ClassicalRejection(
        "factor: N is even; 2 is a factor, no sampling needed");
  }
  if (is_prime(N)) {
    throw ClassicalRejection("factor: N=" + std::to_string(N) + " is prime");
  }
  if (auto p = prime_power_root(N)) {
    throw ClassicalRejection("factor: N=" + std::to_string(N) +
                             " is a power of the prime " + std::to_string(*p));
  }
}

FactorResult make_result(std::int64_t N, std::int64_t f, std::int64_t q,
                         std::int64_t total_runs) {
  const std::int64_t g = N / f;
  FactorResult out;
  out.N = N;
  out.factors = {std::min(f, g), std::max(f, g)};
  out.q_used = q;
  out.total_runs = total_runs;
  return out;
}

}  // namespace

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m) {
  if (m < 1 || exp < 0) {
    throw std::invalid_argument("mod_pow: need m >= 1 and exp >= 0");
  }
  auto b = static_cast<unsigned __int128>(((base % m) + m) % m);
  unsigned __int128 acc = 1 % m;
  const auto mm = static_cast<unsigned __int128>(m);
  while (exp > 0) {
    if (exp & 1) acc = acc * b % mm;
    b = b * b % mm;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(acc);
}

std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
  std::int64_t result = n;
  std::int64_t m = n;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t p = 3; p * p <= n; p += 2) {
    if (n % p == 0) return false;
  }
  return true;
}

std::optional<std::int64_t> prime_power_root(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("prime_power_root: n must be >= 2");
  std::int64_t p = n;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  std::int64_t m = n;
  while (m % p == 0) m /= p;
  if (m == 1) return p;
  return std::nullopt;
}

std::optional<PhaseFraction> continued_fraction_recover(double p_prime,
                                                        std::int64_t N) {
  if (N < 2) {
    throw std::invalid_argument("continued_fraction_recover: N must be >= 2");
  }
  if (!(p_prime >= 0.0 && p_prime < 1.0)) {
    throw std::invalid_argument(
        "continued_fraction_recover: p_prime must lie in [0, 1)");
  }

  // Walk convergents p_k/q_k of p_prime until the denominator would exceed
  // N; the best approximation with denominator <= N is then the last
  // convergent or the maximal semiconvergent, whichever is closer.
  std::int64_t p_prev = 1, q_prev = 0;  // convergent k-1
  std::int64_t p_cur = 0, q_cur = 1;    // convergent k (starts at 0/1)
  double rem = p_prime;
  while (rem > 1e-14) {
    const double y = 1.0 / rem;
    auto a = static_cast<std::int64_t>(y);
    rem = y - static_cast<double>(a);
    if (a > (N - q_prev) / q_cur) {
      const std::int64_t t = (N - q_prev) / q_cur;
      if (t >= 1) {
        const std::int64_t sp = t * p_cur + p_prev;
        const std::int64_t sq = t * q_cur + q_prev;
        const double d_semi =
            std::abs(p_prime - static_cast<double>(sp) / static_cast<double>(sq));
        const double d_conv =
            std::abs(p_prime - static_cast<double>(p_cur) / static_cast<double>(q_cur));
        if (d_semi < d_conv) {
          p_cur = sp;
          q_cur = sq;
        }
      }
      break;
    }
    const std::int64_t p_next = a * p_cur + p_prev;
    const std::int64_t q_next = a * q_cur + q_prev;
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
  }

  const double window = 0.5 / (static_cast<double>(N) * static_cast<double>(N));
  const double dist =
      std::abs(p_prime - static_cast<double>(p_cur) / static_cast<double>(q_cur));
  // Relative slack absorbs the rounding of a draw placed exactly on the
  // window edge; the nearest competing fraction is > 1/N^2 away, so this
  // cannot flip the answer.
  if (dist <= window * (1.0 + 1e-9)) {
    return reduce_fraction(p_cur, q_cur);  // maps an accepted 1/1 to 0/1
  }
  return std::nullopt;
}

OrderResult order_from_samples(const ModularProblem& problem,
                               const ExperimentConfig& cfg, bool combine_lcm) {
  validate(cfg);
  if (cfg.s0 * cfg.tau < 1.0) {
    throw std::invalid_argument("order_from_samples: requires s0 * tau >= 1");
  }
  const PhaseSpectrum spec = modular_spectrum(problem.N, problem.q);
  const GaussianMixture mix =
      momentum_distribution(spec, squeezed_state(cfg.s0, cfg.x0), cfg.tau);
  const std::vector<double> draws = sample_momentum(
      mix, static_cast<std::size_t>(cfg.t_bound), cfg.seed, cfg.threads);

  OrderResult out;
  out.problem = problem;
  std::int64_t running_lcm = 1;
  for (std::int64_t i = 0; i < cfg.t_bound; ++i) {
    double p_prime = draws[static_cast<std::size_t>(i)] / kTwoPi;
    p_prime -= std::floor(p_prime);
    if (p_prime >= 1.0) p_prime = 0.0;  // right-edge floating-point spill

    OrderRun run;
    run.p_prime = p_prime;
    run.fraction = continued_fraction_recover(p_prime, problem.N);
    std::int64_t exponent = 0;
    if (run.fraction && run.fraction->den > 1) {
      exponent = run.fraction->den;
      run.verified = mod_pow(problem.q, exponent, problem.N) == 1;
      if (!run.verified && combine_lcm) {
        running_lcm = std::lcm(running_lcm, exponent);
        if (running_lcm > problem.N) running_lcm = exponent;
        if (running_lcm > exponent) {
          exponent = running_lcm;
          run.verified = mod_pow(problem.q, exponent, problem.N) == 1;
        }
      }
    }
    out.runs.push_back(run);
    out.runs_used = i + 1;
    if (run.verified) {
      out.recovered_r = exponent;
      break;
    }
  }
  return out;
}

FactorResult factor(std::int64_t N, const ExperimentConfig& cfg,
                    std::uint64_t seed) {
  validate(cfg);
  screen_composite(N);
  if (N >= (std::int64_t{1} << 24)) {
    throw std::invalid_argument("factor: N too large for the simulator");
  }

  std::int64_t budget = cfg.t_bound;
  std::int64_t total_runs = 0;
  for (int attempt = 0; attempt < kMaxQDraws; ++attempt) {
    const std::int64_t q =
        draw_q(derive_stream_seed(seed, static_cast<std::uint64_t>(attempt)), N);
    const std::int64_t shared = std::gcd(q, N);
    if (shared > 1) return make_result(N, shared, q, total_runs);

    if (budget <= 0) {
      throw BudgetExhausted("factor: measurement budget exhausted after " +
                            std::to_string(total_runs) + " runs");
    }
    ExperimentConfig sub = cfg;
    sub.t_bound = budget;
    sub.seed = derive_stream_seed(
        seed, (std::uint64_t{1} << 32) + static_cast<std::uint64_t>(attempt));
    const OrderResult ord = order_from_samples(make_modular_problem(N, q), sub);
    total_runs += ord.runs_used;
    budget -= ord.runs_used;
    if (!ord.recovered_r) {
      throw BudgetExhausted("factor: measurement budget exhausted after " +
                            std::to_string(total_runs) + " runs");
    }

    const std::int64_t r = *ord.recovered_r;
    if (r % 2 == 0) {
      const std::int64_t h = mod_pow(q, r / 2, N);
      if (h != N - 1) {
        for (const std::int64_t g : {std::gcd(h - 1, N), std::gcd(h + 1, N)}) {
          if (g > 1 && g < N) return make_result(N, g, q, total_runs);
        }
      }
    }
    // Odd order or trivial square root: this q cannot split N, redraw.
  }
  throw BudgetExhausted("factor: no usable q after " +
                        std::to_string(kMaxQDraws) + " draws");
}

double run_bound(std::int64_t N, double s0, double tau) {
  if (N < 5) throw std::invalid_argument("run_bound: N must be >= 5");
  if (!(s0 * tau > 0.0)) {
    throw std::invalid_argument("run_bound: requires s0 * tau > 0");
  }
  const int n = ceil_log2(N);
  const double denom = std::erf(kPi * s0 * tau / pow2(2 * n));
  return std::exp(kEulerGamma) * std::log(std::log(static_cast<double>(N))) /
         denom;
}

TotientCheck totient_bound_check(std::int64_t r) {
  TotientCheck out;
  out.phi = euler_phi(r);
  const double lnln =
      r >= 3 ? std::log(std::log(static_cast<double>(r))) : -1.0;
  if (lnln > 0.0) {
    out.lower = static_cast<double>(r) / (std::exp(kEulerGamma) * lnln);
    out.ok = static_cast<double>(out.phi) > out.lower;
  } else {
    out.vacuous = true;
    out.ok = true;
  }
  return out;
}

double analytic_run_success(const ModularProblem& problem, double s0,
                            double tau) {
  if (!(s0 * tau > 0.0)) {
    throw std::invalid_argument("analytic_run_success: requires s0 * tau > 0");
  }
  const PhaseSpectrum spec = modular_spectrum(problem.N, problem.q);
  const double sigma = 1.0 / (kTwoPi * std::sqrt(2.0) * s0 * tau);  // turns
  const double half = 0.5 / (static_cast<double>(problem.N) *
                             static_cast<double>(problem.N));

  std::vector<double> targets;  // fractions whose denominator verifies
  for (std::int64_t b = problem.order; b <= problem.N; b += problem.order) {
    for (std::int64_t a = 1; a < b; ++a) {
      if (std::gcd(a, b) == 1) {
        targets.push_back(static_cast<double>(a) / static_cast<double>(b));
      }
    }
  }

  // Windows of distinct targets are disjoint up to shared endpoints, so
  // their masses add. Peaks are wrapped onto [0, 1) by summing images.
  const int K = 2 + static_cast<int>(std::ceil(40.0 * sigma));
  const double inv = 1.0 / (std::sqrt(2.0) * sigma);
  double total = 0.0;
  for (const double v : targets) {
    for (const PhaseEntry& e : spec.entries) {
      const double mu = e.phase / kTwoPi;
      const double w = static_cast<double>(e.multiplicity) *
                       std::ldexp(1.0, -spec.n_qubits);
      for (int k = -K; k <= K; ++k) {
        const double lo = (v - half + k - mu) * inv;
        const double hi = (v + half + k - mu) * inv;
        total += w * 0.5 * (std::erf(hi) - std::erf(lo));
      }
    }
  }
  return std::min(total, 1.0);
}

double diagonal_run_success(const ModularProblem& problem, double s0,
                            double tau) {
  if (!(s0 * tau > 0.0)) {
    throw std::invalid_argument("diagonal_run_success: requires s0 * tau > 0");
  }
  const PhaseSpectrum spec = modular_spectrum(problem.N, problem.q);
  double mass = 0.0;
  for (const PhaseEntry& e : spec.entries) {
    if (e.fraction && e.fraction->den == problem.order) {
      mass += static_cast<double>(e.multiplicity);
    }
  }
  mass *= std::ldexp(1.0, -spec.n_qubits);
  const double arg = kPi * s0 * tau /
                     (static_cast<double>(problem.N) *
                      static_cast<double>(problem.N));
  return mass * std::erf(arg);
}

}  // namespace qumode
