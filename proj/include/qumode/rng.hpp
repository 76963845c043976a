#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace qumode {

// SplitMix64 finalizer. Used to whiten raw seeds and to derive independent
// per-chunk streams from one master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Seed of logical stream `k` under `master`. The derivation is fixed:
// whatever splits work into streams must use this so results never depend
// on how the work was divided.
inline std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t k) {
  return splitmix64(master ^ splitmix64(k + 1));
}

// mt19937_64 wrapped with hand-rolled uniform and Box-Muller normal draws.
// std::uniform_real_distribution / std::normal_distribution are deliberately
// not used: their value sequences are implementation-defined, and sampled
// output here must be reproducible for a given seed.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  // Uniform on (0, 1]; never returns 0, so log() below is safe.
  double uniform01() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }

  // Uniform on [0, 1).
  double uniform01_halfopen() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // One standard normal per call, cosine branch of Box-Muller. Two uniforms
  // are consumed per draw; the sine branch is discarded to keep the stream
  // position independent of call history.
  double normal() {
    const double u1 = uniform01();
    const double u2 = uniform01_halfopen();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.283185307179586476925286766559 * u2);
  }

  double normal(double mean, double sigma) { return mean + sigma * normal(); }

  // Index drawn proportionally to the increments of `cumulative`
  // (nondecreasing, last element > 0). Inverse-CDF on one uniform.
  std::size_t categorical(const std::vector<double>& cumulative) {
    if (cumulative.empty() || cumulative.back() <= 0.0) {
      throw std::invalid_argument("categorical: empty or zero-mass cumulative");
    }
    const double u = uniform01() * cumulative.back();
    std::size_t lo = 0, hi = cumulative.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (cumulative[mid] < u) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return lo;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qumode
