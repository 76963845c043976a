#include "qumode/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "qumode/rng.hpp"

namespace qumode {

namespace {

void fill_chunk(const GaussianMixture& mix, const std::vector<double>& cumulative,
                std::uint64_t seed, std::size_t chunk_index, double* out,
                std::size_t n) {
  SeededRng rng(derive_stream_seed(seed, chunk_index));
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = rng.categorical(cumulative);
    out[i] = rng.normal(mix.components[k].mean, mix.sigma);
  }
}

}  // namespace

std::vector<double> sample_momentum(const GaussianMixture& mix,
                                    std::size_t count, std::uint64_t seed,
                                    int threads) {
  if (mix.components.empty()) {
    throw std::invalid_argument("sample_momentum: mixture has no components");
  }
  if (threads < 1) {
    throw std::invalid_argument("sample_momentum: threads must be >= 1");
  }
  std::vector<double> cumulative;
  cumulative.reserve(mix.components.size());
  double running = 0.0;
  for (const auto& c : mix.components) {
    running += c.weight;
    cumulative.push_back(running);
  }

  std::vector<double> out(count);
  const std::size_t n_chunks = (count + kSampleChunk - 1) / kSampleChunk;
  auto run_chunk = [&](std::size_t chunk) {
    const std::size_t begin = chunk * kSampleChunk;
    const std::size_t n = std::min(kSampleChunk, count - begin);
    fill_chunk(mix, cumulative, seed, chunk, out.data() + begin, n);
  };

  if (threads == 1 || n_chunks <= 1) {
    for (std::size_t chunk = 0; chunk < n_chunks; ++chunk) {
      run_chunk(chunk);
    }
    return out;
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t chunk = next.fetch_add(1);
      if (chunk >= n_chunks) {
        return;
      }
      run_chunk(chunk);
    }
  };
  std::vector<std::thread> pool;
  const std::size_t n_workers =
      std::min<std::size_t>(static_cast<std::size_t>(threads), n_chunks);
  pool.reserve(n_workers);
  for (std::size_t i = 0; i < n_workers; ++i) {
    pool.emplace_back(worker);
  }
  for (auto& t : pool) {
    t.join();
  }
  return out;
}

}  // namespace qumode
