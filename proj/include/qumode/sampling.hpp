#pragma once

#include <cstdint>
#include <vector>

#include "qumode/mixture.hpp"

namespace qumode {

// Samples are generated in fixed-size chunks, each from its own stream
// derived via derive_stream_seed(seed, chunk_index). Output is therefore a
// pure function of (mix, count, seed): splitting chunks across threads
// cannot change it.
inline constexpr std::size_t kSampleChunk = 4096;

// `count` draws of p_E: categorical component pick by weight, then one
// Gaussian draw. `threads` only distributes chunks; any value >= 1 yields
// byte-identical output for the same seed.
std::vector<double> sample_momentum(const GaussianMixture& mix,
                                    std::size_t count, std::uint64_t seed,
                                    int threads = 1);

}  // namespace qumode
