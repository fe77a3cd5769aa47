#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

#include "randmeas/rng.hpp"

namespace randmeas {

// Fixed chunk size for all Monte Carlo loops.  Chunk c always uses
// base.substream(c), and partial results are merged in chunk order, so the
// result is bit-identical for every thread count.
inline constexpr std::int64_t kChunkSamples = 4096;

// Runs `perSample(state, rng)` `total` times, split into fixed-size chunks.
// State needs a default-constructible-from-`init` copy and a
// `merge(const State&)` member.
template <class State, class PerSample>
State chunked_reduce(std::int64_t total, const RngStream& base, int threads, State init,
                     PerSample&& perSample) {
  const std::int64_t chunks = (total + kChunkSamples - 1) / kChunkSamples;
  if (chunks == 0) return init;

  std::vector<State> partial(static_cast<std::size_t>(chunks), init);
  auto runChunk = [&](std::int64_t c) {
    RngStream rng = base.substream(static_cast<std::uint64_t>(c));
    State& st = partial[static_cast<std::size_t>(c)];
    const std::int64_t begin = c * kChunkSamples;
    const std::int64_t end = std::min(total, begin + kChunkSamples);
    for (std::int64_t i = begin; i < end; ++i) perSample(st, rng);
  };

  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;

  if (threads == 1 || chunks == 1) {
    for (std::int64_t c = 0; c < chunks; ++c) runChunk(c);
  } else {
    std::atomic<std::int64_t> next{0};
    auto worker = [&]() {
      for (;;) {
        const std::int64_t c = next.fetch_add(1);
        if (c >= chunks) return;
        runChunk(c);
      }
    };
    std::vector<std::thread> pool;
    const int nw = static_cast<int>(std::min<std::int64_t>(threads, chunks));
    pool.reserve(static_cast<std::size_t>(nw));
    for (int w = 0; w < nw; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  State out = std::move(partial[0]);
  for (std::int64_t c = 1; c < chunks; ++c) out.merge(partial[static_cast<std::size_t>(c)]);
  return out;
}

}  // namespace randmeas
