#pragma once

#include <cstdint>
#include <random>

namespace randmeas {

// SplitMix64 finalizer. Used to turn (seed, streamIndex) pairs into engine
// seeds with good avalanche behaviour.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// A deterministic random stream addressed by (seed, streamIndex).
//
// Substreams are derived arithmetically from the address, never from engine
// state, so a computation split into chunks draws identical numbers no matter
// how many worker threads execute the chunks.
class RngStream {
 public:
  RngStream() : RngStream(0) {}
  explicit RngStream(std::uint64_t seed, std::uint64_t streamIndex = 0)
      : seed_(seed),
        stream_(streamIndex),
        engine_(splitmix64(splitmix64(seed) ^ streamIndex)) {}

  // Child stream i; children of distinct (stream, i) pairs do not collide in
  // practice (SplitMix64 is a bijection on 64-bit words).
  RngStream substream(std::uint64_t i) const {
    return RngStream(seed_, splitmix64(stream_ ^ (0x9E3779B97F4A7C15ULL * (i + 1))));
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_; }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0,1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on (0,1); rejects the single zero value.
  double uniform_pos() {
    double u;
    do {
      u = uniform01();
    } while (u == 0.0);
    return u;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

}  // namespace randmeas
