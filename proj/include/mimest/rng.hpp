#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace mimest {

// Seeded xoshiro256++ stream with explicit splitting. Identical seeds give
// identical streams on every platform; split(k) derives an independent child
// stream as a pure function of (seed, k), so it never consumes state.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t next_u64();
  // uniform on the open interval (0, 1)
  double uniform();
  // standard normal via Box-Muller; second value of each pair is cached
  double normal();
  // integer in [0, bound)
  uint64_t below(uint64_t bound);

  Rng split(uint64_t stream) const;
  uint64_t seed() const { return seed_; }

 private:
  uint64_t seed_;
  std::array<uint64_t, 4> state_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

// SplitMix64 step; used for seeding and stream derivation.
uint64_t splitmix64(uint64_t& state);

// Uniform random permutation of {0, ..., n-1} (Fisher-Yates).
std::vector<int> random_permutation(int n, Rng& rng);

// FNV-1a over a byte view, for stable name-based stream keys.
uint64_t fnv1a64(const void* data, std::size_t len);
uint64_t fnv1a64(const char* cstr);

}  // namespace mimest
