#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace ruleplay {

// Deterministic RNG used everywhere randomness is needed. Wraps a fixed
// 64-bit mix (splitmix64) so streams are reproducible across platforms and
// standard-library versions; std::uniform_* distributions are avoided for
// the same reason.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). n must be > 0. Rejection sampling keeps it unbiased.
  std::uint64_t bounded(std::uint64_t n);

  // Uniform double in [0, 1).
  double uniform();

  bool bernoulli(double p) { return uniform() < p; }

  // In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(bounded(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

// FNV-1a over a string, used for stable content-based partitioning.
std::uint64_t fnv1a(std::string_view s);

// Derives an independent child seed from a parent seed and an index.
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index);

}  // namespace ruleplay
