#include "ruleplay/rng.hpp"

namespace ruleplay {

std::uint64_t Rng::bounded(std::uint64_t n) {
  // Rejection sampling over the top of the range removes modulo bias.
  std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    std::uint64_t r = next_u64();
    if (r >= threshold) return r % n;
  }
}

double Rng::uniform() {
  // 53 random bits, matching double precision.
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) {
  Rng r(parent ^ (0xa0761d6478bd642full + index * 0xe7037ed1a0b428dbull));
  return r.next_u64();
}

}  // namespace ruleplay
