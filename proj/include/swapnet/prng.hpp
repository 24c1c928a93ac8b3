#pragma once

#include <cstdint>
#include <random>

namespace swapnet {

// Deterministic random stream. The underlying generator is std::mt19937_64,
// whose output sequence is pinned by the C++ standard, and all derived draws
// (bounded integers, unit doubles) are computed here rather than through
// std::uniform_*_distribution, which is not bit-stable across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform integer in [0, bound). Rejection sampling, bias-free.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return v % bound;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace swapnet
