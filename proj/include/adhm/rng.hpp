#pragma once

#include <cstdint>
#include <random>

namespace adhm {

// Seeded generator for all samplers. The bounded draw is hand-reduced from
// raw 64-bit output (rejection sampling) instead of going through
// std::uniform_int_distribution, whose mapping is implementation-defined;
// this way identical seeds give identical samples on any toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform draw from [lo, hi], inclusive on both ends.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace adhm
