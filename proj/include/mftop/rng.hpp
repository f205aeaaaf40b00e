#pragma once

#include <cstdint>

#include "mftop/rat.hpp"

namespace mftop {

// Deterministic generator for sampling harnesses. splitmix64 core so that
// sequences are identical across platforms and standard library versions
// (std::uniform_int_distribution is implementation-defined).
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish in [0, n). Modulo bias is irrelevant at test scale.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

  bool flip() { return (next_u64() & 1) != 0; }

  // Random rational k/den with 0 <= k <= den.
  Rat rat_in_unit(unsigned long den) {
    Rat q(static_cast<long>(below(den + 1)), static_cast<long>(den));
    q.canonicalize();
    return q;
  }

 private:
  std::uint64_t state_;
};

}  // namespace mftop
