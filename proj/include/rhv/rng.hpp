#pragma once

#include <cstdint>
#include <vector>

#include "rhv/rational.hpp"

namespace rhv {

// Deterministic generator for reproducible sampling-based checks.  Rationals
// are drawn with small numerators and denominators (|num| <= 20, den <= 7) so
// exact arithmetic downstream stays cheap.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : state_(seed ? seed : 1) {}

  static constexpr std::uint64_t kDefaultSeed = 0x5eed5eedULL;

  std::uint64_t next() {
    std::uint64_t x = state_;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    state_ = x;
    return x;
  }

  long uniform(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rat rational() {
    long num = uniform(-20, 20);
    long den = uniform(1, 7);
    Rat q(num, den);
    q.canonicalize();
    return q;
  }

  Rat nonzero_rational() {
    for (;;) {
      Rat q = rational();
      if (!is_zero(q)) return q;
    }
  }

  std::vector<Rat> rational_vector(int n) {
    std::vector<Rat> v(n);
    for (auto& q : v) q = rational();
    return v;
  }

  // Resamples until some coordinate is nonzero.
  std::vector<Rat> nonzero_vector(int n) {
    for (;;) {
      auto v = rational_vector(n);
      for (const auto& q : v)
        if (!is_zero(q)) return v;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace rhv
