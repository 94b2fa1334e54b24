#pragma once

#include <cstdint>
#include <vector>

#include "cliff/rational.hpp"

namespace cliff {

// Deterministic splitmix64 generator. Used everywhere randomness is needed so
// that fixed seeds reproduce byte-identical results across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi] inclusive.
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool chance(int num, int den) { return uniform(0, den - 1) < num; }

  // Rational in [-bound, bound] with denominator <= max_den.
  Rat rational(long bound = 3, long max_den = 16) {
    long den = uniform(1, max_den);
    long num = uniform(-bound * den, bound * den);
    return Rat(num, den);
  }

  Rat nonzero_rational(long bound = 3, long max_den = 16) {
    for (;;) {
      Rat r = rational(bound, max_den);
      if (!r.is_zero()) return r;
    }
  }

  std::vector<Rat> rational_point(int n, long bound = 3, long max_den = 16) {
    std::vector<Rat> pt;
    pt.reserve(n);
    for (int i = 0; i < n; ++i) pt.push_back(rational(bound, max_den));
    return pt;
  }

 private:
  std::uint64_t state_;
};

}  // namespace cliff
