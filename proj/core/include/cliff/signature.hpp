#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "cliff/errors.hpp"

namespace cliff {

// Basis blades are encoded as bitmasks: bit j-1 set iff generator e_j divides
// the blade. Index 0 is the scalar blade e_0.
using BladeMask = std::uint16_t;

inline int blade_grade(BladeMask m) { return std::popcount(m); }

// Signature (p,q) of a non-degenerate quadratic form on R^{p,q}.
//
// Sign convention: the algebra is Cl(V) = T(V)/(v (x) v + Q(v)), so generators
// square to e_j^2 = -Q(e_j): -1 for j <= p and +1 for j > p. The literature
// splits on this; everything in this library follows the convention above.
struct Signature {
  int p = 0;
  int q = 0;

  static constexpr int kMaxDim = 12;

  Signature() = default;
  Signature(int p_, int q_) : p(p_), q(q_) {
    if (p < 0 || q < 0 || n() < 1 || n() > kMaxDim)
      throw Error("invalid signature (" + std::to_string(p) + "," + std::to_string(q) + ")");
  }

  int n() const { return p + q; }
  std::size_t blade_count() const { return std::size_t{1} << n(); }

  // e_j^2 as an integer, for 1-based generator index j.
  int generator_square(int j) const { return j <= p ? -1 : +1; }
  // Q(e_j), for 1-based generator index j.
  int metric(int j) const { return j <= p ? +1 : -1; }

  bool valid_mask(BladeMask m) const { return m < blade_count(); }

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.p == b.p && a.q == b.q;
  }
  friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }

  std::string to_string() const { return std::to_string(p) + "," + std::to_string(q); }
};

struct BladeProduct {
  int sign;  // +1 or -1
  BladeMask mask;
};

// Product of two basis blades e_A * e_B = sign * e_(A xor B).
// The reordering parity counts pairs (i in A, j in B) with i > j; each common
// index contributes the generator square e_j^2 = -Q(e_j).
inline BladeProduct blade_product(BladeMask a, BladeMask b, const Signature& sig) {
  int swaps = 0;
  for (BladeMask t = a >> 1; t != 0; t >>= 1) swaps += std::popcount<BladeMask>(t & b);
  int sign = (swaps & 1) ? -1 : +1;
  BladeMask common = a & b;
  while (common != 0) {
    int j = std::countr_zero(common) + 1;
    sign *= sig.generator_square(j);
    common &= static_cast<BladeMask>(common - 1);
  }
  return {sign, static_cast<BladeMask>(a ^ b)};
}

// Blade-wise signs of the three involutions: grade (-1)^|A|, reversal
// (-1)^(|A|(|A|-1)/2), Clifford conjugation (-1)^(|A|(|A|+1)/2).
enum class Involution { grade, reversal, conjugation };

inline int involution_sign(Involution kind, BladeMask m) {
  int k = blade_grade(m);
  switch (kind) {
    case Involution::grade:
      return (k & 1) ? -1 : +1;
    case Involution::reversal:
      return ((k * (k - 1) / 2) & 1) ? -1 : +1;
    case Involution::conjugation:
      return ((k * (k + 1) / 2) & 1) ? -1 : +1;
  }
  return +1;
}

// "e13" style blade name; indices above 9 are joined with '_' to stay
// unambiguous ("e9_10"). The scalar blade renders as "e0".
inline std::string blade_name(BladeMask m) {
  if (m == 0) return "e0";
  std::string s = "e";
  bool need_sep = false;
  for (int j = 1; j <= Signature::kMaxDim; ++j) {
    if (m & (BladeMask{1} << (j - 1))) {
      if (need_sep) s += '_';
      s += std::to_string(j);
      need_sep = j >= 9;  // next index would be two digits
    }
  }
  return s;
}

}  // namespace cliff
