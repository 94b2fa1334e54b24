#pragma once

#include <map>
#include <string>
#include <vector>

#include "cliff/rational.hpp"
#include "cliff/signature.hpp"

namespace cliff {

// An element of Cl(p,q): a finite blade -> rational coefficient map.
// Canonical form stores no zero coefficients; equality is coefficient-wise.
// Immutable in spirit: all operations return new values.
class Element {
 public:
  explicit Element(const Signature& sig) : sig_(sig) {}

  static Element scalar(const Signature& sig, Rat value) {
    Element e(sig);
    e.add_term(0, std::move(value));
    return e;
  }
  static Element unit(const Signature& sig) { return scalar(sig, Rat(1)); }
  static Element blade(const Signature& sig, BladeMask mask, Rat coeff = Rat(1));
  static Element generator(const Signature& sig, int j);  // e_j, 1-based
  static Element vector(const Signature& sig, const std::vector<Rat>& coords);

  const Signature& sig() const { return sig_; }
  const std::map<BladeMask, Rat>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  bool is_scalar() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }
  bool is_vector() const;  // supported on grade-1 blades only (zero counts)
  Rat coeff(BladeMask mask) const;
  Rat scalar_part() const { return coeff(0); }
  Element grade_part(int k) const;

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;
  Element operator-() const;
  Element scaled(const Rat& s) const;

  Element involution(Involution kind) const;
  Element grade_involution() const { return involution(Involution::grade); }
  Element reversal() const { return involution(Involution::reversal); }
  Element conjugation() const { return involution(Involution::conjugation); }

  // Multiplicative inverse. Fast path divides the conjugate by a*conj(a) when
  // that product is a nonzero scalar; otherwise solves the dense linear system
  // of left multiplication. Throws NotInvertible.
  Element invert() const;

  // Coordinates (x_1..x_n); requires is_vector().
  std::vector<Rat> vector_coords() const;

  // "3/2 + 2*e13 - e2", terms ordered by (grade, mask). Zero renders "0".
  std::string render() const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.sig_ == b.sig_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  std::size_t hash() const;

  void add_term(BladeMask mask, Rat coeff);  // accumulate, keeps canonical form

 private:
  void check_same_sig(const Element& o) const;

  Signature sig_;
  std::map<BladeMask, Rat> c_;
};

// Q(v) = sum_{j<=p} v_j^2 - sum_{j>p} v_j^2. Requires a vector argument.
Rat quadratic_form(const Element& v);
// B(u,v) = (Q(u+v) - Q(u) - Q(v)) / 2; satisfies uv + vu = -2 B(u,v).
Rat bilinear_form(const Element& u, const Element& v);

}  // namespace cliff
