#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace cliff {

// Arbitrary-precision rational, a thin RAII wrapper over GMP's mpq_t.
// Always kept canonical (reduced, positive denominator).
class Rat {
 public:
  Rat() { mpq_init(q_); }
  Rat(long n) {  // NOLINT: implicit by design, mirrors integer literals
    mpq_init(q_);
    mpq_set_si(q_, n, 1);
  }
  Rat(int n) : Rat(static_cast<long>(n)) {}
  Rat(long num, long den);
  explicit Rat(const std::string& text);

  Rat(const Rat& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rat(Rat&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rat& operator=(const Rat& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rat& operator=(Rat&& o) noexcept {
    if (this != &o) mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rat() { mpq_clear(q_); }

  Rat& operator+=(const Rat& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const {
    Rat r;
    mpq_neg(r.q_, q_);
    return r;
  }

  friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_, b.q_) != 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

  int sign() const { return mpq_sgn(q_); }
  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
  Rat abs() const {
    Rat r;
    mpq_abs(r.q_, q_);
    return r;
  }
  Rat inverse() const;

  // Largest integer <= value, as a Rat.
  Rat floor() const;

  // this^e for integer e; negative e requires a nonzero value.
  Rat pow_int(long e) const;

  // If |this|^exponent is rational, stores it in out and returns true.
  // exponent is an arbitrary rational; this must be nonzero for negative exponents.
  bool abs_pow_exact(const Rat& exponent, Rat& out) const;

  // Numerator/denominator as long, valid only when they fit.
  long num_long() const { return mpz_get_si(mpq_numref(q_)); }
  long den_long() const { return mpz_get_si(mpq_denref(q_)); }
  bool fits_long() const {
    return mpz_fits_slong_p(mpq_numref(q_)) && mpz_fits_slong_p(mpq_denref(q_));
  }

  double to_double() const { return mpq_get_d(q_); }
  std::string to_string() const;
  std::size_t hash() const;

 private:
  mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace cliff
