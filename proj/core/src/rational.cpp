#include "cliff/rational.hpp"

#include <cstdlib>
#include <ostream>
#include <vector>

#include "cliff/errors.hpp"

namespace cliff {

Rat::Rat(long num, long den) {
  mpq_init(q_);
  if (den == 0) throw Error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  mpq_set_si(q_, num, static_cast<unsigned long>(den));
  mpq_canonicalize(q_);
}

Rat::Rat(const std::string& text) {
  mpq_init(q_);
  if (mpq_set_str(q_, text.c_str(), 10) != 0)
    throw Error("cannot parse rational: '" + text + "'");
  if (mpz_sgn(mpq_denref(q_)) == 0) throw Error("rational with zero denominator");
  mpq_canonicalize(q_);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error("rational division by zero");
  mpq_div(q_, q_, o.q_);
  return *this;
}

Rat Rat::inverse() const {
  if (is_zero()) throw Error("rational division by zero");
  Rat r;
  mpq_inv(r.q_, q_);
  return r;
}

Rat Rat::floor() const {
  Rat r;
  mpz_t f;
  mpz_init(f);
  mpz_fdiv_q(f, mpq_numref(q_), mpq_denref(q_));
  mpq_set_z(r.q_, f);
  mpz_clear(f);
  return r;
}

Rat Rat::pow_int(long e) const {
  if (e == 0) return Rat(1);
  Rat base = *this;
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  Rat acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool Rat::abs_pow_exact(const Rat& exponent, Rat& out) const {
  if (is_zero()) {
    if (exponent.sign() <= 0) return false;
    out = Rat(0);
    return true;
  }
  Rat a = abs();
  if (exponent.is_integer()) {
    if (!mpz_fits_slong_p(mpq_numref(exponent.q_))) return false;
    out = a.pow_int(mpz_get_si(mpq_numref(exponent.q_)));
    return true;
  }
  if (!mpz_fits_slong_p(mpq_numref(exponent.q_)) ||
      !mpz_fits_slong_p(mpq_denref(exponent.q_)))
    return false;
  long u = mpz_get_si(mpq_numref(exponent.q_));
  unsigned long v = mpz_get_ui(mpq_denref(exponent.q_));
  // |a|^(u/v) is rational iff both numerator and denominator are exact v-th powers.
  mpz_t rn, rd;
  mpz_init(rn);
  mpz_init(rd);
  int ok_n = mpz_root(rn, mpq_numref(a.q_), v);
  int ok_d = mpz_root(rd, mpq_denref(a.q_), v);
  bool ok = ok_n != 0 && ok_d != 0;
  if (ok) {
    Rat root;
    mpq_set_num(root.q_, rn);
    mpq_set_den(root.q_, rd);
    mpq_canonicalize(root.q_);
    out = root.pow_int(u);
  }
  mpz_clear(rn);
  mpz_clear(rd);
  return ok;
}

std::string Rat::to_string() const {
  char* s = mpq_get_str(nullptr, 10, q_);
  std::string r(s);
  std::free(s);
  return r;
}

std::size_t Rat::hash() const {
  auto mix = [](std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  };
  std::size_t h = 0xa0761d6478bd642fULL;
  auto hash_mpz = [&](const mpz_t z) {
    h = mix(h, static_cast<std::size_t>(mpz_sgn(z)) + 7);
    for (mp_size_t i = 0, n = static_cast<mp_size_t>(mpz_size(z)); i < n; ++i)
      h = mix(h, static_cast<std::size_t>(mpz_getlimbn(z, i)));
  };
  hash_mpz(mpq_numref(q_));
  hash_mpz(mpq_denref(q_));
  return h;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

}  // namespace cliff
