#include "cliff/element.hpp"

#include <algorithm>
#include <utility>

#include "cliff/errors.hpp"
#include "cliff/linalg.hpp"

namespace cliff {

Element Element::blade(const Signature& sig, BladeMask mask, Rat coeff) {
  if (!sig.valid_mask(mask)) throw Error("blade mask out of range for signature");
  Element e(sig);
  e.add_term(mask, std::move(coeff));
  return e;
}

Element Element::generator(const Signature& sig, int j) {
  if (j < 1 || j > sig.n()) throw Error("generator index out of range");
  return blade(sig, static_cast<BladeMask>(BladeMask{1} << (j - 1)));
}

Element Element::vector(const Signature& sig, const std::vector<Rat>& coords) {
  if (static_cast<int>(coords.size()) != sig.n())
    throw Error("coordinate count does not match signature dimension");
  Element e(sig);
  for (int j = 1; j <= sig.n(); ++j)
    e.add_term(static_cast<BladeMask>(BladeMask{1} << (j - 1)), coords[j - 1]);
  return e;
}

void Element::add_term(BladeMask mask, Rat coeff) {
  if (coeff.is_zero()) return;
  auto it = c_.find(mask);
  if (it == c_.end()) {
    c_.emplace(mask, std::move(coeff));
  } else {
    it->second += coeff;
    if (it->second.is_zero()) c_.erase(it);
  }
}

bool Element::is_vector() const {
  for (const auto& [mask, coeff] : c_)
    if (blade_grade(mask) != 1) return false;
  return true;
}

Rat Element::coeff(BladeMask mask) const {
  auto it = c_.find(mask);
  return it == c_.end() ? Rat(0) : it->second;
}

Element Element::grade_part(int k) const {
  Element r(sig_);
  for (const auto& [mask, coeff] : c_)
    if (blade_grade(mask) == k) r.c_.emplace(mask, coeff);
  return r;
}

void Element::check_same_sig(const Element& o) const {
  if (sig_ != o.sig_)
    throw SignatureMismatch("operands live in Cl(" + sig_.to_string() + ") and Cl(" +
                            o.sig_.to_string() + ")");
}

Element Element::operator+(const Element& o) const {
  check_same_sig(o);
  Element r = *this;
  for (const auto& [mask, coeff] : o.c_) r.add_term(mask, coeff);
  return r;
}

Element Element::operator-(const Element& o) const {
  check_same_sig(o);
  Element r = *this;
  for (const auto& [mask, coeff] : o.c_) r.add_term(mask, -coeff);
  return r;
}

Element Element::operator-() const {
  Element r(sig_);
  for (const auto& [mask, coeff] : c_) r.c_.emplace(mask, -coeff);
  return r;
}

Element Element::scaled(const Rat& s) const {
  Element r(sig_);
  if (s.is_zero()) return r;
  for (const auto& [mask, coeff] : c_) r.c_.emplace(mask, coeff * s);
  return r;
}

Element Element::operator*(const Element& o) const {
  check_same_sig(o);
  Element r(sig_);
  for (const auto& [ma, ca] : c_) {
    for (const auto& [mb, cb] : o.c_) {
      BladeProduct bp = blade_product(ma, mb, sig_);
      Rat term = ca * cb;
      if (bp.sign < 0) term = -term;
      r.add_term(bp.mask, std::move(term));
    }
  }
  return r;
}

Element Element::involution(Involution kind) const {
  Element r(sig_);
  for (const auto& [mask, coeff] : c_) {
    if (involution_sign(kind, mask) < 0)
      r.c_.emplace(mask, -coeff);
    else
      r.c_.emplace(mask, coeff);
  }
  return r;
}

Element Element::invert() const {
  if (is_zero()) throw NotInvertible("zero has no inverse");
  Element cj = conjugation();
  Element norm = *this * cj;
  if (norm.is_scalar() && !norm.is_zero()) return cj.scaled(norm.scalar_part().inverse());

  // General path: solve left-multiplication L_a x = e_0 over the blade basis.
  const int dim = static_cast<int>(sig_.blade_count());
  RatMat lmul(dim, dim);
  for (int col = 0; col < dim; ++col) {
    Element image = *this * Element::blade(sig_, static_cast<BladeMask>(col));
    for (const auto& [mask, coeff] : image.coeffs()) lmul.at(mask, col) = coeff;
  }
  std::vector<Rat> rhs(dim, Rat(0));
  rhs[0] = Rat(1);
  std::vector<Rat> x;
  try {
    x = lmul.solve(rhs);
  } catch (const SingularMatrix&) {
    throw NotInvertible();
  }
  Element r(sig_);
  for (int i = 0; i < dim; ++i) r.add_term(static_cast<BladeMask>(i), x[i]);
  return r;
}

std::vector<Rat> Element::vector_coords() const {
  if (!is_vector()) throw Error("element is not a vector");
  std::vector<Rat> coords(sig_.n(), Rat(0));
  for (const auto& [mask, coeff] : c_) {
    int j = std::countr_zero(mask);
    coords[j] = coeff;
  }
  return coords;
}

std::string Element::render() const {
  if (c_.empty()) return "0";
  std::vector<std::pair<BladeMask, Rat>> terms(c_.begin(), c_.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int ga = blade_grade(a.first), gb = blade_grade(b.first);
    return ga != gb ? ga < gb : a.first < b.first;
  });
  std::string s;
  bool first = true;
  for (const auto& [mask, coeff] : terms) {
    Rat mag = coeff.abs();
    std::string body;
    if (mask == 0)
      body = mag.to_string();
    else if (mag == Rat(1))
      body = blade_name(mask);
    else
      body = mag.to_string() + "*" + blade_name(mask);
    if (first) {
      s += (coeff.sign() < 0 ? "-" : "") + body;
      first = false;
    } else {
      s += (coeff.sign() < 0 ? " - " : " + ") + body;
    }
  }
  return s;
}

std::size_t Element::hash() const {
  std::size_t h = 0x243f6a8885a308d3ULL ^ (static_cast<std::size_t>(sig_.p) << 8) ^
                  static_cast<std::size_t>(sig_.q);
  for (const auto& [mask, coeff] : c_) {
    h ^= (static_cast<std::size_t>(mask) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    h ^= (coeff.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
  return h;
}

Rat quadratic_form(const Element& v) {
  if (!v.is_vector()) throw Error("quadratic form requires a vector");
  Rat q(0);
  const auto coords = v.vector_coords();
  for (int j = 1; j <= v.sig().n(); ++j) {
    Rat sq = coords[j - 1] * coords[j - 1];
    if (v.sig().metric(j) > 0)
      q += sq;
    else
      q -= sq;
  }
  return q;
}

Rat bilinear_form(const Element& u, const Element& v) {
  if (!u.is_vector() || !v.is_vector()) throw Error("bilinear form requires vectors");
  if (u.sig() != v.sig()) throw SignatureMismatch();
  Rat b(0);
  const auto uc = u.vector_coords();
  const auto vc = v.vector_coords();
  for (int j = 1; j <= u.sig().n(); ++j) {
    Rat term = uc[j - 1] * vc[j - 1];
    if (u.sig().metric(j) > 0)
      b += term;
    else
      b -= term;
  }
  return b;
}

}  // namespace cliff
