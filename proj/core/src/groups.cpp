#include "cliff/groups.hpp"

#include <utility>

#include "cliff/errors.hpp"
#include "cliff/rng.hpp"

namespace cliff {

RatMat gram_matrix(const Signature& sig) {
  RatMat g(sig.n(), sig.n());
  for (int j = 1; j <= sig.n(); ++j) g.at(j - 1, j - 1) = Rat(sig.metric(j));
  return g;
}

bool lipschitz_member(const Element& a) {
  Element norm = a * a.conjugation();
  if (!norm.is_scalar() || norm.is_zero()) return false;
  Element rev = a.reversal();
  for (int j = 1; j <= a.sig().n(); ++j) {
    Element image = a * Element::generator(a.sig(), j) * rev;
    if (!image.is_vector()) return false;
  }
  return true;
}

PinSpin pin_spin_member(const Element& a) {
  if (!lipschitz_member(a)) return PinSpin::none;
  Element norm = a.conjugation() * a;
  if (!norm.is_scalar()) return PinSpin::none;
  Rat s = norm.scalar_part();
  if (s != Rat(1) && s != Rat(-1)) return PinSpin::none;
  return a.grade_involution() == a ? PinSpin::spin : PinSpin::pin_only;
}

Element twisted_adjoint(const Element& a, const Element& x) {
  if (!lipschitz_member(a)) throw NotLipschitz();
  if (!x.is_vector()) throw Error("twisted adjoint acts on vectors");
  return a * x * a.grade_involution().invert();
}

RatMat twisted_adjoint_matrix(const Element& a) {
  if (!lipschitz_member(a)) throw NotLipschitz();
  const Signature& sig = a.sig();
  Element ginv = a.grade_involution().invert();
  RatMat m(sig.n(), sig.n());
  for (int j = 1; j <= sig.n(); ++j) {
    Element image = a * Element::generator(sig, j) * ginv;
    auto coords = image.vector_coords();
    for (int i = 0; i < sig.n(); ++i) m.at(i, j - 1) = coords[i];
  }
  return m;
}

OrthogonalMap::OrthogonalMap(const Signature& s, RatMat m) : sig(s), mat(std::move(m)) {
  if (mat.rows() != sig.n() || mat.cols() != sig.n())
    throw NotOrthogonal("matrix dimension does not match signature");
  RatMat g = gram_matrix(sig);
  if (mat.transpose() * g * mat != g) throw NotOrthogonal();
}

RatMat reflection_matrix(const Element& v) {
  const Signature& sig = v.sig();
  Rat qv = quadratic_form(v);
  if (qv.is_zero()) throw Error("reflection along a null vector");
  auto vc = v.vector_coords();
  RatMat m = RatMat::identity(sig.n());
  for (int j = 1; j <= sig.n(); ++j) {
    Rat f = Rat(2) * Rat(sig.metric(j)) * vc[j - 1] / qv;  // 2 B(e_j, v) / Q(v)
    for (int i = 0; i < sig.n(); ++i) m.at(i, j - 1) -= f * vc[i];
  }
  return m;
}

namespace {

std::vector<Rat> apply(const RatMat& m, const std::vector<Rat>& x) {
  std::vector<Rat> y(m.rows(), Rat(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero() && !x[j].is_zero()) y[i] += m.at(i, j) * x[j];
  return y;
}

Rat q_of(const Signature& sig, const std::vector<Rat>& v) {
  Rat q(0);
  for (int j = 1; j <= sig.n(); ++j) {
    Rat sq = v[j - 1] * v[j - 1];
    if (sig.metric(j) > 0)
      q += sq;
    else
      q -= sq;
  }
  return q;
}

Rat b_of(const Signature& sig, const std::vector<Rat>& u, const std::vector<Rat>& v) {
  Rat b(0);
  for (int j = 1; j <= sig.n(); ++j) {
    Rat t = u[j - 1] * v[j - 1];
    if (sig.metric(j) > 0)
      b += t;
    else
      b -= t;
  }
  return b;
}

bool is_zero_vec(const std::vector<Rat>& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

std::vector<Rat> sub(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> r(a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

std::vector<Rat> add_vec(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> r(a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// Candidate anisotropic vectors inside the orthogonal complement of `fixed`:
// standard basis first (in index order), then a computed basis of the
// complement with pairwise sums/differences, then seeded random combinations.
std::vector<std::vector<Rat>> candidates(const Signature& sig,
                                         const std::vector<std::vector<Rat>>& fixed,
                                         std::uint64_t shuffle_seed) {
  const int n = sig.n();
  std::vector<std::vector<Rat>> out;
  auto orthogonal_to_fixed = [&](const std::vector<Rat>& v) {
    for (const auto& f : fixed)
      if (!b_of(sig, f, v).is_zero()) return false;
    return true;
  };
  for (int j = 0; j < n; ++j) {
    std::vector<Rat> e(n, Rat(0));
    e[j] = Rat(1);
    if (orthogonal_to_fixed(e)) out.push_back(std::move(e));
  }
  // Basis of the complement: kernel of the constraint rows f^T G.
  if (!fixed.empty()) {
    RatMat constraints(static_cast<int>(fixed.size()), n);
    for (int r = 0; r < static_cast<int>(fixed.size()); ++r)
      for (int j = 1; j <= n; ++j)
        constraints.at(r, j - 1) = fixed[r][j - 1] * Rat(sig.metric(j));
    auto basis = constraints.kernel_basis();
    for (const auto& b : basis) out.push_back(b);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        out.push_back(add_vec(basis[i], basis[j]));
        out.push_back(sub(basis[i], basis[j]));
      }
    Rng rng(0x5eedULL + shuffle_seed);
    for (int t = 0; t < 64; ++t) {
      std::vector<Rat> v(n, Rat(0));
      for (const auto& b : basis) {
        long c = rng.uniform(-3, 3);
        for (int k = 0; k < n; ++k) v[k] += b[k] * Rat(c);
      }
      if (!is_zero_vec(v)) out.push_back(std::move(v));
    }
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        std::vector<Rat> v(n, Rat(0));
        v[i] = Rat(1);
        v[j] = Rat(1);
        out.push_back(v);
        v[j] = Rat(-1);
        out.push_back(v);
      }
    Rng rng(0x5eedULL + shuffle_seed);
    for (int t = 0; t < 64; ++t) {
      std::vector<Rat> v(n, Rat(0));
      for (int k = 0; k < n; ++k) v[k] = Rat(rng.uniform(-3, 3));
      if (!is_zero_vec(v)) out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<Element> decompose_once(const OrthogonalMap& T, std::uint64_t shuffle_seed) {
  const Signature& sig = T.sig;
  const int n = sig.n();
  RatMat remaining = T.mat;
  RatMat id = RatMat::identity(n);
  std::vector<Element> mirrors;
  std::vector<std::vector<Rat>> fixed;

  while (remaining != id) {
    if (static_cast<int>(mirrors.size()) > 2 * n) throw Error("reflection search diverged");
    auto cands = candidates(sig, fixed, shuffle_seed);
    bool progressed = false;
    // Case A: some anisotropic v with Q(Rv - v) != 0; one reflection fixes v.
    for (const auto& v : cands) {
      if (q_of(sig, v).is_zero()) continue;
      auto u = apply(remaining, v);
      auto w = sub(u, v);
      if (is_zero_vec(w) || q_of(sig, w).is_zero()) continue;
      Element wv = Element::vector(sig, w);
      mirrors.push_back(wv);
      remaining = reflection_matrix(wv) * remaining;
      fixed.push_back(v);
      progressed = true;
      break;
    }
    if (progressed) continue;
    // Null-difference fallback: sigma_{u+v} sends u to -v, then sigma_v fixes v.
    for (const auto& v : cands) {
      if (q_of(sig, v).is_zero()) continue;
      auto u = apply(remaining, v);
      if (is_zero_vec(sub(u, v))) continue;
      auto w1 = add_vec(u, v);
      if (q_of(sig, w1).is_zero()) continue;  // cannot happen for Q(v) != 0
      Element w1v = Element::vector(sig, w1);
      Element vv = Element::vector(sig, v);
      mirrors.push_back(w1v);
      remaining = reflection_matrix(w1v) * remaining;
      mirrors.push_back(vv);
      remaining = reflection_matrix(vv) * remaining;
      fixed.push_back(v);
      progressed = true;
      break;
    }
    if (!progressed) throw Error("no usable reflection candidate");
  }

  // Adjacent proportional mirrors cancel (a*b is scalar iff a, b parallel).
  for (std::size_t i = 0; i + 1 < mirrors.size();) {
    if ((mirrors[i] * mirrors[i + 1]).is_scalar()) {
      mirrors.erase(mirrors.begin() + i, mirrors.begin() + i + 2);
      i = i > 0 ? i - 1 : 0;
    } else {
      ++i;
    }
  }
  return mirrors;
}

}  // namespace

std::vector<Element> cartan_dieudonne(const OrthogonalMap& T) {
  std::vector<Element> best = decompose_once(T, 0);
  for (std::uint64_t attempt = 1; static_cast<int>(best.size()) > T.sig.n() && attempt <= 8;
       ++attempt) {
    auto alt = decompose_once(T, attempt);
    if (alt.size() < best.size()) best = std::move(alt);
  }
  return best;
}

}  // namespace cliff
