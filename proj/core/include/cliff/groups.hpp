#pragma once

#include <vector>

#include "cliff/element.hpp"
#include "cliff/linalg.hpp"

namespace cliff {

// diag(+1 x p, -1 x q), the Gram matrix of B in the standard basis.
RatMat gram_matrix(const Signature& sig);

// Membership in the Lipschitz group Gamma(V): a*conj(a) a nonzero scalar and
// a e_j rev(a) grade-1 for every generator (linearity covers all of V).
bool lipschitz_member(const Element& a);

enum class PinSpin { none, pin_only, spin };
PinSpin pin_spin_member(const Element& a);

// sigma_a(x) = a x grade(a)^{-1}. Requires a in Gamma(V) and x a vector;
// throws NotLipschitz otherwise.
Element twisted_adjoint(const Element& a, const Element& x);

// Matrix of sigma_a in the standard basis (columns are images of e_j).
RatMat twisted_adjoint_matrix(const Element& a);

// An exact-rational T in O(p,q): T^T G T = G. Construction validates.
struct OrthogonalMap {
  Signature sig;
  RatMat mat;

  OrthogonalMap(const Signature& s, RatMat m);
};

// Matrix of the reflection along a non-null vector v.
RatMat reflection_matrix(const Element& v);

// Cartan-Dieudonne factorization: non-null vectors v_1..v_k, k <= n, whose
// composed reflections sigma_{v_1} o ... o sigma_{v_k} equal T. Greedy over
// anisotropic candidates; the null-difference case falls back to the
// two-reflection (u+v, v) pair.
std::vector<Element> cartan_dieudonne(const OrthogonalMap& T);

}  // namespace cliff
