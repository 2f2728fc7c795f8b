// SU(2) and its irreducible representations V_m in the z-power basis.
//
// V_m = polynomials of degree <= m in z, basis z^0..z^m, dim m+1 (m < 0 is
// the zero space). The group acts by rho_m(h) z^k = (b z + d)^{m-k} (a z + c)^k
// for h = [[a, b], [c, d]]; the infinitesimal action of the basis
//   s1 = [[i,0],[0,-i]], s2 = [[0,1],[-1,0]], s3 = [[0,i],[i,0]]
// is rho_m(s1) z^k = i(2k-m) z^k, and (s2 -+ i s3)/2 raise/lower the power.
// The invariant pairing makes z^k orthogonal with <z^k, z^k> = k!(m-k)!.
#pragma once

#include <vector>

#include "hsd/matrix.hpp"

namespace hsd {

int rep_dim(int m);  // max(m+1, 0)

// Element of the (complexified) Lie algebra in coordinates over the basis
// e1, e2, e3 identified with s1, s2, s3 above.
struct LieVector {
  ExactScalar c1, c2, c3;

  static LieVector e(int i);  // basis vector, i in 1..3
  LieVector operator+(const LieVector& o) const { return {c1 + o.c1, c2 + o.c2, c3 + o.c3}; }
  LieVector operator-(const LieVector& o) const { return {c1 - o.c1, c2 - o.c2, c3 - o.c3}; }
  friend LieVector operator*(const ExactScalar& s, const LieVector& x) {
    return {s * x.c1, s * x.c2, s * x.c3};
  }
  bool operator==(const LieVector& o) const { return c1 == o.c1 && c2 == o.c2 && c3 == o.c3; }
};

// [X, Y] computed through the 2x2 commutator ([e1,e2] = 2 e3 and cyclic).
LieVector bracket(const LieVector& x, const LieVector& y);
// Bilinear extension of the Euclidean pairing (e_i, e_j) = delta_ij.
ExactScalar pairing(const LieVector& x, const LieVector& y);

ExactMatrix su2_basis_matrix(int i);      // the 2x2 matrix s_i
ExactMatrix lie_to_matrix(const LieVector& x);  // sum c_i s_i
// Inverse of lie_to_matrix on traceless 2x2 matrices; throws if m is not
// traceless or does not decompose exactly.
LieVector matrix_to_lie(const ExactMatrix& m);

// SU(2) element [[a, b], [-conj(b), conj(a)]] with |a|^2 + |b|^2 = 1,
// validated on construction.
class GroupElement {
 public:
  explicit GroupElement(ExactMatrix m);
  static GroupElement from_ab(const ExactScalar& a, const ExactScalar& b);

  const ExactMatrix& matrix() const { return m_; }
  ExactScalar a() const { return m_.at(0, 0); }
  ExactScalar b() const { return m_.at(0, 1); }
  ExactScalar c() const { return m_.at(1, 0); }
  ExactScalar d() const { return m_.at(1, 1); }

  GroupElement operator*(const GroupElement& o) const { return GroupElement(m_ * o.m_); }
  GroupElement inverse() const;
  LieVector conjugate(const LieVector& x) const;  // g X g^{-1}

 private:
  ExactMatrix m_;
};

// Six rational-unitary probe elements: identity, diag(i,-i), [[0,1],[-1,0]],
// and (a,b) = (3/5,4/5), (3/5,4i/5), (1/3+2i/3,2/3).
std::vector<GroupElement> rational_unitary_test_set();

// Matrix of sum_i c_i rho_m(s_i) on V_m (so pass X = s_i/2 as coordinates
// (1/2, 0, 0) etc. for the half-basis formulas).
ExactMatrix rep_infinitesimal(int m, const LieVector& x);
ExactMatrix rep_group(int m, const GroupElement& g);
// Invariant pairing Gram diag(k!(m-k)!) in the z-power basis.
ExactMatrix gram_matrix(int m);
// -sum_i rho_m(s_i)^2; equals m(m+2) I.
ExactMatrix casimir(int m);

// One irreducible summand V_j inside V_m (x) V_n. `embedding` has the images
// of z_j^0..z_j^j as columns; `projection` is its Gram-orthogonal left
// inverse, so projection * embedding = I_{j+1} and embedding * projection is
// the Gram-self-adjoint projector onto the summand.
//
// Conventions (fixed): the highest-weight vector lives in the k+l = (m+n+j)/2
// weight space, is killed by the raising operator (s2 - i s3)/2 (x) 1 +
// 1 (x) (s2 - i s3)/2, and is scaled so its first nonzero coordinate
// (ascending tensor index k*(n+1)+l) equals 1. Lower indices come from the
// lowering operator: column k-1 = -(1/k) * L * column k.
// norm_ratio is the positive rational c with E* G_tensor E = c * G_j.
struct CGComponent {
  int j;
  ExactMatrix embedding;
  ExactMatrix projection;
  Rational norm_ratio;
};

// All components j = m+n, m+n-2, ..., |m-n| in descending order.
std::vector<CGComponent> cg_decompose(int m, int n);

}  // namespace hsd
