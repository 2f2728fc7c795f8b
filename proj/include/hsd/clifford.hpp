// The three Clifford homomorphisms attached to V_m and their algebra.
//
// For X in the Lie algebra (identified with R^3 by e_i <-> s_i):
//   rho_m^0(X) : V_m -> V_m      (the representation itself)
//   rho_m^+(X) : V_m -> V_{m+2}  (raising part)
//   rho_m^-(X) : V_m -> V_{m-2}  (lowering part; zero space for m < 2)
// given on the half-basis by
//   rho_m^0(e1/2) z^k = i(k - m/2) z^k
//   rho_m^0(e2/2 + i e3/2) z^k = -k z^{k-1},  rho_m^0(e2/2 - i e3/2) z^k = (m-k) z^{k+1}
//   rho_m^+(e1/2) z^k = i z^{k+1},            rho_m^+(e2/2 + i e3/2) z^k = -z^k,
//   rho_m^+(e2/2 - i e3/2) z^k = -z^{k+2}
//   rho_m^-(e1/2) z^k = i k(m-k) z^{k-1},     rho_m^-(e2/2 + i e3/2) z^k = k(k-1) z^{k-2},
//   rho_m^-(e2/2 - i e3/2) z^k = (m-k)(m-k-1) z^k
// extended complex-linearly in X.
#pragma once

#include <optional>

#include "hsd/poly.hpp"
#include "hsd/report.hpp"
#include "hsd/su2.hpp"

namespace hsd {

enum class CliffordKind { zero, plus, minus };

int clifford_target_spin(CliffordKind kind, int m);

struct CliffordMap {
  CliffordKind kind;
  int m;            // source spin
  int target_spin;  // m, m+2, or m-2
  ExactMatrix matrix;
};

// Matrix of rho_m^kind(e_i), i in 1..3.
ExactMatrix clifford_generator(CliffordKind kind, int m, int i);
CliffordMap clifford_map(CliffordKind kind, int m, const LieVector& x);

// Checks, for every m <= m_max and every ordered basis pair (e_i, e_j):
// Gram-adjointness ((rho^0)* = -rho^0, (rho^±)* = -rho^∓ one spin over),
// commutator equivariance for all three kinds, the four mixed
// Clifford/commutation relations, the Casimir identity
// -sum_i rho_m^0(e_i)^2 = m(m+2) I, and the classical anticommutator at m=1.
// One report entry per (identity, m); failures carry the offending pair.
VerificationReport verify_algebra(int m_max);

// Checks rho_m^kind(g X g^{-1}) = rho_{target}(g) rho_m^kind(X) rho_m(g^{-1})
// for X = e_1, e_2, e_3 and all three kinds.
VerificationReport verify_group_equivariance(int m, const GroupElement& g);

// Rebuilds each rho_m^kind from the Clebsch-Gordan projection of V_m (x) V_2
// (coordinates of X in V_2: e2 + i e3 <-> z^0, i e1 <-> z^1, e2 - i e3 <-> z^2)
// and verifies (a) exact proportionality with a single scalar s per kind and
// (b) |s|^2 = constant^2 * norm_ratio with constant^2 = m(m+2)/4,
// (m+1)(m+2)/2, m(m+1)/2 for kinds 0, +, -; norm_ratio is the CG embedding's
// Gram scale, which keeps the comparison rational.
VerificationReport cg_oracle_compare(int m);

// det rho_m^0(xi) for a specific covector.
ExactScalar symbol_det(int m, const LieVector& xi);
// det rho_m^0(xi) symbolically; variables x1,x2,x3 stand for xi components.
Poly4 symbol_det_poly(int m);
// (x1^2+x2^2+x3^2)^{(m+1)/2} * prod_{k=0}^m i(2k-m) for odd m; zero for even m.
Poly4 symbol_det_closed_form(int m);

// Kernel dimensions of the operators with symbol rho^0 / rho^+ on the flat
// 3-torus: the zero Fourier mode contributes dim V_m to each kernel and no
// other mode contributes, certified by rank rho_m^+(e_1) = m+1 and (odd m)
// det rho_m^0(e_1) != 0 together with rotation equivariance. d0 is empty for
// even m, where the symbol is singular and the kernel is not finite.
struct TorusKernelDims {
  std::optional<long> d0;
  long dplus = 0;
  VerificationReport certificate;
};
TorusKernelDims torus_kernel_dims(int m);

}  // namespace hsd
