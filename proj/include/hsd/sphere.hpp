// Higher spin operators on the unit 3-sphere as exact matrix blocks.
//
// S^3 is identified with the rational points of SU(2) via
//   h(x) = [[x4 + i x1, x2 + i x3], [-x2 + i x3, x4 - i x1]].
// The degree-n coefficient space W_n is spanned by the matrix entries
// f_{ab}(x) of rho_n(h(x)), homogeneous polynomials of degree n, indexed by
// t = a(n+1) + b. Sections of spin weight m are modeled on W_n (x) V_m with
// basis f_{ab} (x) z^v ordered by t(m+1) + v.
//
// The right-invariant vector fields
//   Z1 = -x1 d4 + x4 d1 - x3 d2 + x2 d3
//   Z2 = -x2 d4 + x3 d1 + x4 d2 - x1 d3
//   Z3 = -x3 d4 - x2 d1 + x1 d2 + x4 d3
// preserve each W_n. SphereContext computes their matrices M_i on the f-basis
// symbolically (differentiate, then solve on monomial coefficients) and
// verifies M_i = rho_n(s_i)^T (x) I_{n+1} exactly. Consequently every
// operator block factors, after moving the b index last, as
//   block  ~  factor (x) I_{n+1},
// and all spectral work happens on the (n+1)(m+1)-dimensional factor with
// multiplicity n+1. operator_block checks the factorization entrywise on the
// assembled block and throws if it ever fails.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hsd/clifford.hpp"
#include "hsd/matrix.hpp"
#include "hsd/poly.hpp"
#include "hsd/report.hpp"
#include "hsd/su2.hpp"

namespace hsd {

// Coefficient polynomials of Z_i, i in {1,2,3}, as a derivation array.
std::array<Poly4, 4> invariant_field(int i);

// Matrix entries f_{ab} of rho_n(h(x)), ordered by t = a(n+1) + b.
std::vector<Poly4> coeff_basis(int n);

// Normalized moment of x^e over S^3: product of (e_j - 1)!! divided by
// 4 * 6 * ... * (|e| + 2) when every e_j is even, zero otherwise.
Rational sphere_moment(const Exponents& e);

// L^2 gram of the f-basis from Schur orthogonality: diagonal with entry
// b!(n-b)! / ((n+1) a!(n-a)!) at t = a(n+1) + b.
ExactMatrix coeff_gram(int n);

// Same gram computed independently from monomial moments.
ExactMatrix coeff_gram_by_moments(int n);

// kron(coeff_gram(n), gram_matrix(m)) on the section basis.
ExactMatrix block_gram(int n, int m);

// Per-degree cache: basis polynomials and verified vector field matrices.
class SphereContext {
 public:
  explicit SphereContext(int n);

  int n() const { return n_; }
  const std::vector<Poly4>& basis() const { return basis_; }
  // M_i with Z_i f_t = sum_s M_i[s,t] f_s, i in {1,2,3}.
  const ExactMatrix& field_matrix(int i) const;

 private:
  int n_ = 0;
  std::vector<Poly4> basis_;
  std::vector<ExactMatrix> m_;
};

// Lazily constructed SphereContext per degree.
class ContextPool {
 public:
  SphereContext& get(int n);

 private:
  std::map<int, std::unique_ptr<SphereContext>> pool_;
};

enum class SphereOperator {
  D0,           // m(m+2)/2 + sum_i rho_m^0(e_i) Z_i, spin m -> m
  Dplus,        // sum_i rho_m^+(e_i) Z_i, spin m -> m+2
  Dminus,       // sum_i rho_m^-(e_i) Z_i, spin m -> m-2
  ZSquaredSum,  // sum_i Z_i^2 (x) id
  DplusDminus,  // D+_{m-2} D-_m
  DminusDplus,  // D-_{m+2} D+_m
  Lap,          // D0 D0 + D+_{m-2} D-_m
  LapTilde,     // D0 D0 + D-_{m+2} D+_m
};

std::string operator_name(SphereOperator op);
std::optional<SphereOperator> operator_from_name(const std::string& name);
int operator_target_spin(SphereOperator op, int m);

struct OperatorBlock {
  SphereOperator op = SphereOperator::D0;
  int m = 0;         // source spin
  int target_m = 0;  // codomain spin
  int n = 0;         // coefficient degree
  ExactMatrix matrix;  // full block on W_n (x) V_m
  ExactMatrix factor;  // reduced block; matrix ~ factor (x) I_{n+1}
  long multiplicity = 1;  // n+1
};

class BlockCache;

// Assembles the block of `op` on sections of spin m over W_n. First-order
// kinds and ZSquaredSum are built by applying the operator to every basis
// element and re-expressing exactly; composites are products of verified
// first-order blocks. Throws std::logic_error if the re-expression leaves a
// residual or the factorization check fails.
OperatorBlock operator_block(SphereContext& ctx, SphereOperator op, int m,
                             BlockCache* cache = nullptr);

// Closed-form eigenvalue of `op` on the summand E_{K,n} of W_n (x) V_m,
// K in {|n-m|, |n-m|+2, ..., n+m}. Supported: D0, DplusDminus, DminusDplus,
// Lap, LapTilde.
Rational closed_form_eigenvalue(SphereOperator op, int m, int K, int n);

struct SpectrumRow {
  Rational eigenvalue;
  long multiplicity = 0;               // on the full block
  std::vector<std::string> blocks;     // labels E_{K,n}
};

struct SpectrumReport {
  SphereOperator op = SphereOperator::D0;
  int m = 0;
  int n = 0;
  std::vector<SpectrumRow> rows;  // ascending eigenvalue
  bool pass = false;
  std::string witness;
};

// Exact spectrum of a square operator block, machine-verified: for every
// closed-form eigenvalue the factor nullity of (B - lambda I) must equal the
// predicted summand dimension, the multiplicities must exhaust the block, and
// the product of (B - lambda I) over distinct eigenvalues must vanish.
SpectrumReport spectrum_block(ContextPool& pool, SphereOperator op, int m,
                              int n, BlockCache* cache = nullptr);

// Summand E_{K,n} in the kernel of an operator, predicted by closed forms.
struct KernelPiece {
  int K = 0;
  int n = 0;
  long dim = 0;  // (K+1)(n+1)
};

// Predicted kernel summands and the degree cutoff that captures all of them.
// Throws std::invalid_argument when the kernel is not finite-dimensional
// (D0 at even m, Lap at m = 0) or the operator is unsupported.
std::vector<KernelPiece> predicted_kernel(SphereOperator op, int m);
int required_degree(SphereOperator op, int m);

struct KernelResult {
  long dimension = 0;
  int required_n_max = 0;
  VerificationReport certificate;
};

// Total kernel dimension over degrees n <= n_max, one exact nullity per
// degree, checked against the predicted summands; requires n_max >=
// required_degree and throws std::invalid_argument naming the required degree
// otherwise. Supported: Dplus, D0 (odd m), Lap (m >= 1), LapTilde.
KernelResult kernel_dimension(ContextPool& pool, SphereOperator op, int m,
                              int n_max, BlockCache* cache = nullptr);

// Structural identities tying the four operators together over W_n:
//   D0_{m+2} D+_m = D+_m D0_m,   D0_{m-2} D-_m = D-_m D0_m,
//   Lap_m      = -m^2     sum Z_i^2 + m^2     D0_m - m^2 (m+2)(m-2)/4,
//   LapTilde_m = -(m+2)^2 sum Z_i^2 + (m+2)^2 D0_m - m (m+2)^2 (m+4)/4,
//   (m+2)^2 Lap_m - m^2 LapTilde_m = m(m+1)(m+2) m(m+2),
// plus sum Z_i^2 = -n(n+2) on W_n; the m = 0 case of the first line is the
// complex d d = 0.
VerificationReport verify_s3_identities(ContextPool& pool, int m, int n,
                                        BlockCache* cache = nullptr);

// Formal self-/skew-adjointness against block_gram: D0 self-adjoint and
// (D+_m)^dagger = D-_{m+2}.
VerificationReport verify_adjoint_blocks(ContextPool& pool, int m, int n,
                                         BlockCache* cache = nullptr);

// Schur-orthogonality gram versus monomial moments.
VerificationReport verify_gram(int n);

// First-eigenvalue bounds for Lap and LapTilde at spin m over degrees
// n <= n_max, with the equality cases certified against kernel membership.
VerificationReport check_eigenvalue_bounds(ContextPool& pool, int m, int n_max,
                                           BlockCache* cache = nullptr);

}  // namespace hsd
