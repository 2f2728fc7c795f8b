#include "hsd/su2.hpp"

#include <stdexcept>

namespace hsd {

namespace {
const ExactScalar kI = ExactScalar::i();
ExactScalar rat(long n) { return ExactScalar(Rational(n)); }
ExactScalar rat(long n, long d) { return ExactScalar(Rational(n, d)); }
}  // namespace

int rep_dim(int m) { return m < 0 ? 0 : m + 1; }

LieVector LieVector::e(int i) {
  switch (i) {
    case 1: return {rat(1), rat(0), rat(0)};
    case 2: return {rat(0), rat(1), rat(0)};
    case 3: return {rat(0), rat(0), rat(1)};
  }
  throw std::invalid_argument("LieVector::e: index must be 1..3");
}

ExactMatrix su2_basis_matrix(int i) {
  switch (i) {
    case 1: return ExactMatrix::from_rows({{kI, rat(0)}, {rat(0), -kI}});
    case 2: return ExactMatrix::from_rows({{rat(0), rat(1)}, {rat(-1), rat(0)}});
    case 3: return ExactMatrix::from_rows({{rat(0), kI}, {kI, rat(0)}});
  }
  throw std::invalid_argument("su2_basis_matrix: index must be 1..3");
}

ExactMatrix lie_to_matrix(const LieVector& x) {
  return x.c1 * su2_basis_matrix(1) + x.c2 * su2_basis_matrix(2) + x.c3 * su2_basis_matrix(3);
}

LieVector matrix_to_lie(const ExactMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2)
    throw std::invalid_argument("matrix_to_lie: expected 2x2");
  if (!(m.at(0, 0) + m.at(1, 1)).is_zero())
    throw std::invalid_argument("matrix_to_lie: matrix is not traceless");
  LieVector x{-kI * m.at(0, 0), rat(1, 2) * (m.at(0, 1) - m.at(1, 0)),
              -kI * (rat(1, 2) * (m.at(0, 1) + m.at(1, 0)))};
  if (lie_to_matrix(x) != m)
    throw std::invalid_argument("matrix_to_lie: matrix is not in the span of s1,s2,s3");
  return x;
}

LieVector bracket(const LieVector& x, const LieVector& y) {
  ExactMatrix mx = lie_to_matrix(x), my = lie_to_matrix(y);
  return matrix_to_lie(mx * my - my * mx);
}

ExactScalar pairing(const LieVector& x, const LieVector& y) {
  return x.c1 * y.c1 + x.c2 * y.c2 + x.c3 * y.c3;
}

GroupElement::GroupElement(ExactMatrix m) : m_(std::move(m)) {
  if (m_.rows() != 2 || m_.cols() != 2)
    throw std::invalid_argument("GroupElement: expected 2x2");
  const ExactScalar& a = m_.at(0, 0);
  const ExactScalar& b = m_.at(0, 1);
  if (m_.at(1, 0) != -b.conj() || m_.at(1, 1) != a.conj())
    throw std::invalid_argument("GroupElement: not of the form [[a,b],[-conj b, conj a]]");
  if (a.abs2() + b.abs2() != Rational(1))
    throw std::invalid_argument("GroupElement: |a|^2 + |b|^2 != 1");
}

GroupElement GroupElement::from_ab(const ExactScalar& a, const ExactScalar& b) {
  return GroupElement(ExactMatrix::from_rows({{a, b}, {-b.conj(), a.conj()}}));
}

GroupElement GroupElement::inverse() const {
  // adjugate; det = 1 for validated elements
  return GroupElement(ExactMatrix::from_rows(
      {{m_.at(1, 1), -m_.at(0, 1)}, {-m_.at(1, 0), m_.at(0, 0)}}));
}

LieVector GroupElement::conjugate(const LieVector& x) const {
  return matrix_to_lie(m_ * lie_to_matrix(x) * inverse().matrix());
}

std::vector<GroupElement> rational_unitary_test_set() {
  std::vector<GroupElement> gs;
  gs.push_back(GroupElement::from_ab(rat(1), rat(0)));
  gs.push_back(GroupElement::from_ab(kI, rat(0)));
  gs.push_back(GroupElement::from_ab(rat(0), rat(1)));
  gs.push_back(GroupElement::from_ab(rat(3, 5), rat(4, 5)));
  gs.push_back(GroupElement::from_ab(rat(3, 5), ExactScalar(Rational(0), Rational(4, 5))));
  gs.push_back(GroupElement::from_ab(ExactScalar(Rational(1, 3), Rational(2, 3)), rat(2, 3)));
  return gs;
}

namespace {

// rho_m(s_i) on the z-power basis.
ExactMatrix rep_generator(int m, int i) {
  int d = rep_dim(m);
  return ExactMatrix::from_fn(d, d, [&](std::size_t r, std::size_t c) -> ExactScalar {
    long k = long(c);
    switch (i) {
      case 1:  // z^k -> i(2k-m) z^k
        return r == c ? kI * rat(2 * k - m) : rat(0);
      case 2:  // z^k -> (m-k) z^{k+1} - k z^{k-1}
        if (long(r) == k + 1) return rat(m - k);
        if (long(r) == k - 1) return rat(-k);
        return rat(0);
      case 3:  // z^k -> i k z^{k-1} + i(m-k) z^{k+1}
        if (long(r) == k - 1) return kI * rat(k);
        if (long(r) == k + 1) return kI * rat(m - k);
        return rat(0);
    }
    throw std::invalid_argument("rep_generator: index must be 1..3");
  });
}

}  // namespace

ExactMatrix rep_infinitesimal(int m, const LieVector& x) {
  return x.c1 * rep_generator(m, 1) + x.c2 * rep_generator(m, 2) + x.c3 * rep_generator(m, 3);
}

ExactMatrix rep_group(int m, const GroupElement& g) {
  int d = rep_dim(m);
  ExactMatrix out(d, d);
  if (d == 0) return out;
  const ExactScalar a = g.a(), b = g.b(), c = g.c(), dd = g.d();
  // column k: coefficients of (b z + d)^{m-k} (a z + c)^k
  std::vector<std::vector<ExactScalar>> cols(d);
  for (int k = 0; k < d; ++k) {
    std::vector<ExactScalar> p(m - k + 1);
    for (int r = 0; r <= m - k; ++r) {
      ExactScalar t = ExactScalar(Rational::binomial(unsigned(m - k), unsigned(r)));
      for (int q = 0; q < r; ++q) t *= b;
      for (int q = 0; q < m - k - r; ++q) t *= dd;
      p[r] = t;
    }
    std::vector<ExactScalar> q(k + 1);
    for (int s = 0; s <= k; ++s) {
      ExactScalar t = ExactScalar(Rational::binomial(unsigned(k), unsigned(s)));
      for (int u = 0; u < s; ++u) t *= a;
      for (int u = 0; u < k - s; ++u) t *= c;
      q[s] = t;
    }
    std::vector<ExactScalar> col(d);
    for (int r = 0; r <= m - k; ++r)
      for (int s = 0; s <= k; ++s) col[r + s] += p[r] * q[s];
    cols[k] = std::move(col);
  }
  return ExactMatrix::from_fn(d, d, [&](std::size_t r, std::size_t cix) {
    return cols[cix][r];
  });
}

ExactMatrix gram_matrix(int m) {
  int d = rep_dim(m);
  std::vector<ExactScalar> diag(d);
  for (int k = 0; k < d; ++k)
    diag[k] = ExactScalar(Rational::factorial(unsigned(k)) *
                          Rational::factorial(unsigned(m - k)));
  return ExactMatrix::diagonal(diag);
}

ExactMatrix casimir(int m) {
  int d = rep_dim(m);
  ExactMatrix acc(d, d);
  for (int i = 1; i <= 3; ++i) {
    ExactMatrix g = rep_generator(m, i);
    acc = acc + g * g;
  }
  return -acc;
}

namespace {

// Matrix of rho_m((s2 - i s3)/2): z^k -> (m-k) z^{k+1} (raising), and of
// rho_m((s2 + i s3)/2): z^k -> -k z^{k-1} (lowering).
ExactMatrix raising(int m) {
  int d = rep_dim(m);
  return ExactMatrix::from_fn(d, d, [&](std::size_t r, std::size_t c) {
    return long(r) == long(c) + 1 ? rat(m - long(c)) : rat(0);
  });
}

ExactMatrix lowering(int m) {
  int d = rep_dim(m);
  return ExactMatrix::from_fn(d, d, [&](std::size_t r, std::size_t c) {
    return long(r) == long(c) - 1 ? rat(-long(c)) : rat(0);
  });
}

}  // namespace

std::vector<CGComponent> cg_decompose(int m, int n) {
  if (m < 0 || n < 0) return {};
  const int dm = m + 1, dn = n + 1, dim = dm * dn;
  const ExactMatrix r_tensor =
      kron(raising(m), ExactMatrix::identity(dn)) + kron(ExactMatrix::identity(dm), raising(n));
  const ExactMatrix l_tensor =
      kron(lowering(m), ExactMatrix::identity(dn)) + kron(ExactMatrix::identity(dm), lowering(n));
  const ExactMatrix g_tensor = kron(gram_matrix(m), gram_matrix(n));

  auto weight_indices = [&](int w) {
    std::vector<std::size_t> ix;
    for (int k = 0; k <= m; ++k) {
      int l = w - k;
      if (l >= 0 && l <= n) ix.push_back(std::size_t(k) * dn + l);
    }
    return ix;
  };

  std::vector<CGComponent> comps;
  for (int j = m + n; j >= std::abs(m - n); j -= 2) {
    const int w = (m + n + j) / 2;
    const auto src = weight_indices(w);
    const auto dst = weight_indices(w + 1);
    ExactMatrix restricted = ExactMatrix::from_fn(
        dst.size(), src.size(),
        [&](std::size_t r, std::size_t c) { return r_tensor.at(dst[r], src[c]); });
    auto ns = nullspace(restricted);
    if (ns.size() != 1)
      throw std::logic_error("cg_decompose: highest-weight space is not one-dimensional");

    // embed into the full tensor space and normalize the first nonzero
    // coordinate (ascending tensor index) to 1
    std::vector<ExactScalar> hw(dim);
    for (std::size_t c = 0; c < src.size(); ++c) hw[src[c]] = ns[0].at(c, 0);
    ExactScalar lead(0);
    for (const auto& v : hw)
      if (!v.is_zero()) {
        lead = v;
        break;
      }
    std::vector<ExactMatrix> cols(j + 1, ExactMatrix(dim, 1));
    cols[j] = lead.inv() * ExactMatrix::column(hw);
    for (int k = j; k >= 1; --k)
      cols[k - 1] = ExactScalar(Rational(-1, k)) * (l_tensor * cols[k]);
    ExactMatrix embedding = ExactMatrix::from_fn(
        dim, j + 1, [&](std::size_t r, std::size_t c) { return cols[c].at(r, 0); });

    // E* G_T E must be a positive rational multiple of G_j (Schur); the
    // multiple is the norm ratio used by the Clifford-constant comparison.
    const ExactMatrix g_j = gram_matrix(j);
    ExactMatrix s = embedding.conj_transpose() * (g_tensor * embedding);
    ExactScalar ratio = s.at(0, 0) / g_j.at(0, 0);
    if (!ratio.is_real() || ratio.re().sign() <= 0 || s != ratio * g_j)
      throw std::logic_error("cg_decompose: embedding norms are not a scalar multiple of the target Gram");

    auto g_j_inv = inverse(g_j);
    if (!g_j_inv) throw std::invalid_argument("cg_decompose: singular Gram (malformed basis)");
    ExactMatrix projection =
        ratio.inv() * (*g_j_inv * (embedding.conj_transpose() * g_tensor));

    comps.push_back(CGComponent{j, std::move(embedding), std::move(projection), ratio.re()});
  }
  return comps;
}

}  // namespace hsd
