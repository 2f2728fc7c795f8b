#include "hsd/sphere.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "hsd/cache.hpp"

namespace hsd {

namespace {
const ExactScalar kI = ExactScalar::i();
std::string itos(long v) { return std::to_string(v); }

std::string block_label(int K, int n) {
  return "E_{" + itos(K) + "," + itos(n) + "}";
}

Poly4 conj_poly(const Poly4& p) {
  Poly4 out;
  for (const auto& [e, c] : p.terms()) out = out + Poly4::monomial(e, c.conj());
  return out;
}

ExactScalar integrate(const Poly4& p) {
  ExactScalar out;
  for (const auto& [e, c] : p.terms()) out += sphere_moment(e) * c;
  return out;
}

// All degree-n exponent tuples in one fixed order.
std::vector<Exponents> monomials_of_degree(int n) {
  std::vector<Exponents> out;
  for (int e1 = n; e1 >= 0; --e1)
    for (int e2 = n - e1; e2 >= 0; --e2)
      for (int e3 = n - e1 - e2; e3 >= 0; --e3)
        out.push_back({unsigned(e1), unsigned(e2), unsigned(e3),
                       unsigned(n - e1 - e2 - e3)});
  return out;
}
}  // namespace

std::array<Poly4, 4> invariant_field(int i) {
  switch (i) {
    case 1:
      return derivation_from_matrix({{{0, 0, 0, 1},
                                      {0, 0, -1, 0},
                                      {0, 1, 0, 0},
                                      {-1, 0, 0, 0}}});
    case 2:
      return derivation_from_matrix({{{0, 0, 1, 0},
                                      {0, 0, 0, 1},
                                      {-1, 0, 0, 0},
                                      {0, -1, 0, 0}}});
    case 3:
      return derivation_from_matrix({{{0, -1, 0, 0},
                                      {1, 0, 0, 0},
                                      {0, 0, 0, 1},
                                      {0, 0, -1, 0}}});
    default:
      throw std::invalid_argument("invariant_field: index must be 1..3");
  }
}

std::vector<Poly4> coeff_basis(int n) {
  if (n < 0) throw std::invalid_argument("coeff_basis: n must be >= 0");
  const Poly4 x1 = Poly4::variable(0), x2 = Poly4::variable(1);
  const Poly4 x3 = Poly4::variable(2), x4 = Poly4::variable(3);
  const Poly4 a = x4 + kI * x1, b = x2 + kI * x3;
  const Poly4 c = -x2 + kI * x3, d = x4 - kI * x1;
  std::vector<Poly4> out(std::size_t(n + 1) * (n + 1));
  for (int k = 0; k <= n; ++k) {
    // coefficients in z of (b z + d)^{n-k} (a z + c)^k
    std::vector<Poly4> col{Poly4::constant(ExactScalar(1))};
    auto mul_linear = [&col](const Poly4& lin, const Poly4& con) {
      std::vector<Poly4> next(col.size() + 1);
      for (std::size_t j = 0; j < col.size(); ++j) {
        next[j] = next[j] + con * col[j];
        next[j + 1] = next[j + 1] + lin * col[j];
      }
      col = std::move(next);
    };
    for (int t = 0; t < n - k; ++t) mul_linear(b, d);
    for (int t = 0; t < k; ++t) mul_linear(a, c);
    for (int r = 0; r <= n; ++r)
      out[std::size_t(r) * (n + 1) + std::size_t(k)] = col[std::size_t(r)];
  }
  return out;
}

Rational sphere_moment(const Exponents& e) {
  unsigned deg = 0;
  for (unsigned j = 0; j < 4; ++j) {
    if (e[j] % 2 != 0) return Rational(0);
    deg += e[j];
  }
  Rational num(1);
  for (unsigned j = 0; j < 4; ++j)
    for (unsigned t = e[j]; t > 1; t -= 2) num *= Rational(long(t) - 1);
  Rational den(1);
  for (unsigned t = 4; t <= deg + 2; t += 2) den *= Rational(long(t));
  return num / den;
}

ExactMatrix coeff_gram(int n) {
  if (n < 0) throw std::invalid_argument("coeff_gram: n must be >= 0");
  std::vector<ExactScalar> diag(std::size_t(n + 1) * (n + 1));
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b) {
      const Rational g =
          Rational::factorial(unsigned(b)) * Rational::factorial(unsigned(n - b)) /
          (Rational(n + 1) * Rational::factorial(unsigned(a)) *
           Rational::factorial(unsigned(n - a)));
      diag[std::size_t(a) * (n + 1) + std::size_t(b)] = ExactScalar(g);
    }
  return ExactMatrix::diagonal(diag);
}

ExactMatrix coeff_gram_by_moments(int n) {
  const auto basis = coeff_basis(n);
  const std::size_t dim = basis.size();
  std::vector<Poly4> conj(dim);
  for (std::size_t t = 0; t < dim; ++t) conj[t] = conj_poly(basis[t]);
  return ExactMatrix::from_fn(dim, dim, [&](std::size_t s, std::size_t t) {
    return integrate(basis[s] * conj[t]);
  });
}

ExactMatrix block_gram(int n, int m) {
  return kron(coeff_gram(n), gram_matrix(m));
}

SphereContext::SphereContext(int n) : n_(n), basis_(coeff_basis(n)) {
  const std::size_t dim = basis_.size();
  const auto mons = monomials_of_degree(n);
  const ExactMatrix mon = ExactMatrix::from_fn(
      mons.size(), dim,
      [&](std::size_t r, std::size_t c) { return basis_[c].coefficient(mons[r]); });
  if (rank(mon) != dim)
    throw std::logic_error("coefficient basis is not linearly independent");
  for (int i = 1; i <= 3; ++i) {
    const auto field = invariant_field(i);
    std::vector<Poly4> images(dim);
    for (std::size_t t = 0; t < dim; ++t) {
      images[t] = apply_derivation(field, basis_[t]);
      if (!images[t].is_zero() && !images[t].is_homogeneous(unsigned(n)))
        throw std::logic_error("invariant field broke homogeneity");
    }
    const ExactMatrix rhs = ExactMatrix::from_fn(
        mons.size(), dim,
        [&](std::size_t r, std::size_t c) { return images[c].coefficient(mons[r]); });
    auto sol = solve(mon, rhs);
    if (!sol || mon * *sol != rhs)
      throw std::logic_error(
          "invariant field does not preserve the coefficient space");
    const ExactMatrix expected =
        kron(rep_infinitesimal(n, LieVector::e(i)).transpose(),
             ExactMatrix::identity(std::size_t(n + 1)));
    if (*sol != expected)
      throw std::logic_error(
          "field matrix does not factor through the degree-n generator");
    m_.push_back(std::move(*sol));
  }
}

const ExactMatrix& SphereContext::field_matrix(int i) const {
  if (i < 1 || i > 3)
    throw std::invalid_argument("field_matrix: index must be 1..3");
  return m_[std::size_t(i - 1)];
}

SphereContext& ContextPool::get(int n) {
  auto it = pool_.find(n);
  if (it == pool_.end())
    it = pool_.emplace(n, std::make_unique<SphereContext>(n)).first;
  return *it->second;
}

std::string operator_name(SphereOperator op) {
  switch (op) {
    case SphereOperator::D0: return "d0";
    case SphereOperator::Dplus: return "dplus";
    case SphereOperator::Dminus: return "dminus";
    case SphereOperator::ZSquaredSum: return "zsq";
    case SphereOperator::DplusDminus: return "dplus-dminus";
    case SphereOperator::DminusDplus: return "dminus-dplus";
    case SphereOperator::Lap: return "lap";
    case SphereOperator::LapTilde: return "laptilde";
  }
  throw std::invalid_argument("operator_name: bad operator");
}

std::optional<SphereOperator> operator_from_name(const std::string& name) {
  static const std::vector<SphereOperator> all = {
      SphereOperator::D0,          SphereOperator::Dplus,
      SphereOperator::Dminus,      SphereOperator::ZSquaredSum,
      SphereOperator::DplusDminus, SphereOperator::DminusDplus,
      SphereOperator::Lap,         SphereOperator::LapTilde};
  for (auto op : all)
    if (operator_name(op) == name) return op;
  return std::nullopt;
}

int operator_target_spin(SphereOperator op, int m) {
  switch (op) {
    case SphereOperator::Dplus: return m + 2;
    case SphereOperator::Dminus: return m - 2;
    default: return m;
  }
}

namespace {

// block = factor (x) I_{n+1} with the b index threaded through both sides:
// full indices (a(n+1)+b)dv + w map to factor indices a dv + w.
void check_factorization(const ExactMatrix& full, const ExactMatrix& factor,
                         int n, int dv_t, int dv_s) {
  const std::size_t q = std::size_t(n + 1);
  for (std::size_t r = 0; r < full.rows(); ++r) {
    const std::size_t w = r % std::size_t(dv_t), tr = r / std::size_t(dv_t);
    const std::size_t ar = tr / q, br = tr % q;
    for (std::size_t c = 0; c < full.cols(); ++c) {
      const std::size_t v = c % std::size_t(dv_s), tc = c / std::size_t(dv_s);
      const std::size_t ac = tc / q, bc = tc % q;
      const ExactScalar want = br == bc
          ? factor.at(ar * std::size_t(dv_t) + w, ac * std::size_t(dv_s) + v)
          : ExactScalar();
      if (full.at(r, c) != want)
        throw std::logic_error(
            "operator block does not factor through the coefficient action");
    }
  }
}

ExactMatrix expand_factor(const ExactMatrix& factor, int n, int dv_t, int dv_s) {
  const std::size_t q = std::size_t(n + 1);
  return ExactMatrix::from_fn(
      q * q * std::size_t(dv_t), q * q * std::size_t(dv_s),
      [&](std::size_t r, std::size_t c) -> ExactScalar {
        const std::size_t w = r % std::size_t(dv_t), tr = r / std::size_t(dv_t);
        const std::size_t ar = tr / q, br = tr % q;
        const std::size_t v = c % std::size_t(dv_s), tc = c / std::size_t(dv_s);
        const std::size_t ac = tc / q, bc = tc % q;
        if (br != bc) return ExactScalar();
        return factor.at(ar * std::size_t(dv_t) + w, ac * std::size_t(dv_s) + v);
      });
}

CliffordKind first_order_kind(SphereOperator op) {
  switch (op) {
    case SphereOperator::D0: return CliffordKind::zero;
    case SphereOperator::Dplus: return CliffordKind::plus;
    case SphereOperator::Dminus: return CliffordKind::minus;
    default: throw std::invalid_argument("not a first-order operator");
  }
}

OperatorBlock assemble_simple(SphereContext& ctx, SphereOperator op, int m) {
  const int n = ctx.n();
  const std::size_t q = std::size_t(n + 1);
  OperatorBlock blk;
  blk.op = op;
  blk.m = m;
  blk.target_m = operator_target_spin(op, m);
  blk.n = n;
  blk.multiplicity = n + 1;
  if (op == SphereOperator::ZSquaredSum) {
    ExactMatrix zz(q * q, q * q);
    ExactMatrix zf(q, q);
    for (int i = 1; i <= 3; ++i) {
      const ExactMatrix& mi = ctx.field_matrix(i);
      zz = zz + mi * mi;
      const ExactMatrix ri = rep_infinitesimal(n, LieVector::e(i)).transpose();
      zf = zf + ri * ri;
    }
    blk.matrix = kron(zz, ExactMatrix::identity(std::size_t(rep_dim(m))));
    blk.factor = kron(zf, ExactMatrix::identity(std::size_t(rep_dim(m))));
  } else {
    const CliffordKind kind = first_order_kind(op);
    const int dv_t = rep_dim(blk.target_m), dv_s = rep_dim(m);
    ExactMatrix full(q * q * std::size_t(dv_t), q * q * std::size_t(dv_s));
    ExactMatrix fac(q * std::size_t(dv_t), q * std::size_t(dv_s));
    for (int i = 1; i <= 3; ++i) {
      const ExactMatrix ci = clifford_generator(kind, m, i);
      full = full + kron(ctx.field_matrix(i), ci);
      fac = fac + kron(rep_infinitesimal(n, LieVector::e(i)).transpose(), ci);
    }
    if (op == SphereOperator::D0) {
      const ExactScalar shift{Rational(long(m) * (m + 2), 2)};
      full = full + shift * ExactMatrix::identity(full.rows());
      fac = fac + shift * ExactMatrix::identity(fac.rows());
    }
    blk.matrix = std::move(full);
    blk.factor = std::move(fac);
  }
  check_factorization(blk.matrix, blk.factor, n, rep_dim(blk.target_m),
                      rep_dim(m));
  return blk;
}

}  // namespace

OperatorBlock operator_block(SphereContext& ctx, SphereOperator op, int m,
                             BlockCache* cache) {
  if (m < 0) throw std::invalid_argument("operator_block: m must be >= 0");
  const int n = ctx.n();
  const bool simple = op == SphereOperator::D0 || op == SphereOperator::Dplus ||
                      op == SphereOperator::Dminus ||
                      op == SphereOperator::ZSquaredSum;
  if (simple) {
    if (cache) {
      if (auto hit = cache->load(op, m, n)) {
        check_factorization(hit->matrix, hit->factor, n,
                            rep_dim(hit->target_m), rep_dim(m));
        return *hit;
      }
    }
    OperatorBlock blk = assemble_simple(ctx, op, m);
    if (cache) cache->store(blk);
    return blk;
  }

  OperatorBlock blk;
  blk.op = op;
  blk.m = m;
  blk.target_m = m;
  blk.n = n;
  blk.multiplicity = n + 1;
  const std::size_t q = std::size_t(n + 1);
  const std::size_t dim = q * std::size_t(rep_dim(m));
  switch (op) {
    case SphereOperator::DplusDminus:
      blk.factor = m >= 2
          ? operator_block(ctx, SphereOperator::Dplus, m - 2, cache).factor *
                operator_block(ctx, SphereOperator::Dminus, m, cache).factor
          : ExactMatrix(dim, dim);
      break;
    case SphereOperator::DminusDplus:
      blk.factor =
          operator_block(ctx, SphereOperator::Dminus, m + 2, cache).factor *
          operator_block(ctx, SphereOperator::Dplus, m, cache).factor;
      break;
    case SphereOperator::Lap: {
      const ExactMatrix d0 =
          operator_block(ctx, SphereOperator::D0, m, cache).factor;
      blk.factor =
          d0 * d0 +
          operator_block(ctx, SphereOperator::DplusDminus, m, cache).factor;
      break;
    }
    case SphereOperator::LapTilde: {
      const ExactMatrix d0 =
          operator_block(ctx, SphereOperator::D0, m, cache).factor;
      blk.factor =
          d0 * d0 +
          operator_block(ctx, SphereOperator::DminusDplus, m, cache).factor;
      break;
    }
    default:
      throw std::invalid_argument("operator_block: bad operator");
  }
  blk.matrix = expand_factor(blk.factor, n, rep_dim(m), rep_dim(m));
  return blk;
}

Rational closed_form_eigenvalue(SphereOperator op, int m, int K, int n) {
  if (m < 0 || n < 0 || K < std::abs(n - m) || K > n + m ||
      (K - std::abs(n - m)) % 2 != 0)
    throw std::invalid_argument(
        "closed_form_eigenvalue: K does not label a summand");
  const long kappa = std::min(K, n);
  Rational d0, pd, mp;
  if (m % 2 == 1) {
    const long p = (m - 1) / 2;
    const long s = (std::labs(long(K) - long(n)) - 1) / 2;
    d0 = Rational(2 * s + 1) * (Rational(kappa) + Rational(2 * s + 3, 2));
    if (K < n) d0 = -d0;
    pd = Rational(4) * Rational(p - s) * Rational(kappa + 1 - (p - s)) *
         Rational(p + s + 1) * Rational(kappa + p + s + 2);
    mp = Rational(4) * Rational(p - s + 1) * Rational(kappa - (p - s)) *
         Rational(p + s + 2) * Rational(kappa + p + s + 3);
  } else {
    const long p = m / 2;
    const long s = std::labs(long(K) - long(n)) / 2;
    d0 = Rational(2 * s) * Rational(kappa + s + 1);
    if (K < n) d0 = -d0;
    pd = Rational(4) * Rational(p - s) * Rational(kappa + 1 - (p - s)) *
         Rational(p + s) * Rational(kappa + p + s + 1);
    mp = Rational(4) * Rational(p - s + 1) * Rational(kappa - (p - s)) *
         Rational(p + s + 1) * Rational(kappa + p + s + 2);
  }
  switch (op) {
    case SphereOperator::D0: return d0;
    case SphereOperator::DplusDminus: return pd;
    case SphereOperator::DminusDplus: return mp;
    case SphereOperator::Lap: return d0 * d0 + pd;
    case SphereOperator::LapTilde: return d0 * d0 + mp;
    default:
      throw std::invalid_argument(
          "closed_form_eigenvalue: unsupported operator");
  }
}

SpectrumReport spectrum_block(ContextPool& pool, SphereOperator op, int m,
                              int n, BlockCache* cache) {
  if (op != SphereOperator::D0 && op != SphereOperator::DplusDminus &&
      op != SphereOperator::DminusDplus && op != SphereOperator::Lap &&
      op != SphereOperator::LapTilde)
    throw std::invalid_argument("spectrum_block: operator is not square");
  if (m < 0 || n < 0)
    throw std::invalid_argument("spectrum_block: m and n must be >= 0");
  SphereContext& ctx = pool.get(n);
  const OperatorBlock blk = operator_block(ctx, op, m, cache);
  const ExactMatrix& B = blk.factor;
  const std::size_t dim = B.rows();

  struct Group {
    long factor_dim = 0;
    std::vector<std::string> labels;
  };
  std::map<Rational, Group> groups;
  for (int K = std::abs(n - m); K <= n + m; K += 2) {
    auto& g = groups[closed_form_eigenvalue(op, m, K, n)];
    g.factor_dim += K + 1;
    g.labels.push_back(block_label(K, n));
  }

  SpectrumReport rep;
  rep.op = op;
  rep.m = m;
  rep.n = n;
  rep.pass = true;
  long total = 0;
  ExactMatrix ann = ExactMatrix::identity(dim);
  for (const auto& [lam, g] : groups) {
    const ExactMatrix shifted =
        B - ExactScalar(lam) * ExactMatrix::identity(dim);
    const long nullf = long(nullity(shifted));
    if (nullf != g.factor_dim && rep.pass) {
      rep.pass = false;
      rep.witness = "nullity of (block - (" + lam.str() + ")) is " +
                    itos(nullf) + ", closed form predicts " +
                    itos(g.factor_dim);
    }
    ann = ann * shifted;
    total += g.factor_dim;
    rep.rows.push_back({lam, g.factor_dim * (n + 1), g.labels});
  }
  if (total != long(dim) && rep.pass) {
    rep.pass = false;
    rep.witness = "summand dimensions cover " + itos(total) + " of " +
                  itos(long(dim));
  }
  if (!ann.is_zero() && rep.pass) {
    rep.pass = false;
    rep.witness = "product of (block - lambda) over all predicted eigenvalues "
                  "is nonzero, rank " + itos(long(rank(ann)));
  }
  return rep;
}

std::vector<KernelPiece> predicted_kernel(SphereOperator op, int m) {
  if (m < 0) throw std::invalid_argument("predicted_kernel: m must be >= 0");
  std::vector<KernelPiece> out;
  auto add = [&out](int K, int n) {
    if (K >= 0 && n >= 0) out.push_back({K, n, long(K + 1) * (n + 1)});
  };
  switch (op) {
    case SphereOperator::Dplus:
      if (m % 2 == 1) {
        const int p = (m - 1) / 2;
        for (int s = 0; s <= p; ++s) {
          add(p + s + 1, p - s);
          add(p - s, p + s + 1);
        }
      } else {
        const int p = m / 2;
        add(p, p);
        for (int s = 1; s <= p; ++s) {
          add(p + s, p - s);
          add(p - s, p + s);
        }
      }
      break;
    case SphereOperator::D0:
      if (m % 2 == 0)
        throw std::invalid_argument(
            "kernel of d0 at even spin meets blocks of every degree and is "
            "not finite-dimensional");
      break;
    case SphereOperator::Lap:
      if (m == 0)
        throw std::invalid_argument(
            "lap at spin 0 is the zero operator; its kernel is not "
            "finite-dimensional");
      break;
    case SphereOperator::LapTilde:
      if (m % 2 == 0) add(m / 2, m / 2);
      break;
    default:
      throw std::invalid_argument("predicted_kernel: unsupported operator " +
                                  operator_name(op));
  }
  std::sort(out.begin(), out.end(), [](const KernelPiece& x, const KernelPiece& y) {
    return x.n != y.n ? x.n < y.n : x.K < y.K;
  });
  return out;
}

int required_degree(SphereOperator op, int m) {
  int req = 0;
  for (const auto& pc : predicted_kernel(op, m)) req = std::max(req, pc.n);
  return req;
}

KernelResult kernel_dimension(ContextPool& pool, SphereOperator op, int m,
                              int n_max, BlockCache* cache) {
  const auto pieces = predicted_kernel(op, m);
  const int req = required_degree(op, m);
  if (n_max < req)
    throw std::invalid_argument(
        "kernel_dimension: degree cutoff " + itos(n_max) +
        " misses predicted kernel blocks; n_max must be at least " + itos(req));
  KernelResult res;
  res.required_n_max = req;
  res.certificate.suite = "kernel";
  long predicted_total = 0;
  for (const auto& pc : pieces) predicted_total += pc.dim;
  for (int n = 0; n <= n_max; ++n) {
    SphereContext& ctx = pool.get(n);
    const OperatorBlock blk = operator_block(ctx, op, m, cache);
    const long nullf = long(nullity(blk.factor));
    long expect = 0;
    std::string labels;
    for (const auto& pc : pieces)
      if (pc.n == n) {
        expect += pc.K + 1;
        labels += (labels.empty() ? "" : " + ") + block_label(pc.K, n);
      }
    CheckEntry e;
    e.id = "kernel-block";
    e.params = {{"operator", operator_name(op)},
                {"m", itos(m)},
                {"n", itos(n)}};
    e.pass = nullf == expect;
    e.values = {{"nullity", itos(nullf * (n + 1))},
                {"predicted", itos(expect * (n + 1))}};
    if (!labels.empty()) e.values.push_back({"blocks", labels});
    e.provenance =
        "exact nullity of the degree-n block against the closed-form zero "
        "locus";
    if (!e.pass)
      e.witness = "factor nullity " + itos(nullf) + ", predicted " +
                  itos(expect);
    res.certificate.add(e);
    res.dimension += nullf * (n + 1);
  }
  CheckEntry comp;
  comp.id = "kernel-completeness";
  comp.params = {{"operator", operator_name(op)}, {"m", itos(m)}};
  comp.pass = res.certificate.all_pass() && res.dimension == predicted_total;
  comp.values = {{"dimension", itos(res.dimension)},
                 {"required_n_max", itos(req)}};
  comp.provenance =
      "the factored closed-form eigenvalues vanish only on the enumerated "
      "summands, all of degree <= required_n_max, so no higher block "
      "contributes";
  if (!comp.pass)
    comp.witness = "accumulated dimension " + itos(res.dimension) +
                   ", predicted " + itos(predicted_total);
  res.certificate.add(comp);
  return res;
}

namespace {
CheckEntry identity_entry(const std::string& id, int m, int n, bool pass,
                          const std::string& provenance,
                          const std::string& witness) {
  CheckEntry e;
  e.id = id;
  e.params = {{"m", itos(m)}, {"n", itos(n)}};
  e.pass = pass;
  e.provenance = provenance;
  if (!pass) e.witness = witness;
  return e;
}
}  // namespace

VerificationReport verify_s3_identities(ContextPool& pool, int m, int n,
                                        BlockCache* cache) {
  VerificationReport rep;
  rep.suite = "s3-identities";
  SphereContext& ctx = pool.get(n);
  const ExactMatrix d0 = operator_block(ctx, SphereOperator::D0, m, cache).factor;
  const ExactMatrix dp = operator_block(ctx, SphereOperator::Dplus, m, cache).factor;
  const ExactMatrix dm = operator_block(ctx, SphereOperator::Dminus, m, cache).factor;
  const ExactMatrix zz =
      operator_block(ctx, SphereOperator::ZSquaredSum, m, cache).factor;
  const ExactMatrix d0_up =
      operator_block(ctx, SphereOperator::D0, m + 2, cache).factor;
  const std::size_t dim = d0.rows();
  const ExactMatrix id = ExactMatrix::identity(dim);

  const ExactMatrix raise_gap = d0_up * dp - dp * d0;
  rep.add(identity_entry(
      "intertwine-raise", m, n, raise_gap.is_zero(),
      "D0 at spin m+2 composed with D+ equals D+ composed with D0 at spin m",
      "nonzero commutator, rank " + itos(long(rank(raise_gap)))));
  if (m == 0)
    rep.add(identity_entry(
        "d-squared-zero", m, n, d0.is_zero() && (d0_up * dp).is_zero(),
        "at spin 0 the diagonal operator vanishes, so the raise relation "
        "reads (*d)(2d) = 0, the complex property d d = 0",
        "composition of the exterior derivative with itself is nonzero"));
  if (m >= 2) {
    const ExactMatrix d0_dn =
        operator_block(ctx, SphereOperator::D0, m - 2, cache).factor;
    const ExactMatrix lower_gap = d0_dn * dm - dm * d0;
    rep.add(identity_entry(
        "intertwine-lower", m, n, lower_gap.is_zero(),
        "D0 at spin m-2 composed with D- equals D- composed with D0 at spin m",
        "nonzero commutator, rank " + itos(long(rank(lower_gap)))));
  } else {
    rep.add(identity_entry(
        "intertwine-lower", m, n, dm.rows() == 0,
        "below spin 2 the lowering operator maps into a zero-dimensional "
        "space, so the relation is vacuous",
        "expected a zero-dimensional codomain"));
  }

  const ExactMatrix pd =
      operator_block(ctx, SphereOperator::DplusDminus, m, cache).factor;
  const ExactMatrix md =
      operator_block(ctx, SphereOperator::DminusDplus, m, cache).factor;
  const ExactMatrix lap = d0 * d0 + pd;
  const ExactMatrix lap_tilde = d0 * d0 + md;
  const long lm = m;

  const ExactMatrix lap_rhs =
      ExactScalar(Rational(-lm * lm)) * zz + ExactScalar(Rational(lm * lm)) * d0 +
      ExactScalar(Rational(-lm * lm * (lm + 2) * (lm - 2), 4)) * id;
  rep.add(identity_entry(
      "weitzenbock-descending", m, n, lap == lap_rhs,
      "D0 D0 + D+ D- = -m^2 sum Z_i^2 + m^2 D0 - m^2 (m+2)(m-2)/4",
      "residual rank " + itos(long(rank(lap - lap_rhs)))));

  const ExactMatrix lt_rhs =
      ExactScalar(Rational(-(lm + 2) * (lm + 2))) * zz +
      ExactScalar(Rational((lm + 2) * (lm + 2))) * d0 +
      ExactScalar(Rational(-lm * (lm + 2) * (lm + 2) * (lm + 4), 4)) * id;
  rep.add(identity_entry(
      "weitzenbock-ascending", m, n, lap_tilde == lt_rhs,
      "D0 D0 + D- D+ = -(m+2)^2 sum Z_i^2 + (m+2)^2 D0 - m (m+2)^2 (m+4)/4",
      "residual rank " + itos(long(rank(lap_tilde - lt_rhs)))));

  const ExactMatrix diff =
      ExactScalar(Rational((lm + 2) * (lm + 2))) * lap -
      ExactScalar(Rational(lm * lm)) * lap_tilde -
      ExactScalar(Rational(lm * (lm + 1) * (lm + 2) * lm * (lm + 2))) * id;
  rep.add(identity_entry(
      "casimir-difference", m, n, diff.is_zero(),
      "(m+2)^2 (D0 D0 + D+ D-) - m^2 (D0 D0 + D- D+) = m(m+1)(m+2) m(m+2)",
      "residual rank " + itos(long(rank(diff)))));

  const ExactMatrix zz_gap =
      zz + ExactScalar(Rational(long(n) * (n + 2))) * id;
  rep.add(identity_entry(
      "coefficient-casimir", m, n, zz_gap.is_zero(),
      "sum Z_i^2 acts on degree-n coefficients by -n(n+2)",
      "residual rank " + itos(long(rank(zz_gap)))));
  return rep;
}

VerificationReport verify_adjoint_blocks(ContextPool& pool, int m, int n,
                                         BlockCache* cache) {
  VerificationReport rep;
  rep.suite = "s3-adjoint";
  SphereContext& ctx = pool.get(n);
  const OperatorBlock d0 = operator_block(ctx, SphereOperator::D0, m, cache);
  const OperatorBlock dp = operator_block(ctx, SphereOperator::Dplus, m, cache);
  const OperatorBlock dm_up =
      operator_block(ctx, SphereOperator::Dminus, m + 2, cache);
  const ExactMatrix g_m = block_gram(n, m), g_up = block_gram(n, m + 2);

  const ExactMatrix d0_adj = gram_adjoint(d0.matrix, g_m, g_m);
  rep.add(identity_entry(
      "adjoint-diagonal", m, n, d0_adj == d0.matrix,
      "the diagonal operator is formally self-adjoint for the invariant "
      "inner product",
      "residual rank " + itos(long(rank(d0_adj - d0.matrix)))));

  const ExactMatrix dp_adj = gram_adjoint(dp.matrix, g_m, g_up);
  rep.add(identity_entry(
      "adjoint-raise-lower", m, n, dp_adj == dm_up.matrix,
      "the adjoint of D+ at spin m is D- at spin m+2",
      "residual rank " + itos(long(rank(dp_adj - dm_up.matrix)))));
  return rep;
}

VerificationReport verify_gram(int n) {
  VerificationReport rep;
  rep.suite = "s3-gram";
  const ExactMatrix schur = coeff_gram(n);
  const ExactMatrix moments = coeff_gram_by_moments(n);
  CheckEntry e;
  e.id = "gram-cross-check";
  e.params = {{"n", itos(n)}};
  e.pass = schur == moments;
  e.provenance =
      "Schur-orthogonality gram of the coefficient basis equals the gram "
      "computed from monomial moments";
  if (!e.pass)
    e.witness = "residual rank " + itos(long(rank(schur - moments)));
  rep.add(e);
  return rep;
}

VerificationReport check_eigenvalue_bounds(ContextPool& pool, int m, int n_max,
                                           BlockCache* cache) {
  if (m < 1)
    throw std::invalid_argument(
        "check_eigenvalue_bounds: bounds are stated for spin >= 1");
  VerificationReport rep;
  rep.suite = "s3-bounds";

  struct Min {
    bool set = false;
    Rational value;
    std::vector<std::pair<int, int>> blocks;  // (K, n)
    void feed(const Rational& v, int K, int n) {
      if (!set || v < value) {
        set = true;
        value = v;
        blocks.clear();
      }
      if (v == value) blocks.push_back({K, n});
    }
  };
  Min lap_min, lt_min;
  bool spectra_ok = true;
  std::string spectra_witness;
  for (int n = 0; n <= n_max; ++n) {
    for (auto op : {SphereOperator::Lap, SphereOperator::LapTilde}) {
      const SpectrumReport sp = spectrum_block(pool, op, m, n, cache);
      if (!sp.pass && spectra_ok) {
        spectra_ok = false;
        spectra_witness = "spectrum of " + operator_name(op) + " at n = " +
                          itos(n) + ": " + sp.witness;
      }
    }
    for (int K = std::abs(n - m); K <= n + m; K += 2) {
      lap_min.feed(closed_form_eigenvalue(SphereOperator::Lap, m, K, n), K, n);
      lt_min.feed(closed_form_eigenvalue(SphereOperator::LapTilde, m, K, n), K,
                  n);
    }
  }

  auto blocks_str = [](const std::vector<std::pair<int, int>>& bs) {
    std::string out;
    for (const auto& [K, n] : bs)
      out += (out.empty() ? "" : " + ") + block_label(K, n);
    return out;
  };

  const Rational lap_bound(long(m) * m * (m + 1));
  const bool lap_equal = lap_min.value == lap_bound;
  {
    CheckEntry e;
    e.id = "laplace-lower-bound";
    e.params = {{"m", itos(m)}, {"n_max", itos(n_max)}};
    e.pass = spectra_ok && lap_min.set && lap_min.value >= lap_bound;
    e.values = {{"lambda1", lap_min.value.str()},
                {"bound", lap_bound.str()},
                {"equality", lap_equal ? "yes" : "no"},
                {"blocks", blocks_str(lap_min.blocks)}};
    e.provenance =
        "first eigenvalue of D0 D0 + D+ D- over degrees n <= n_max is at "
        "least (m(m+1)/(m+2)) r = m^2(m+1) for the round metric";
    if (!e.pass) e.witness = spectra_ok ? "bound violated" : spectra_witness;
    rep.add(e);
  }
  if (lap_equal) {
    bool in_kernel = true;
    for (const auto& [K, n] : lap_min.blocks)
      in_kernel = in_kernel &&
                  closed_form_eigenvalue(SphereOperator::LapTilde, m, K, n)
                      .is_zero();
    CheckEntry e;
    e.id = "laplace-equality-kernel";
    e.params = {{"m", itos(m)}};
    e.pass = spectra_ok && in_kernel;
    e.values = {{"blocks", blocks_str(lap_min.blocks)}};
    e.provenance =
        "when the lower bound is attained, every minimizing eigensection "
        "lies in the kernel of D0 D0 + D- D+";
    if (!e.pass) e.witness = "a minimizing block is not in the kernel";
    rep.add(e);
  }
  if (m == 1) {
    CheckEntry e;
    e.id = "friedrich-equality";
    e.params = {{"m", itos(m)}};
    const Rational friedrich(9, 4);  // (3/8) * scalar curvature 6
    e.pass = spectra_ok && lap_min.set && lap_min.value == friedrich;
    e.values = {{"lambda1", lap_min.value.str()},
                {"bound", friedrich.str()}};
    e.provenance =
        "at spin 1 the square of the Dirac operator attains the Friedrich "
        "bound (3/8) kappa = 9/4 on the round 3-sphere";
    if (!e.pass) e.witness = spectra_ok ? "bound not attained" : spectra_witness;
    rep.add(e);

    bool twistor = true;
    for (const auto& [K, n] : lap_min.blocks)
      twistor = twistor &&
                closed_form_eigenvalue(SphereOperator::DminusDplus, 1, K, n)
                    .is_zero();
    for (const auto& [K, n] : lap_min.blocks) {
      const SpectrumReport sp =
          spectrum_block(pool, SphereOperator::DminusDplus, 1, n, cache);
      twistor = twistor && sp.pass;
      (void)K;
    }
    CheckEntry t;
    t.id = "friedrich-minimizers-twistor";
    t.params = {{"m", itos(m)}};
    t.pass = twistor;
    t.values = {{"blocks", blocks_str(lap_min.blocks)}};
    t.provenance =
        "Friedrich minimizers are twistor spinors: the minimizing blocks lie "
        "in the kernel of D+";
    if (!t.pass) t.witness = "a minimizing block is not annihilated by D+";
    rep.add(t);
  }

  const Rational lt_bound(-long(m + 1) * (m + 2) * (m + 2));
  {
    CheckEntry e;
    e.id = "laplace-tilde-lower-bound";
    e.params = {{"m", itos(m)}, {"n_max", itos(n_max)}};
    e.pass = spectra_ok && lt_min.set && lt_min.value >= lt_bound;
    e.values = {{"mu1", lt_min.value.str()},
                {"bound", lt_bound.str()},
                {"blocks", blocks_str(lt_min.blocks)}};
    e.provenance =
        "first eigenvalue of D0 D0 + D- D+ is at least "
        "-((m+2)(m+1)/m) r = -(m+1)(m+2)^2; the operator is nonnegative, so "
        "the bound holds strictly";
    if (!e.pass) e.witness = spectra_ok ? "bound violated" : spectra_witness;
    rep.add(e);
  }
  return rep;
}

}  // namespace hsd
