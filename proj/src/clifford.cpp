#include "hsd/clifford.hpp"

#include <stdexcept>

namespace hsd {

namespace {
const ExactScalar kI = ExactScalar::i();
ExactScalar rat(long n) { return ExactScalar(Rational(n)); }
ExactScalar rat(long n, long d) { return ExactScalar(Rational(n, d)); }
std::string itos(long v) { return std::to_string(v); }
}  // namespace

int clifford_target_spin(CliffordKind kind, int m) {
  switch (kind) {
    case CliffordKind::zero: return m;
    case CliffordKind::plus: return m + 2;
    case CliffordKind::minus: return m - 2;
  }
  throw std::invalid_argument("clifford_target_spin: bad kind");
}

ExactMatrix clifford_generator(CliffordKind kind, int m, int i) {
  if (m < 0) throw std::invalid_argument("clifford_generator: m must be >= 0");
  if (i < 1 || i > 3) throw std::invalid_argument("clifford_generator: index must be 1..3");
  const int rows = rep_dim(clifford_target_spin(kind, m));
  const int cols = rep_dim(m);
  return ExactMatrix::from_fn(rows, cols, [&](std::size_t ru, std::size_t cu) -> ExactScalar {
    const long r = long(ru), k = long(cu);
    switch (kind) {
      case CliffordKind::zero:
        switch (i) {
          case 1: return r == k ? kI * rat(2 * k - m) : rat(0);
          case 2:
            if (r == k + 1) return rat(m - k);
            if (r == k - 1) return rat(-k);
            return rat(0);
          case 3:
            if (r == k - 1) return kI * rat(k);
            if (r == k + 1) return kI * rat(m - k);
            return rat(0);
        }
        break;
      case CliffordKind::plus:
        switch (i) {
          case 1: return r == k + 1 ? rat(2) * kI : rat(0);
          case 2:
            if (r == k) return rat(-1);
            if (r == k + 2) return rat(-1);
            return rat(0);
          case 3:
            if (r == k) return kI;
            if (r == k + 2) return -kI;
            return rat(0);
        }
        break;
      case CliffordKind::minus:
        switch (i) {
          case 1: return r == k - 1 ? rat(2) * kI * rat(k * (m - k)) : rat(0);
          case 2:
            if (r == k - 2) return rat(k * (k - 1));
            if (r == k) return rat((m - k) * (m - k - 1));
            return rat(0);
          case 3:
            if (r == k - 2) return -kI * rat(k * (k - 1));
            if (r == k) return kI * rat((m - k) * (m - k - 1));
            return rat(0);
        }
        break;
    }
    return rat(0);
  });
}

CliffordMap clifford_map(CliffordKind kind, int m, const LieVector& x) {
  ExactMatrix mat = x.c1 * clifford_generator(kind, m, 1) +
                    x.c2 * clifford_generator(kind, m, 2) +
                    x.c3 * clifford_generator(kind, m, 3);
  return CliffordMap{kind, m, clifford_target_spin(kind, m), std::move(mat)};
}

namespace {

struct GeneratorSet {
  int m;
  ExactMatrix zero[3], plus[3], minus[3];  // index i-1
  ExactMatrix g_m, g_p, g_mm;              // Grams of V_m, V_{m+2}, V_{m-2}

  explicit GeneratorSet(int m_) : m(m_) {
    for (int i = 1; i <= 3; ++i) {
      zero[i - 1] = clifford_generator(CliffordKind::zero, m, i);
      plus[i - 1] = clifford_generator(CliffordKind::plus, m, i);
      minus[i - 1] = clifford_generator(CliffordKind::minus, m, i);
    }
    g_m = gram_matrix(m);
    g_p = gram_matrix(m + 2);
    g_mm = gram_matrix(m - 2);
  }
};

// Aggregates a per-pair check into one entry; records the first offending
// pair as the witness.
template <typename F>
CheckEntry pair_entry(const std::string& id, int m, const std::string& provenance, F&& check) {
  CheckEntry e;
  e.id = id;
  e.params = {{"m", itos(m)}};
  e.provenance = provenance;
  e.pass = true;
  for (int i = 1; i <= 3 && e.pass; ++i)
    for (int j = 1; j <= 3 && e.pass; ++j) {
      if (!check(i, j)) {
        e.pass = false;
        e.witness = "fails at (X,Y) = (e" + itos(i) + ", e" + itos(j) + ")";
      }
    }
  return e;
}

}  // namespace

VerificationReport verify_algebra(int m_max) {
  VerificationReport rep;
  rep.suite = "verify-algebra";
  for (int m = 0; m <= m_max; ++m) {
    GeneratorSet g(m);
    const ExactMatrix id_m = ExactMatrix::identity(rep_dim(m));

    // Gram-adjointness of the three maps
    {
      CheckEntry e;
      e.id = "adjoint-rho0";
      e.params = {{"m", itos(m)}};
      e.provenance = "(rho_m^0(X))* = -rho_m^0(X) under the invariant pairing";
      e.pass = true;
      for (int i = 1; i <= 3; ++i)
        if (gram_adjoint(g.zero[i - 1], g.g_m, g.g_m) != -g.zero[i - 1]) {
          e.pass = false;
          e.witness = "fails at X = e" + itos(i);
          break;
        }
      rep.add(e);
    }
    {
      CheckEntry e;
      e.id = "adjoint-rho-plus";
      e.params = {{"m", itos(m)}};
      e.provenance = "(rho_m^+(X))* = -rho_{m+2}^-(X)";
      e.pass = true;
      for (int i = 1; i <= 3; ++i)
        if (gram_adjoint(g.plus[i - 1], g.g_m, g.g_p) !=
            -clifford_generator(CliffordKind::minus, m + 2, i)) {
          e.pass = false;
          e.witness = "fails at X = e" + itos(i);
          break;
        }
      rep.add(e);
    }
    {
      CheckEntry e;
      e.id = "adjoint-rho-minus";
      e.params = {{"m", itos(m)}};
      e.provenance = "(rho_m^-(X))* = -rho_{m-2}^+(X)";
      e.pass = true;
      for (int i = 1; i <= 3; ++i) {
        ExactMatrix expected = m >= 2 ? -clifford_generator(CliffordKind::plus, m - 2, i)
                                      : ExactMatrix(rep_dim(m), 0);
        if (gram_adjoint(g.minus[i - 1], g.g_m, g.g_mm) != expected) {
          e.pass = false;
          e.witness = "fails at X = e" + itos(i);
          break;
        }
      }
      rep.add(e);
    }

    // commutator equivariance of each kind
    auto bracket_e = [](int i, int j) { return bracket(LieVector::e(i), LieVector::e(j)); };
    rep.add(pair_entry("commutator-rho0", m,
                       "rho_m^0([X,Y]) = rho_m^0(X) rho_m^0(Y) - rho_m^0(Y) rho_m^0(X)",
                       [&](int i, int j) {
                         return clifford_map(CliffordKind::zero, m, bracket_e(i, j)).matrix ==
                                g.zero[i - 1] * g.zero[j - 1] - g.zero[j - 1] * g.zero[i - 1];
                       }));
    rep.add(pair_entry("commutator-rho-plus", m,
                       "rho_m^+([X,Y]) = rho_{m+2}^0(X) rho_m^+(Y) - rho_m^+(Y) rho_m^0(X)",
                       [&](int i, int j) {
                         return clifford_map(CliffordKind::plus, m, bracket_e(i, j)).matrix ==
                                clifford_generator(CliffordKind::zero, m + 2, i) * g.plus[j - 1] -
                                    g.plus[j - 1] * g.zero[i - 1];
                       }));
    rep.add(pair_entry("commutator-rho-minus", m,
                       "rho_m^-([X,Y]) = rho_{m-2}^0(X) rho_m^-(Y) - rho_m^-(Y) rho_m^0(X)",
                       [&](int i, int j) {
                         ExactMatrix lhs = clifford_map(CliffordKind::minus, m, bracket_e(i, j)).matrix;
                         ExactMatrix zero_down = m >= 2
                                                     ? clifford_generator(CliffordKind::zero, m - 2, i)
                                                     : ExactMatrix(0, 0);
                         return lhs == zero_down * g.minus[j - 1] - g.minus[j - 1] * g.zero[i - 1];
                       }));

    // mixed Clifford/commutation relations
    rep.add(pair_entry(
        "square-relation-raise", m,
        "rho_{m+2}^0(X) rho_m^+(Y) - rho_m^+(X) rho_m^0(Y) = ((m+2)/2) rho_m^+([X,Y])",
        [&](int i, int j) {
          return clifford_generator(CliffordKind::zero, m + 2, i) * g.plus[j - 1] -
                     g.plus[i - 1] * g.zero[j - 1] ==
                 rat(m + 2, 2) * clifford_map(CliffordKind::plus, m, bracket_e(i, j)).matrix;
        }));
    rep.add(pair_entry(
        "square-relation-lower", m,
        "rho_{m-2}^0(X) rho_m^-(Y) - rho_m^-(X) rho_m^0(Y) = -(m/2) rho_m^-([X,Y])",
        [&](int i, int j) {
          ExactMatrix zero_down =
              m >= 2 ? clifford_generator(CliffordKind::zero, m - 2, i) : ExactMatrix(0, 0);
          return zero_down * g.minus[j - 1] - g.minus[i - 1] * g.zero[j - 1] ==
                 rat(-m, 2) * clifford_map(CliffordKind::minus, m, bracket_e(i, j)).matrix;
        }));
    rep.add(pair_entry(
        "square-relation-down-up", m,
        "rho_m^0(X) rho_m^0(Y) + rho_{m-2}^+(X) rho_m^-(Y) = (m/2) rho_m^0([X,Y]) - m^2 (X,Y)",
        [&](int i, int j) {
          ExactMatrix plus_down =
              m >= 2 ? clifford_generator(CliffordKind::plus, m - 2, i)
                     : ExactMatrix(rep_dim(m), 0);
          ExactScalar pair_ij = pairing(LieVector::e(i), LieVector::e(j));
          return g.zero[i - 1] * g.zero[j - 1] + plus_down * g.minus[j - 1] ==
                 rat(m, 2) * clifford_map(CliffordKind::zero, m, bracket_e(i, j)).matrix -
                     (rat(m * m) * pair_ij) * id_m;
        }));
    rep.add(pair_entry(
        "square-relation-up-down", m,
        "rho_m^0(X) rho_m^0(Y) + rho_{m+2}^-(X) rho_m^+(Y) = -((m+2)/2) rho_m^0([X,Y]) - (m+2)^2 (X,Y)",
        [&](int i, int j) {
          ExactScalar pair_ij = pairing(LieVector::e(i), LieVector::e(j));
          return g.zero[i - 1] * g.zero[j - 1] +
                     clifford_generator(CliffordKind::minus, m + 2, i) * g.plus[j - 1] ==
                 rat(-(m + 2), 2) * clifford_map(CliffordKind::zero, m, bracket_e(i, j)).matrix -
                     (rat((m + 2) * (m + 2)) * pair_ij) * id_m;
        }));

    {
      CheckEntry e;
      e.id = "casimir";
      e.params = {{"m", itos(m)}};
      e.provenance = "-sum_i rho_m^0(e_i)^2 = m(m+2) I";
      e.pass = casimir(m) == rat(m * (m + 2)) * id_m;
      if (!e.pass) e.witness = "Casimir mismatch at m = " + itos(m);
      rep.add(e);
    }

    if (m == 1) {
      rep.add(pair_entry("classical-anticommutator", m,
                         "rho_1^0(e_i) rho_1^0(e_j) + rho_1^0(e_j) rho_1^0(e_i) = -2 delta_ij",
                         [&](int i, int j) {
                           ExactMatrix anti = g.zero[i - 1] * g.zero[j - 1] +
                                              g.zero[j - 1] * g.zero[i - 1];
                           return anti == rat(i == j ? -2 : 0) * id_m;
                         }));
    }
  }
  return rep;
}

VerificationReport verify_group_equivariance(int m, const GroupElement& g) {
  VerificationReport rep;
  rep.suite = "verify-equivariance";
  const ExactMatrix rho_g_m = rep_group(m, g);
  const ExactMatrix rho_g_inv = rep_group(m, g.inverse());
  const char* names[3] = {"zero", "plus", "minus"};
  const CliffordKind kinds[3] = {CliffordKind::zero, CliffordKind::plus, CliffordKind::minus};
  for (int kix = 0; kix < 3; ++kix) {
    CheckEntry e;
    e.id = std::string("group-equivariance-") + names[kix];
    e.params = {{"m", itos(m)}, {"g", "[" + g.a().str() + ", " + g.b().str() + "]"}};
    e.provenance =
        "rho_m^k(g X g^-1) = rho_target(g) rho_m^k(X) rho_m(g^-1), probed on the "
        "rational-unitary set";
    e.pass = true;
    const ExactMatrix rho_g_target = rep_group(clifford_target_spin(kinds[kix], m), g);
    for (int i = 1; i <= 3; ++i) {
      LieVector conj = g.conjugate(LieVector::e(i));
      ExactMatrix lhs = clifford_map(kinds[kix], m, conj).matrix;
      ExactMatrix rhs = rho_g_target *
                        clifford_generator(kinds[kix], m, i) * rho_g_inv;
      if (lhs != rhs) {
        e.pass = false;
        e.witness = "fails at X = e" + itos(i);
        break;
      }
    }
    rep.add(e);
  }
  return rep;
}

VerificationReport cg_oracle_compare(int m) {
  VerificationReport rep;
  rep.suite = "verify-cg";
  auto comps = cg_decompose(m, 2);

  // coordinates of e_i inside V_2 under the weight dictionary
  // z^0 <-> (e2 + i e3)/2, z^1 <-> i e1 / 2, z^2 <-> (e2 - i e3)/2,
  // so each e_i embeds with squared invariant norm 4
  auto embed_x = [&](int i) -> std::vector<ExactScalar> {
    switch (i) {
      case 1: return {rat(0), rat(-2) * kI, rat(0)};
      case 2: return {rat(1), rat(0), rat(1)};
      case 3: return {-kI, rat(0), kI};
    }
    throw std::invalid_argument("embed_x");
  };

  const char* names[3] = {"zero", "plus", "minus"};
  const CliffordKind kinds[3] = {CliffordKind::zero, CliffordKind::plus, CliffordKind::minus};
  const Rational const_sq[3] = {Rational(m * (m + 2), 4), Rational((m + 1) * (m + 2), 2),
                                Rational(m * (m + 1), 2)};

  for (int kix = 0; kix < 3; ++kix) {
    const int target = clifford_target_spin(kinds[kix], m);
    CheckEntry e;
    e.id = std::string("cg-match-") + names[kix];
    e.params = {{"m", itos(m)}, {"kind", names[kix]}};
    e.provenance =
        "rho_m^k is a scalar multiple of the CG projection of v (x) X onto V_target; "
        "|scalar|^2 equals the squared constant times the embedding norm ratio";

    const CGComponent* comp = nullptr;
    for (const auto& c : comps)
      if (c.j == target) comp = &c;

    if (target < 0 || comp == nullptr) {
      // degenerate: no summand of that weight; the Clifford map must be zero
      bool zero_map = true;
      for (int i = 1; i <= 3; ++i)
        if (!clifford_generator(kinds[kix], m, i).is_zero()) zero_map = false;
      e.pass = zero_map;
      e.values = {{"degenerate", "zero-map"}};
      if (!e.pass) e.witness = "no CG summand but the Clifford map is nonzero";
      rep.add(e);
      continue;
    }

    // projection-based map T_i : V_m -> V_target, v |-> P (v (x) e_i)
    ExactMatrix t[3], rho[3];
    for (int i = 1; i <= 3; ++i) {
      auto x = embed_x(i);
      ExactMatrix vx = ExactMatrix::from_fn(
          3 * rep_dim(m), rep_dim(m), [&](std::size_t r, std::size_t c) {
            return r / 3 == c ? x[r % 3] : rat(0);
          });
      t[i - 1] = comp->projection * vx;
      rho[i - 1] = clifford_generator(kinds[kix], m, i);
    }

    // single proportionality scalar across all generators and entries
    ExactScalar s(0);
    bool proportional = true;
    for (int i = 0; i < 3 && s.is_zero(); ++i)
      for (std::size_t r = 0; r < t[i].rows() && s.is_zero(); ++r)
        for (std::size_t c = 0; c < t[i].cols() && s.is_zero(); ++c)
          if (!t[i].at(r, c).is_zero()) s = rho[i].at(r, c) / t[i].at(r, c);
    for (int i = 0; i < 3 && proportional; ++i)
      if (rho[i] != s * t[i]) proportional = false;

    Rational expected = const_sq[kix] * comp->norm_ratio;
    e.pass = proportional && !s.is_zero() && s.abs2() == expected;
    e.values = {{"scalar_abs2", s.abs2().str()},
                {"constant_sq", const_sq[kix].str()},
                {"norm_ratio", comp->norm_ratio.str()}};
    if (!proportional)
      e.witness = "projection-based map is not proportional to the Clifford map";
    else if (s.abs2() != expected)
      e.witness = "|s|^2 = " + s.abs2().str() + ", expected " + expected.str();
    rep.add(e);
  }
  return rep;
}

ExactScalar symbol_det(int m, const LieVector& xi) {
  return determinant(clifford_map(CliffordKind::zero, m, xi).matrix);
}

Poly4 symbol_det_poly(int m) {
  // tridiagonal continuant over polynomials in x1,x2,x3 (standing for xi)
  const Poly4 x1 = Poly4::variable(0), x2 = Poly4::variable(1), x3 = Poly4::variable(2);
  auto diag = [&](long k) { return (kI * rat(2 * k - m)) * x1; };
  auto sub = [&](long k) {  // row k+1, column k: entry of xi_2 rho(e2) + xi_3 rho(e3)
    return rat(m - k) * x2 + (kI * rat(m - k)) * x3;
  };
  auto sup = [&](long k) {  // row k-1, column k
    return rat(-k) * x2 + (kI * rat(k)) * x3;
  };
  Poly4 dm2 = Poly4::constant(rat(1));  // D_{-1}
  Poly4 dm1 = diag(0);                  // D_0
  for (long k = 1; k <= m; ++k) {
    // D_k = a_k D_{k-1} - (sub entry into row k)(sup entry out of row k) D_{k-2}
    Poly4 d = diag(k) * dm1 - (sub(k - 1) * sup(k)) * dm2;
    dm2 = dm1;
    dm1 = d;
  }
  return dm1;
}

Poly4 symbol_det_closed_form(int m) {
  if (m % 2 == 0) return Poly4();
  const Poly4 x1 = Poly4::variable(0), x2 = Poly4::variable(1), x3 = Poly4::variable(2);
  Poly4 norm = x1 * x1 + x2 * x2 + x3 * x3;
  Poly4 acc = Poly4::constant(rat(1));
  for (int e = 0; e < (m + 1) / 2; ++e) acc = acc * norm;
  ExactScalar c(1);
  for (int k = 0; k <= m; ++k) c *= kI * rat(2 * k - m);
  return c * acc;
}

TorusKernelDims torus_kernel_dims(int m) {
  TorusKernelDims out;
  out.certificate.suite = "torus";

  ExactMatrix plus_e1 = clifford_generator(CliffordKind::plus, m, 1);
  bool plus_injective = rank(plus_e1) == std::size_t(m + 1);
  {
    CheckEntry e;
    e.id = "torus-symbol-plus-injective";
    e.params = {{"m", itos(m)}};
    e.provenance =
        "rank rho_m^+(e_1) = m+1; with rotation equivariance this makes the symbol "
        "injective for every nonzero covector, so only the constant mode contributes";
    e.pass = plus_injective;
    e.values = {{"rank", itos(long(rank(plus_e1)))}};
    out.certificate.add(e);
  }
  out.dplus = plus_injective ? m + 1 : -1;

  if (m % 2 == 1) {
    ExactScalar det = symbol_det(m, LieVector::e(1));
    CheckEntry e;
    e.id = "torus-symbol-zero-invertible";
    e.params = {{"m", itos(m)}};
    e.provenance =
        "det rho_m^0(e_1) != 0 for odd m; equivariance extends this to all nonzero "
        "covectors, so only the constant mode contributes";
    e.pass = !det.is_zero();
    e.values = {{"det", det.str()}};
    out.certificate.add(e);
    out.d0 = e.pass ? std::optional<long>(m + 1) : std::nullopt;
  } else {
    CheckEntry e;
    e.id = "torus-symbol-zero-singular";
    e.params = {{"m", itos(m)}};
    e.provenance = "for even m the zero-kind symbol is singular on every covector; "
                   "the kernel is not finite-dimensional";
    ExactScalar det = symbol_det(m, LieVector::e(1));
    e.pass = det.is_zero();
    e.values = {{"det", det.str()}};
    out.certificate.add(e);
    out.d0 = std::nullopt;
  }
  return out;
}

}  // namespace hsd
