#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hsd/matrix.hpp"
#include "hsd/poly.hpp"
#include "hsd/rational.hpp"
#include "hsd/scalar.hpp"

using namespace hsd;

namespace {

ExactScalar sc(long re) { return ExactScalar(Rational(re)); }
ExactScalar sc(long ren, long red, long imn, long imd) {
  return ExactScalar(Rational(ren, red), Rational(imn, imd));
}
const ExactScalar I = ExactScalar::i();

// Small deterministic PRNG so property tests are reproducible.
struct Rng {
  std::uint64_t s = 0x9e3779b97f4a7c15ull;
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  long small(long lo, long hi) { return lo + long(next() % std::uint64_t(hi - lo + 1)); }
  ExactScalar scalar() {
    return ExactScalar(Rational(small(-4, 4), small(1, 3)), Rational(small(-4, 4), small(1, 3)));
  }
  ExactMatrix matrix(std::size_t r, std::size_t c) {
    return ExactMatrix::from_fn(r, c, [&](std::size_t, std::size_t) { return scalar(); });
  }
};

}  // namespace

TEST_CASE("rational canonical form and arithmetic") {
  CHECK(Rational(6, 4).str() == "3/2");
  CHECK(Rational(-6, 4).str() == "-3/2");
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(8, 2).str() == "4");
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
  CHECK((Rational(1) / Rational(-7, 3)) == Rational(-3, 7));
  CHECK(Rational(5, 3).pow(3) == Rational(125, 27));
  CHECK(Rational::factorial(6) == Rational(720));
  CHECK(Rational::binomial(7, 3) == Rational(35));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("rational serialization round-trip") {
  for (const char* s : {"3/2", "-3/2", "0", "17", "-255/7", "1000000000000000000000/7"}) {
    CHECK(Rational::from_string(s).str() == s);
  }
  CHECK(Rational::from_string("4/2").str() == "2");  // canonicalized on parse
  CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("x/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);

  Rng rng;
  for (int t = 0; t < 200; ++t) {
    Rational r(rng.small(-10000, 10000), rng.small(1, 9999));
    CHECK(Rational::from_string(r.str()) == r);
  }
}

TEST_CASE("scalar field operations") {
  ExactScalar z(Rational(1, 2), Rational(-3, 4));
  CHECK(z.conj() == ExactScalar(Rational(1, 2), Rational(3, 4)));
  CHECK(z.abs2() == Rational(13, 16));
  CHECK((z * z.inv()) == sc(1));
  CHECK((I * I) == sc(-1));
  CHECK((sc(2) + I * sc(3)).str() == "2+3i");
  CHECK(sc(0, 1, -1, 1).str() == "-1i");
  CHECK_THROWS_AS(ExactScalar(0).inv(), std::invalid_argument);

  Rng rng;
  for (int t = 0; t < 100; ++t) {
    ExactScalar a = rng.scalar(), b = rng.scalar(), c = rng.scalar();
    CHECK((a * (b + c)) == (a * b + a * c));
    CHECK((a * b) == (b * a));
    CHECK(((a * b) * c) == (a * (b * c)));
    CHECK((a * b).conj() == (a.conj() * b.conj()));
    if (!b.is_zero()) CHECK(((a / b) * b) == a);
  }
}

TEST_CASE("matrix multiplication associates and conj-transpose reverses") {
  Rng rng;
  for (int t = 0; t < 20; ++t) {
    ExactMatrix a = rng.matrix(3, 4), b = rng.matrix(4, 2), c = rng.matrix(2, 5);
    CHECK(((a * b) * c) == (a * (b * c)));
    CHECK((a * b).conj_transpose() == (b.conj_transpose() * a.conj_transpose()));
  }
}

TEST_CASE("zero-dimensional shapes compose") {
  ExactMatrix a(0, 3), b(3, 0);
  CHECK((a * a.conj_transpose()).rows() == 0);
  ExactMatrix p = b * a;  // 3x3 zero through the zero space
  CHECK(p.rows() == 3);
  CHECK(p.is_zero());
  CHECK(kron(a, ExactMatrix::identity(2)).rows() == 0);
  CHECK(rank(a) == 0);
  CHECK(nullity(a) == 3);
}

TEST_CASE("nullspace: known kernels") {
  CHECK(nullspace(ExactMatrix::identity(3)).empty());
  CHECK(nullspace(ExactMatrix(2, 2)).size() == 2);

  // A = [[1, i], [-i, 1]] has a one-dimensional kernel spanned by (i, -1).
  ExactMatrix a = ExactMatrix::from_rows({{sc(1), I}, {-I, sc(1)}});
  auto ns = nullspace(a);
  REQUIRE(ns.size() == 1);
  CHECK((a * ns[0]).is_zero());
  // proportionality to (i, -1): cross-determinant vanishes
  CHECK((ns[0].at(0, 0) * sc(-1) - ns[0].at(1, 0) * I).is_zero());
}

TEST_CASE("rank-nullity on random matrices") {
  Rng rng;
  for (int t = 0; t < 30; ++t) {
    std::size_t r = 1 + t % 5, c = 1 + (t * 7) % 6;
    ExactMatrix a = rng.matrix(r, c);
    CHECK(rank(a) + nullity(a) == c);
    for (const auto& v : nullspace(a)) CHECK((a * v).is_zero());
  }
}

TEST_CASE("determinant and inverse") {
  ExactMatrix a = ExactMatrix::from_rows({{sc(2), I}, {sc(1), sc(1)}});
  CHECK(determinant(a) == sc(2) - I);
  auto ai = inverse(a);
  REQUIRE(ai.has_value());
  CHECK((a * *ai) == ExactMatrix::identity(2));
  CHECK((*ai * a) == ExactMatrix::identity(2));

  ExactMatrix sing = ExactMatrix::from_rows({{sc(1), sc(2)}, {sc(2), sc(4)}});
  CHECK(determinant(sing).is_zero());
  CHECK(!inverse(sing).has_value());

  Rng rng;
  for (int t = 0; t < 20; ++t) {
    ExactMatrix m = rng.matrix(4, 4), n = rng.matrix(4, 4);
    CHECK(determinant(m * n) == determinant(m) * determinant(n));
  }
}

TEST_CASE("solve with consistency detection") {
  ExactMatrix a = ExactMatrix::from_rows({{sc(1), sc(2)}, {sc(2), sc(4)}});
  ExactMatrix b_bad = ExactMatrix::from_rows({{sc(1)}, {sc(3)}});
  CHECK(!solve(a, b_bad).has_value());
  ExactMatrix b_ok = ExactMatrix::from_rows({{sc(1)}, {sc(2)}});
  auto x = solve(a, b_ok);
  REQUIRE(x.has_value());
  CHECK((a * *x) == b_ok);
}

TEST_CASE("gram adjoint") {
  // with identity Grams the adjoint is the conjugate transpose
  Rng rng;
  ExactMatrix a = rng.matrix(3, 3);
  ExactMatrix id3 = ExactMatrix::identity(3);
  CHECK(gram_adjoint(a, id3, id3) == a.conj_transpose());

  // defining property <Au, w>_dst = <u, A† w>_src on basis vectors, and
  // involution A†† = A, for a non-trivial diagonal Gram
  ExactMatrix g = ExactMatrix::diagonal({sc(1), sc(2), sc(6)});
  ExactMatrix ad = gram_adjoint(a, g, g);
  // <u,v>_G = v* G u, checked on all basis pairs
  for (std::size_t u = 0; u < 3; ++u)
    for (std::size_t w = 0; w < 3; ++w) {
      ExactScalar inner_Au_w(0), inner_u_Adw(0);
      for (std::size_t r = 0; r < 3; ++r) {
        inner_Au_w += g.at(r, r) * a.at(r, u) * (r == w ? sc(1) : sc(0)).conj();
        inner_u_Adw += g.at(r, r) * (r == u ? sc(1) : sc(0)) * ad.at(r, w).conj();
      }
      CHECK(inner_Au_w == inner_u_Adw);
    }
  CHECK(gram_adjoint(ad, g, g) == a);

  ExactMatrix singular = ExactMatrix::diagonal({sc(1), sc(0), sc(1)});
  CHECK_THROWS_AS(gram_adjoint(a, singular, g), std::invalid_argument);
}

TEST_CASE("polynomials: arithmetic, degree, derivatives") {
  Poly4 x1 = Poly4::variable(0), x2 = Poly4::variable(1), x4 = Poly4::variable(3);
  Poly4 p = x1 * x1 + sc(2) * (x2 * x4) - Poly4::constant(sc(5));
  CHECK(p.degree() == 2u);
  CHECK(!p.is_homogeneous(2));
  CHECK((x1 * x1 + x2 * x2).is_homogeneous(2));
  CHECK(p.coefficient({1, 0, 0, 0}).is_zero());
  CHECK(p.coefficient({0, 1, 0, 1}) == sc(2));
  CHECK(p.derivative(0) == sc(2) * x1);
  CHECK(p.derivative(1) == sc(2) * x4);
  CHECK((p - p).is_zero());
  CHECK(Poly4().degree() == std::nullopt);
  CHECK(p.eval({sc(1), sc(2), sc(0), sc(3)}) == sc(1) + sc(12) - sc(5));
}

TEST_CASE("derivations: tangent fields of the 3-sphere") {
  // Z1 = -x1 d4 + x4 d1 - x3 d2 + x2 d3 and cyclic siblings
  auto z1 = derivation_from_matrix({{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}}});
  auto z2 = derivation_from_matrix({{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}});
  auto z3 = derivation_from_matrix({{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}});

  Poly4 x1 = Poly4::variable(0), x2 = Poly4::variable(1), x3 = Poly4::variable(2),
        x4 = Poly4::variable(3);
  CHECK(apply_derivation(z1, Poly4::constant(sc(1))).is_zero());
  CHECK(apply_derivation(z1, x4) == -x1);
  CHECK(apply_derivation(z1, x1) == x4);

  Poly4 r2 = x1 * x1 + x2 * x2 + x3 * x3 + x4 * x4;
  for (const auto& z : {z1, z2, z3}) CHECK(apply_derivation(z, r2).is_zero());

  // Leibniz rule and linearity
  Poly4 p = x1 * x2 + sc(3) * (x3 * x4 * x4);
  Poly4 q = x2 * x2 - x4;
  CHECK(apply_derivation(z2, p * q) ==
        apply_derivation(z2, p) * q + p * apply_derivation(z2, q));
  CHECK(apply_derivation(z3, p + q) ==
        apply_derivation(z3, p) + apply_derivation(z3, q));
}
