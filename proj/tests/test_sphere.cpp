#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <tuple>

#include "hsd/sphere.hpp"

using namespace hsd;

namespace {
const ExactScalar I = ExactScalar::i();
ExactScalar rs(long n) { return ExactScalar(Rational(n)); }
ExactScalar rs(long n, long d) { return ExactScalar(Rational(n, d)); }

Poly4 xv(unsigned j) { return Poly4::variable(j); }
}  // namespace

TEST_CASE("degree-1 coefficient basis lists the matrix entries") {
  const auto f = coeff_basis(1);
  REQUIRE(f.size() == 4);
  CHECK(f[0] == xv(3) - I * xv(0));   // d
  CHECK(f[1] == -xv(1) + I * xv(2));  // c
  CHECK(f[2] == xv(1) + I * xv(2));   // b
  CHECK(f[3] == xv(3) + I * xv(0));   // a
  const auto f0 = coeff_basis(0);
  REQUIRE(f0.size() == 1);
  CHECK(f0[0] == Poly4::constant(rs(1)));
}

TEST_CASE("normalized moments over the sphere") {
  CHECK(sphere_moment({0, 0, 0, 0}) == Rational(1));
  CHECK(sphere_moment({2, 0, 0, 0}) == Rational(1, 4));
  CHECK(sphere_moment({4, 0, 0, 0}) == Rational(1, 8));
  CHECK(sphere_moment({2, 2, 0, 0}) == Rational(1, 24));
  CHECK(sphere_moment({1, 2, 0, 0}) == Rational(0));
  CHECK(sphere_moment({0, 1, 0, 1}) == Rational(0));
}

TEST_CASE("coefficient gram agrees with monomial moments") {
  CHECK(coeff_gram(1) == rs(1, 2) * ExactMatrix::identity(4));
  CHECK(block_gram(1, 0) == rs(1, 2) * ExactMatrix::identity(4));
  for (int n = 0; n <= 3; ++n) {
    const auto rep = verify_gram(n);
    CHECK(rep.all_pass());
  }
}

TEST_CASE("invariant fields act diagonally through the degree-n generator") {
  SphereContext ctx(1);
  CHECK(ctx.field_matrix(1) ==
        ExactMatrix::diagonal({-I, -I, I, I}));
  // construction itself verifies the factorization for each field
  for (int n = 0; n <= 4; ++n) CHECK_NOTHROW(SphereContext{n});
}

TEST_CASE("operator names round-trip") {
  for (auto op : {SphereOperator::D0, SphereOperator::Dplus,
                  SphereOperator::Dminus, SphereOperator::ZSquaredSum,
                  SphereOperator::DplusDminus, SphereOperator::DminusDplus,
                  SphereOperator::Lap, SphereOperator::LapTilde}) {
    const auto back = operator_from_name(operator_name(op));
    REQUIRE(back.has_value());
    CHECK(*back == op);
  }
  CHECK(!operator_from_name("dirac").has_value());
}

TEST_CASE("hand-checked operator blocks at low degree") {
  ContextPool pool;
  const auto d0_10 = operator_block(pool.get(0), SphereOperator::D0, 1);
  CHECK(d0_10.factor == rs(3, 2) * ExactMatrix::identity(2));
  CHECK(d0_10.matrix == rs(3, 2) * ExactMatrix::identity(2));
  const auto d0_20 = operator_block(pool.get(0), SphereOperator::D0, 2);
  CHECK(d0_20.factor == rs(4) * ExactMatrix::identity(3));
  const auto dm_20 = operator_block(pool.get(0), SphereOperator::Dminus, 2);
  CHECK(dm_20.factor.is_zero());
  CHECK(dm_20.factor.rows() == 1);
  CHECK(dm_20.factor.cols() == 3);
  const auto zz_12 = operator_block(pool.get(2), SphereOperator::ZSquaredSum, 1);
  CHECK(zz_12.factor == rs(-8) * ExactMatrix::identity(6));
}

TEST_CASE("closed forms match the universal first-order eigenvalue") {
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 6; ++n)
      for (int K = std::abs(n - m); K <= n + m; K += 2) {
        const Rational expected(long(K - n) * (K + n + 2), 2);
        CHECK(closed_form_eigenvalue(SphereOperator::D0, m, K, n) == expected);
      }
}

TEST_CASE("frozen spectra at low spin") {
  ContextPool pool;
  const auto s11 = spectrum_block(pool, SphereOperator::D0, 1, 1);
  CHECK(s11.pass);
  REQUIRE(s11.rows.size() == 2);
  CHECK(s11.rows[0].eigenvalue == Rational(-3, 2));
  CHECK(s11.rows[0].multiplicity == 2);
  CHECK(s11.rows[1].eigenvalue == Rational(5, 2));
  CHECK(s11.rows[1].multiplicity == 6);

  const auto s20 = spectrum_block(pool, SphereOperator::D0, 2, 0);
  CHECK(s20.pass);
  REQUIRE(s20.rows.size() == 1);
  CHECK(s20.rows[0].eigenvalue == Rational(4));
  CHECK(s20.rows[0].multiplicity == 3);

  const auto s21 = spectrum_block(pool, SphereOperator::D0, 2, 1);
  CHECK(s21.pass);
  REQUIRE(s21.rows.size() == 2);
  CHECK(s21.rows[0].eigenvalue == Rational(0));
  CHECK(s21.rows[0].multiplicity == 4);
  CHECK(s21.rows[1].eigenvalue == Rational(6));
  CHECK(s21.rows[1].multiplicity == 8);
}

TEST_CASE("factor multiplicities agree with full-block nullities") {
  ContextPool pool;
  const std::vector<std::tuple<SphereOperator, int, int>> cases = {
      {SphereOperator::D0, 1, 1},
      {SphereOperator::D0, 2, 1},
      {SphereOperator::Lap, 1, 1},
      {SphereOperator::LapTilde, 2, 1}};
  for (auto [op, m, n] : cases) {
    const auto sp = spectrum_block(pool, op, m, n);
    CHECK(sp.pass);
    const auto blk = operator_block(pool.get(n), op, m);
    long total = 0;
    for (const auto& row : sp.rows) {
      const ExactMatrix shifted =
          blk.matrix -
          ExactScalar(row.eigenvalue) * ExactMatrix::identity(blk.matrix.rows());
      CHECK(long(nullity(shifted)) == row.multiplicity);
      total += row.multiplicity;
    }
    CHECK(total == long(blk.matrix.rows()));
  }
}

TEST_CASE("composite blocks agree with honest full products") {
  ContextPool pool;
  SphereContext& ctx = pool.get(1);
  const auto d0 = operator_block(ctx, SphereOperator::D0, 1);
  const auto dp = operator_block(ctx, SphereOperator::Dplus, 1);
  const auto dm3 = operator_block(ctx, SphereOperator::Dminus, 3);
  const auto lap = operator_block(ctx, SphereOperator::Lap, 1);
  const auto lt = operator_block(ctx, SphereOperator::LapTilde, 1);
  CHECK(lap.matrix == d0.matrix * d0.matrix);  // D+ D- vanishes below spin 2
  CHECK(lt.matrix == d0.matrix * d0.matrix + dm3.matrix * dp.matrix);
}

TEST_CASE("constant curvature ties the two laplace operators together") {
  ContextPool pool;
  SphereContext& ctx = pool.get(1);
  const auto lap = operator_block(ctx, SphereOperator::Lap, 2);
  const auto lt = operator_block(ctx, SphereOperator::LapTilde, 2);
  const ExactMatrix lhs = rs(16) * lap.factor - rs(4) * lt.factor;
  CHECK(lhs == rs(192) * ExactMatrix::identity(6));
}

TEST_CASE("structural identities hold on every low block") {
  ContextPool pool;
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      const auto rep = verify_s3_identities(pool, m, n);
      CHECK(rep.all_pass());
    }
}

TEST_CASE("blocks are adjoint for the invariant inner product") {
  ContextPool pool;
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      const auto rep = verify_adjoint_blocks(pool, m, n);
      CHECK(rep.all_pass());
    }
}

TEST_CASE("kernel dimensions with completeness certificates") {
  ContextPool pool;
  const long expected_plus[] = {1, 4, 10, 20, 35};
  for (int m = 0; m <= 4; ++m) {
    const auto res = kernel_dimension(pool, SphereOperator::Dplus, m, m);
    CHECK(res.dimension == expected_plus[m]);
    CHECK(res.required_n_max == m);
    CHECK(res.certificate.all_pass());
  }
  for (int p = 0; p <= 2; ++p) {
    const auto res = kernel_dimension(pool, SphereOperator::LapTilde, 2 * p, p);
    CHECK(res.dimension == long(p + 1) * (p + 1));
    CHECK(res.certificate.all_pass());
  }
  for (int m : {1, 3}) {
    const auto res = kernel_dimension(pool, SphereOperator::D0, m, 4);
    CHECK(res.dimension == 0);
    CHECK(res.certificate.all_pass());
  }
  for (int m = 1; m <= 3; ++m) {
    const auto res = kernel_dimension(pool, SphereOperator::Lap, m, 3);
    CHECK(res.dimension == 0);
    CHECK(res.certificate.all_pass());
  }
}

TEST_CASE("kernel preconditions are enforced") {
  ContextPool pool;
  CHECK_THROWS_AS(kernel_dimension(pool, SphereOperator::D0, 2, 6),
                  std::invalid_argument);
  CHECK_THROWS_AS(kernel_dimension(pool, SphereOperator::Lap, 0, 6),
                  std::invalid_argument);
  CHECK_THROWS_AS(kernel_dimension(pool, SphereOperator::Dminus, 2, 6),
                  std::invalid_argument);
  try {
    kernel_dimension(pool, SphereOperator::Dplus, 3, 2);
    CHECK(false);
  } catch (const std::invalid_argument& err) {
    CHECK(std::string(err.what()).find("at least 3") != std::string::npos);
  }
}

TEST_CASE("dirac spectrum aggregates to the classical pattern") {
  ContextPool pool;
  std::map<Rational, long> agg;
  for (int n = 0; n <= 4; ++n) {
    const auto sp = spectrum_block(pool, SphereOperator::D0, 1, n);
    CHECK(sp.pass);
    for (const auto& row : sp.rows) agg[row.eigenvalue] += row.multiplicity;
  }
  // +-(3/2 + k) with multiplicity (k+1)(k+2); the positive branch appears
  // from degree k, the negative one from degree k+1
  for (int k = 0; k <= 3; ++k) {
    const Rational lam = Rational(3, 2) + Rational(k);
    CHECK(agg.at(lam) == long(k + 1) * (k + 2));
    CHECK(agg.at(-lam) == long(k + 1) * (k + 2));
  }
  CHECK(agg.at(Rational(3, 2) + Rational(4)) == 30);
  CHECK(agg.find(-(Rational(3, 2) + Rational(4))) == agg.end());
}

TEST_CASE("eigenvalue bounds and their equality cases") {
  ContextPool pool;
  const auto b1 = check_eigenvalue_bounds(pool, 1, 3);
  CHECK(b1.all_pass());
  bool saw_friedrich = false;
  for (const auto& e : b1.entries)
    if (e.id == "friedrich-equality") saw_friedrich = true;
  CHECK(saw_friedrich);

  const auto b2 = check_eigenvalue_bounds(pool, 2, 3);
  CHECK(b2.all_pass());
  bool saw_equality_kernel = false;
  for (const auto& e : b2.entries) {
    if (e.id == "laplace-lower-bound")
      for (const auto& [k, v] : e.values)
        if (k == "equality") CHECK(v == "yes");
    if (e.id == "laplace-equality-kernel") saw_equality_kernel = true;
  }
  CHECK(saw_equality_kernel);

  const auto b3 = check_eigenvalue_bounds(pool, 3, 3);
  CHECK(b3.all_pass());
  for (const auto& e : b3.entries)
    if (e.id == "laplace-lower-bound")
      for (const auto& [k, v] : e.values)
        if (k == "equality") CHECK(v == "no");
}
