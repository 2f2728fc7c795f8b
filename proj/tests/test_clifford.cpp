#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hsd/clifford.hpp"

using namespace hsd;

namespace {
const ExactScalar I = ExactScalar::i();
ExactScalar rat(long n) { return ExactScalar(Rational(n)); }
ExactScalar rat(long n, long d) { return ExactScalar(Rational(n, d)); }
}  // namespace

TEST_CASE("target spins and shapes") {
  CHECK(clifford_target_spin(CliffordKind::zero, 4) == 4);
  CHECK(clifford_target_spin(CliffordKind::plus, 4) == 6);
  CHECK(clifford_target_spin(CliffordKind::minus, 4) == 2);
  CHECK(clifford_generator(CliffordKind::plus, 3, 2).rows() == 6);
  CHECK(clifford_generator(CliffordKind::plus, 3, 2).cols() == 4);
  // below the bottom spin the minus map is a map to the zero space
  CHECK(clifford_generator(CliffordKind::minus, 1, 1).rows() == 0);
  CHECK(clifford_generator(CliffordKind::minus, 0, 3).rows() == 0);
}

TEST_CASE("hand-computed generator entries") {
  // spin 1, zero kind: e1 acts diagonally with i(2k-1)
  ExactMatrix z1 = clifford_generator(CliffordKind::zero, 1, 1);
  CHECK(z1 == ExactMatrix::diagonal({-I, I}));

  // plus kind at m=0 with X = e2/2 + i e3/2 sends z^0 to -z^0
  LieVector x{rat(0), rat(1, 2), I * rat(1, 2)};
  ExactMatrix p = clifford_map(CliffordKind::plus, 0, x).matrix;
  CHECK(p.rows() == 3);
  CHECK(p.at(0, 0) == rat(-1));
  CHECK(p.at(1, 0) == rat(0));
  CHECK(p.at(2, 0) == rat(0));

  // and X = e2/2 - i e3/2 sends z^0 to -z^2
  LieVector y{rat(0), rat(1, 2), -I * rat(1, 2)};
  ExactMatrix q = clifford_map(CliffordKind::plus, 0, y).matrix;
  CHECK(q.at(0, 0) == rat(0));
  CHECK(q.at(2, 0) == rat(-1));

  // minus kind at m=2 with e1/2 sends z^1 to i z^0
  LieVector h{rat(1, 2), rat(0), rat(0)};
  ExactMatrix mi = clifford_map(CliffordKind::minus, 2, h).matrix;
  CHECK(mi.rows() == 1);
  CHECK(mi.at(0, 1) == I);
  CHECK(mi.at(0, 0) == rat(0));
  CHECK(mi.at(0, 2) == rat(0));
}

TEST_CASE("full algebra verification up to spin 6") {
  VerificationReport rep = verify_algebra(6);
  CHECK(rep.all_pass());
  CHECK(rep.failed() == 0);
  // 11 identity families per m, plus the anticommutator at m=1
  CHECK(rep.entries.size() == 7 * 11 + 1);
}

TEST_CASE("squared proportionality constants at spin 5") {
  // the maps are const * (normalized projection) with const^2 equal to
  // m(m+2)/4, (m+1)(m+2)/2, m(m+1)/2 on the zero/plus/minus kinds
  VerificationReport rep = cg_oracle_compare(5);
  REQUIRE(rep.all_pass());
  REQUIRE(rep.entries.size() == 3);
  const char* want[3] = {"35/4", "21", "15"};
  for (int k = 0; k < 3; ++k) {
    bool found = false;
    for (const auto& kv : rep.entries[k].values)
      if (kv.first == "constant_sq") {
        found = true;
        CHECK(kv.second == want[k]);
      }
    CHECK(found);
  }
}

TEST_CASE("group equivariance over the rational-unitary probe set") {
  for (const auto& g : rational_unitary_test_set())
    for (int m : {0, 1, 2, 3}) {
      VerificationReport rep = verify_group_equivariance(m, g);
      CHECK(rep.all_pass());
    }
}

TEST_CASE("Clebsch-Gordan oracle agreement") {
  for (int m = 0; m <= 6; ++m) {
    VerificationReport rep = cg_oracle_compare(m);
    INFO("m = ", m);
    CHECK(rep.all_pass());
    CHECK(rep.entries.size() == 3);
  }
}

TEST_CASE("symbol determinant, numeric probes") {
  CHECK(symbol_det(1, LieVector::e(1)) == rat(1));
  // (0,3,4): (9+16)^2 * 9 = 5625
  LieVector xi{rat(0), rat(3), rat(4)};
  CHECK(symbol_det(3, xi) == rat(5625));
  CHECK(symbol_det(2, xi) == rat(0));
  CHECK(symbol_det(4, LieVector::e(2)) == rat(0));
}

TEST_CASE("symbol determinant, polynomial identity") {
  for (int m = 1; m <= 7; m += 2) {
    INFO("m = ", m);
    CHECK(symbol_det_poly(m) == symbol_det_closed_form(m));
  }
  for (int m = 0; m <= 6; m += 2) {
    INFO("m = ", m);
    CHECK(symbol_det_poly(m).is_zero());
  }
  // the continuant agrees with the matrix determinant on a sample point
  Poly4 p = symbol_det_poly(3);
  std::array<ExactScalar, 4> pt = {rat(0), rat(3), rat(4), rat(0)};
  LieVector xi{rat(0), rat(3), rat(4)};
  CHECK(p.eval(pt) == symbol_det(3, xi));
}

TEST_CASE("torus kernel dimensions") {
  auto t1 = torus_kernel_dims(1);
  CHECK(t1.certificate.all_pass());
  CHECK(t1.d0.has_value());
  CHECK(*t1.d0 == 2);
  CHECK(t1.dplus == 2);

  auto t2 = torus_kernel_dims(2);
  CHECK(t2.certificate.all_pass());
  CHECK_FALSE(t2.d0.has_value());
  CHECK(t2.dplus == 3);

  auto t5 = torus_kernel_dims(5);
  CHECK(t5.certificate.all_pass());
  CHECK(*t5.d0 == 6);
  CHECK(t5.dplus == 6);
}
