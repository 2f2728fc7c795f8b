// Acceptance run: ten end-to-end checks covering the whole verification
// surface, one line each. Exits nonzero if any criterion fails.
#include <iostream>
#include <map>
#include <string>

#include "hsd/clifford.hpp"
#include "hsd/rational.hpp"
#include "hsd/report.hpp"
#include "hsd/sphere.hpp"

using namespace hsd;

namespace {

int g_failures = 0;

void result(int index, const std::string& label, bool ok,
            const std::string& detail = std::string()) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion-" << index << ": "
            << label;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

}  // namespace

int main() {
  {
    VerificationReport rep = verify_algebra(20);
    result(1, "generator relations and the homomorphism property, spins 0..20",
           rep.all_pass(), std::to_string(rep.passed()) + " checks");
  }

  {
    bool ok = true;
    int checks = 0;
    for (int m = 0; m <= 8; ++m) {
      VerificationReport rep = cg_oracle_compare(m);
      ok = ok && rep.all_pass();
      checks += rep.passed();
    }
    result(2, "the three maps match tensor-decomposition projections, spins 0..8",
           ok, std::to_string(checks) + " checks");
  }

  {
    bool ok = true;
    for (int m = 1; m <= 9; m += 2)
      ok = ok && (symbol_det_poly(m) == symbol_det_closed_form(m));
    for (int m = 0; m <= 8; m += 2) ok = ok && symbol_det_poly(m).is_zero();
    result(3, "symbol determinant closed form for odd spins, zero for even", ok);
  }

  ContextPool pool;

  {
    bool ok = true;
    std::map<Rational, long> agg;
    for (int n = 0; n <= 6; ++n) {
      SpectrumReport sp = spectrum_block(pool, SphereOperator::D0, 1, n);
      ok = ok && sp.pass;
      for (const auto& row : sp.rows) agg[row.eigenvalue] += row.multiplicity;
    }
    // every +(3/2+k) with k <= 6 and -(3/2+k) with k <= 5 is fully collected
    // below the degree cutoff, with multiplicity (k+1)(k+2); nothing else
    for (int k = 0; k <= 6; ++k) {
      auto it = agg.find(Rational(3 + 2 * k, 2));
      ok = ok && it != agg.end() && it->second == long(k + 1) * (k + 2);
    }
    for (int k = 0; k <= 5; ++k) {
      auto it = agg.find(Rational(-(3 + 2 * k), 2));
      ok = ok && it != agg.end() && it->second == long(k + 1) * (k + 2);
    }
    ok = ok && agg.size() == 13;
    result(4, "spin 1 first-order spectrum aggregates to +-(3/2+k) with multiplicity (k+1)(k+2)",
           ok);
  }

  {
    bool ok = true;
    long blocks = 0;
    const SphereOperator ops[5] = {
        SphereOperator::D0, SphereOperator::DplusDminus,
        SphereOperator::DminusDplus, SphereOperator::Lap,
        SphereOperator::LapTilde};
    for (SphereOperator op : ops)
      for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 6; ++n) {
          SpectrumReport sp = spectrum_block(pool, op, m, n);
          ok = ok && sp.pass;
          ++blocks;
        }
    result(5, "exact spectra with complete multiplicity accounting",
           ok, std::to_string(blocks) + " blocks");
  }

  {
    bool ok = true;
    const long expect_dplus[5] = {1, 4, 10, 20, 35};
    for (int m = 0; m <= 4; ++m) {
      KernelResult k = kernel_dimension(pool, SphereOperator::Dplus, m, m);
      ok = ok && k.certificate.all_pass() && k.dimension == expect_dplus[m];
    }
    for (int p = 0; p <= 2; ++p) {
      KernelResult k =
          kernel_dimension(pool, SphereOperator::LapTilde, 2 * p, p);
      ok = ok && k.certificate.all_pass() &&
           k.dimension == long(p + 1) * (p + 1);
    }
    for (int m : {1, 3}) {
      KernelResult k = kernel_dimension(pool, SphereOperator::D0, m, 6);
      ok = ok && k.certificate.all_pass() && k.dimension == 0;
    }
    for (int m = 1; m <= 4; ++m) {
      KernelResult k = kernel_dimension(pool, SphereOperator::Lap, m, 6);
      ok = ok && k.certificate.all_pass() && k.dimension == 0;
    }
    result(6, "kernel dimensions 1,4,10,20,35 and (p+1)^2, zero elsewhere", ok);
  }

  {
    bool ok = true;
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; n <= 6; ++n)
        ok = ok && verify_s3_identities(pool, m, n).all_pass();
    result(7, "structural identities on every block with spin <= 4, degree <= 6",
           ok);
  }

  {
    bool ok = true;
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 4; ++n)
        ok = ok && verify_adjoint_blocks(pool, m, n).all_pass();
    for (int n = 0; n <= 2; ++n) ok = ok && verify_gram(n).all_pass();
    result(8, "self-adjointness and the raise/lower adjoint pair", ok);
  }

  {
    bool ok = true;
    for (int m = 1; m <= 4; ++m)
      ok = ok && check_eigenvalue_bounds(pool, m, 6).all_pass();
    result(9, "first-eigenvalue bounds with their sharp equality cases", ok);
  }

  {
    bool ok = true;
    for (int m = 0; m <= 5; ++m) {
      TorusKernelDims t = torus_kernel_dims(m);
      ok = ok && t.certificate.all_pass() && t.dplus == m + 1;
      if (m % 2 == 1)
        ok = ok && t.d0.has_value() && *t.d0 == m + 1;
      else
        ok = ok && !t.d0.has_value();
    }
    result(10, "flat torus kernel dimensions decided by symbol ranks", ok);
  }

  if (g_failures == 0)
    std::cout << "acceptance: all criteria passed" << std::endl;
  else
    std::cout << "acceptance: " << g_failures << " criteria failed"
              << std::endl;
  return g_failures == 0 ? 0 : 1;
}
