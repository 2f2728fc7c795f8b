#include "hsd/cli_app.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hsd/cache.hpp"
#include "hsd/clifford.hpp"
#include "hsd/report.hpp"
#include "hsd/sphere.hpp"
#include "hsd/su2.hpp"

namespace hsd {
namespace {

using json = nlohmann::ordered_json;
using KV = std::vector<std::pair<std::string, std::string>>;

std::string itos(long v) { return std::to_string(v); }

// values that print as integers become json numbers; rationals like "-3/2",
// labels, and anything wider than 18 digits stay strings
bool integer_like(const std::string& s) {
  if (s.empty() || s.size() > 18) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

json kv_to_json(const KV& kv) {
  json o = json::object();
  for (const auto& [k, v] : kv) {
    if (integer_like(v))
      o[k] = std::stoll(v);
    else
      o[k] = v;
  }
  return o;
}

json report_to_json(const VerificationReport& rep) {
  json doc;
  doc["suite"] = rep.suite;
  json entries = json::array();
  for (const auto& e : rep.entries) {
    json je;
    je["id"] = e.id;
    je["params"] = kv_to_json(e.params);
    je["status"] = e.pass ? "pass" : "fail";
    je["values"] = kv_to_json(e.values);
    je["provenance"] = e.provenance;
    if (!e.pass) je["witness"] = e.witness;
    entries.push_back(std::move(je));
  }
  doc["entries"] = std::move(entries);
  doc["summary"] = json{{"pass", rep.passed()}, {"fail", rep.failed()}};
  return doc;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += "\"\"";
    else q += c;
  }
  q += '"';
  return q;
}

std::string kv_flat(const KV& kv) {
  std::string s;
  for (const auto& [k, v] : kv) {
    if (!s.empty()) s += ' ';
    s += k + "=" + v;
  }
  return s;
}

void write_csv(std::ostream& os, const VerificationReport& rep) {
  os << "suite,id,status,params,values,provenance,witness\n";
  for (const auto& e : rep.entries)
    os << csv_field(rep.suite) << ',' << csv_field(e.id) << ','
       << (e.pass ? "pass" : "fail") << ',' << csv_field(kv_flat(e.params))
       << ',' << csv_field(kv_flat(e.values)) << ','
       << csv_field(e.provenance) << ','
       << csv_field(e.pass ? std::string() : e.witness) << '\n';
  os << csv_field(rep.suite) << ",summary," << (rep.all_pass() ? "pass" : "fail")
     << ",,pass=" << rep.passed() << " fail=" << rep.failed() << ",,\n";
}

void write_text(std::ostream& os, const VerificationReport& rep) {
  for (const auto& e : rep.entries) {
    os << (e.pass ? "pass  " : "FAIL  ") << e.id;
    if (!e.params.empty()) os << " (" << kv_flat(e.params) << ")";
    if (!e.values.empty()) os << ": " << kv_flat(e.values);
    os << '\n';
    if (!e.pass && !e.witness.empty())
      os << "      witness: " << e.witness << '\n';
  }
  os << rep.suite << ": " << rep.passed() << " passed, " << rep.failed()
     << " failed\n";
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += ' ';
    s += p;
  }
  return s;
}

VerificationReport suite_cg(int m_max) {
  VerificationReport rep;
  rep.suite = "verify-cg";
  for (int m = 0; m <= m_max; ++m) rep.merge(cg_oracle_compare(m));
  return rep;
}

VerificationReport suite_equivariance(int m_max) {
  VerificationReport rep;
  rep.suite = "verify-equivariance";
  for (int m = 0; m <= m_max; ++m)
    for (const GroupElement& g : rational_unitary_test_set())
      rep.merge(verify_group_equivariance(m, g));
  return rep;
}

VerificationReport suite_s3(int m_max, int n_max, BlockCache* cache) {
  VerificationReport rep;
  rep.suite = "verify-s3";
  ContextPool pool;
  for (int m = 0; m <= m_max; ++m)
    for (int n = 0; n <= n_max; ++n)
      rep.merge(verify_s3_identities(pool, m, n, cache));
  for (int m = 0; m <= std::min(m_max, 3); ++m)
    for (int n = 0; n <= std::min(n_max, 4); ++n)
      rep.merge(verify_adjoint_blocks(pool, m, n, cache));
  for (int n = 0; n <= std::min(n_max, 2); ++n) rep.merge(verify_gram(n));
  return rep;
}

void add_spectrum_rows(VerificationReport& rep, const SpectrumReport& sp) {
  const std::string op = operator_name(sp.op);
  long total = 0;
  for (const auto& row : sp.rows) {
    CheckEntry e;
    e.id = "eigenvalue";
    e.params = {{"operator", op},
                {"m", itos(sp.m)},
                {"n", itos(sp.n)},
                {"blocks", join(row.blocks)}};
    e.pass = sp.pass;
    e.values = {{"eigenvalue", row.eigenvalue.str()},
                {"multiplicity", itos(row.multiplicity)}};
    e.provenance =
        "closed-form eigenvalue; multiplicity is the exact factor nullity of "
        "(B - lambda I) times the coefficient multiplicity";
    if (!sp.pass) e.witness = sp.witness;
    rep.add(std::move(e));
    total += row.multiplicity;
  }
  CheckEntry acc;
  acc.id = "spectrum-accounting";
  acc.params = {{"operator", op}, {"m", itos(sp.m)}, {"n", itos(sp.n)}};
  acc.pass = sp.pass;
  acc.values = {{"dimension", itos(total)},
                {"distinct-eigenvalues", itos(long(sp.rows.size()))}};
  acc.provenance =
      "multiplicities exhaust the block and the product of (B - lambda I) "
      "over all distinct eigenvalues vanishes";
  if (!sp.pass) acc.witness = sp.witness;
  rep.add(std::move(acc));
}

VerificationReport suite_spectrum(SphereOperator op, int m, int n_max,
                                  BlockCache* cache) {
  VerificationReport rep;
  rep.suite = "spectrum";
  ContextPool pool;
  for (int n = 0; n <= n_max; ++n)
    add_spectrum_rows(rep, spectrum_block(pool, op, m, n, cache));
  return rep;
}

// one rolled-up entry per (operator, m, n), used by report-all
VerificationReport suite_spectrum_summary(int m_max, int n_max,
                                          BlockCache* cache) {
  VerificationReport rep;
  rep.suite = "spectrum";
  ContextPool pool;
  const SphereOperator ops[5] = {
      SphereOperator::D0, SphereOperator::DplusDminus,
      SphereOperator::DminusDplus, SphereOperator::Lap,
      SphereOperator::LapTilde};
  for (SphereOperator op : ops)
    for (int m = 0; m <= m_max; ++m)
      for (int n = 0; n <= n_max; ++n) {
        SpectrumReport sp = spectrum_block(pool, op, m, n, cache);
        long total = 0;
        for (const auto& row : sp.rows) total += row.multiplicity;
        CheckEntry e;
        e.id = "spectrum-block";
        e.params = {{"operator", operator_name(op)},
                    {"m", itos(m)},
                    {"n", itos(n)}};
        e.pass = sp.pass;
        e.values = {{"dimension", itos(total)},
                    {"distinct-eigenvalues", itos(long(sp.rows.size()))}};
        e.provenance =
            "closed-form eigenvalues verified by exact nullities and a "
            "vanishing annihilating product";
        if (!sp.pass) e.witness = sp.witness;
        rep.add(std::move(e));
      }
  return rep;
}

VerificationReport suite_kernel(ContextPool& pool, SphereOperator op, int m,
                                int n_max, BlockCache* cache) {
  KernelResult res = kernel_dimension(pool, op, m, n_max, cache);
  VerificationReport rep = std::move(res.certificate);
  rep.suite = "kernel";
  return rep;
}

VerificationReport suite_kernel_summary(BlockCache* cache) {
  VerificationReport rep;
  rep.suite = "kernel";
  ContextPool pool;
  for (int m = 0; m <= 4; ++m)
    rep.merge(suite_kernel(pool, SphereOperator::Dplus, m, m, cache));
  for (int m : {1, 3})
    rep.merge(suite_kernel(pool, SphereOperator::D0, m, 6, cache));
  for (int m = 1; m <= 4; ++m)
    rep.merge(suite_kernel(pool, SphereOperator::Lap, m, 6, cache));
  for (int m : {0, 2, 4})
    rep.merge(suite_kernel(pool, SphereOperator::LapTilde, m, m / 2, cache));
  return rep;
}

VerificationReport suite_bounds(int m_max, int n_max, BlockCache* cache) {
  VerificationReport rep;
  rep.suite = "bounds";
  ContextPool pool;
  for (int m = 1; m <= m_max; ++m)
    rep.merge(check_eigenvalue_bounds(pool, m, n_max, cache));
  return rep;
}

VerificationReport suite_torus(int m_max) {
  VerificationReport rep;
  rep.suite = "torus";
  for (int m = 0; m <= m_max; ++m) {
    TorusKernelDims t = torus_kernel_dims(m);
    bool ok = t.certificate.all_pass();
    rep.merge(t.certificate);
    CheckEntry e;
    e.id = "torus-kernel-dimensions";
    e.params = {{"m", itos(m)}};
    e.pass = ok;
    e.values = {{"dplus", itos(t.dplus)}};
    if (t.d0)
      e.values.push_back({"d0", itos(*t.d0)});
    else
      e.values.push_back({"d0", "not-finite"});
    e.provenance =
        "on a flat torus the symbol ranks decide the kernels: an injective "
        "plus-kind symbol leaves the m+1 constants, an invertible zero-kind "
        "symbol leaves the m+1 constants, a singular one admits kernel modes "
        "in every Fourier frequency";
    rep.add(std::move(e));
  }
  return rep;
}

VerificationReport suite_report_all(BlockCache* cache) {
  VerificationReport all;
  all.suite = "report-all";
  struct Section {
    std::string name;
    VerificationReport rep;
  };
  std::vector<Section> secs;
  secs.push_back({"verify-algebra", verify_algebra(20)});
  secs.push_back({"verify-cg", suite_cg(8)});
  secs.push_back({"verify-equivariance", suite_equivariance(4)});
  secs.push_back({"verify-s3", suite_s3(4, 6, cache)});
  secs.push_back({"spectrum", suite_spectrum_summary(4, 6, cache)});
  secs.push_back({"kernel", suite_kernel_summary(cache)});
  secs.push_back({"bounds", suite_bounds(4, 6, cache)});
  secs.push_back({"torus", suite_torus(5)});
  for (auto& sec : secs) {
    for (CheckEntry e : sec.rep.entries) {
      e.params.insert(e.params.begin(), {"suite", sec.name});
      all.add(std::move(e));
    }
    CheckEntry s;
    s.id = "suite-summary";
    s.params = {{"suite", sec.name}};
    s.pass = sec.rep.all_pass();
    s.values = {{"pass", itos(sec.rep.passed())},
                {"fail", itos(sec.rep.failed())}};
    s.provenance = "per-suite rollup";
    all.add(std::move(s));
  }
  return all;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact verification of higher spin operators on the 3-sphere"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;
  std::string cache_dir;
  app.add_option("--format", format, "output format: json, csv, or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", out_path, "write the report to this file");
  app.add_option("--cache-dir", cache_dir,
                 "directory for cached operator blocks")
      ->envname("HSD_CACHE_DIR");

  int alg_m_max = 20;
  auto* sc_alg = app.add_subcommand(
      "verify-algebra", "relations and homomorphism property per spin");
  sc_alg->add_option("--m-max", alg_m_max, "largest spin")
      ->check(CLI::Range(0, 200));

  int cg_m_max = 8;
  auto* sc_cg = app.add_subcommand(
      "verify-cg", "compare the three maps against tensor decompositions");
  sc_cg->add_option("--m-max", cg_m_max, "largest spin")
      ->check(CLI::Range(0, 40));

  int eq_m_max = 4;
  auto* sc_eq = app.add_subcommand(
      "verify-equivariance", "group equivariance on a rational probe set");
  sc_eq->add_option("--m-max", eq_m_max, "largest spin")
      ->check(CLI::Range(0, 40));

  int s3_m_max = 4, s3_n_max = 6;
  auto* sc_s3 = app.add_subcommand(
      "verify-s3", "operator identities, adjointness, and gram checks");
  sc_s3->add_option("--m-max", s3_m_max, "largest spin")
      ->check(CLI::Range(0, 20));
  sc_s3->add_option("--n-max", s3_n_max, "largest coefficient degree")
      ->check(CLI::Range(0, 20));

  std::string spec_op = "d0";
  int spec_m = 0, spec_n_max = 6;
  auto* sc_spec = app.add_subcommand(
      "spectrum", "exact spectrum of one operator per coefficient degree");
  sc_spec->add_option("--operator", spec_op, "operator to diagonalize")
      ->check(CLI::IsMember(
          {"d0", "dplus-dminus", "dminus-dplus", "lap", "laptilde"}));
  sc_spec->add_option("--m", spec_m, "spin")->required()->check(
      CLI::Range(0, 20));
  sc_spec->add_option("--n-max", spec_n_max, "largest coefficient degree")
      ->check(CLI::Range(0, 20));

  std::string kern_op;
  int kern_m = 0, kern_n_max = -1;
  auto* sc_kern = app.add_subcommand(
      "kernel", "kernel dimension with a completeness certificate");
  sc_kern->add_option("--operator", kern_op, "operator")
      ->required()
      ->check(CLI::IsMember({"dplus", "d0", "lap", "laptilde"}));
  sc_kern->add_option("--m", kern_m, "spin")->required()->check(
      CLI::Range(0, 20));
  sc_kern->add_option("--n-max", kern_n_max,
                      "degree cutoff (default: the predicted requirement)")
      ->check(CLI::Range(0, 30));

  int bnd_m_max = 4, bnd_n_max = 6;
  auto* sc_bnd = app.add_subcommand(
      "bounds", "first-eigenvalue bounds and their equality cases");
  sc_bnd->add_option("--m-max", bnd_m_max, "largest spin")
      ->check(CLI::Range(1, 12));
  sc_bnd->add_option("--n-max", bnd_n_max, "largest coefficient degree")
      ->check(CLI::Range(0, 20));

  int tor_m_max = 5;
  auto* sc_tor = app.add_subcommand(
      "torus", "kernel dimensions over a flat torus via symbol ranks");
  sc_tor->add_option("--m-max", tor_m_max, "largest spin")
      ->check(CLI::Range(0, 40));

  auto* sc_all =
      app.add_subcommand("report-all", "every suite at its default ranges");

  for (CLI::App* sc : {sc_alg, sc_cg, sc_eq, sc_s3, sc_spec, sc_kern, sc_bnd,
                       sc_tor, sc_all})
    sc->fallthrough();

  try {
    // the vector overload consumes arguments from the back
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::unique_ptr<BlockCache> cache;
  if (!cache_dir.empty()) cache = std::make_unique<BlockCache>(cache_dir);
  BlockCache* cache_ptr = cache.get();

  VerificationReport rep;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (sc_alg->parsed()) {
      rep = verify_algebra(alg_m_max);
    } else if (sc_cg->parsed()) {
      rep = suite_cg(cg_m_max);
    } else if (sc_eq->parsed()) {
      rep = suite_equivariance(eq_m_max);
    } else if (sc_s3->parsed()) {
      rep = suite_s3(s3_m_max, s3_n_max, cache_ptr);
    } else if (sc_spec->parsed()) {
      auto op = operator_from_name(spec_op);
      if (!op) {
        err << "error: unknown operator " << spec_op << "\n";
        return 2;
      }
      rep = suite_spectrum(*op, spec_m, spec_n_max, cache_ptr);
    } else if (sc_kern->parsed()) {
      auto op = operator_from_name(kern_op);
      if (!op) {
        err << "error: unknown operator " << kern_op << "\n";
        return 2;
      }
      ContextPool pool;
      int n_eff = kern_n_max >= 0 ? kern_n_max : required_degree(*op, kern_m);
      rep = suite_kernel(pool, *op, kern_m, n_eff, cache_ptr);
    } else if (sc_bnd->parsed()) {
      rep = suite_bounds(bnd_m_max, bnd_n_max, cache_ptr);
    } else if (sc_tor->parsed()) {
      rep = suite_torus(tor_m_max);
    } else if (sc_all->parsed()) {
      rep = suite_report_all(cache_ptr);
    } else {
      err << "error: no subcommand selected\n";
      return 2;
    }
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    err << "internal check failed: " << ex.what() << "\n";
    return 1;
  }
  const long long wall_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - t0)
          .count();

  std::ofstream file;
  std::ostream* sink = &out;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "error: cannot open " << out_path << " for writing\n";
      return 2;
    }
    sink = &file;
  }
  if (format == "json") {
    json doc = report_to_json(rep);
    doc["wall_ms"] = wall_ms;
    *sink << doc.dump(2) << "\n";
  } else if (format == "csv") {
    write_csv(*sink, rep);
  } else {
    write_text(*sink, rep);
  }
  sink->flush();
  if (!sink->good()) {
    err << "error: failed writing output\n";
    return 2;
  }
  return rep.all_pass() ? 0 : 1;
}

}  // namespace hsd
