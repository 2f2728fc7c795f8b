// Shared result type for verification suites.
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hsd {

// One checked identity. `params` and `values` are ordered key/value lists so
// serialized output is deterministic. `provenance` states the law being
// checked in mathematical terms. `witness` is empty unless the check failed,
// in which case it pinpoints the offending inputs / residual.
struct CheckEntry {
  std::string id;
  std::vector<std::pair<std::string, std::string>> params;
  bool pass = false;
  std::vector<std::pair<std::string, std::string>> values;
  std::string provenance;
  std::string witness;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckEntry> entries;

  int passed() const {
    int n = 0;
    for (const auto& e : entries) n += e.pass ? 1 : 0;
    return n;
  }
  int failed() const { return int(entries.size()) - passed(); }
  bool all_pass() const { return failed() == 0; }

  void add(CheckEntry e) { entries.push_back(std::move(e)); }
  void merge(const VerificationReport& o) {
    entries.insert(entries.end(), o.entries.begin(), o.entries.end());
  }
};

}  // namespace hsd
