// Optional on-disk cache for assembled operator blocks.
#pragma once

#include <optional>
#include <string>

#include "hsd/sphere.hpp"

namespace hsd {

// One JSON document per (operator, m, n) under the cache directory, keyed by
// a format-version string. Reads validate the version, the identifying
// fields, and every dimension before trusting the payload; anything missing
// or malformed is treated as a miss so the block is recomputed.
class BlockCache {
 public:
  explicit BlockCache(std::string dir);

  static const char* format_version();

  std::optional<OperatorBlock> load(SphereOperator op, int m, int n) const;
  void store(const OperatorBlock& blk) const;

  const std::string& dir() const { return dir_; }

 private:
  std::string path_for(SphereOperator op, int m, int n) const;
  std::string dir_;
};

}  // namespace hsd
