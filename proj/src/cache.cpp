#include "hsd/cache.hpp"

#include <filesystem>
#include <fstream>

#include "json.hpp"

namespace hsd {

namespace {
using json = nlohmann::ordered_json;

json scalar_to_json(const ExactScalar& s) {
  return json{{"re", s.re().str()}, {"im", s.im().str()}};
}

ExactScalar scalar_from_json(const json& j) {
  return ExactScalar(Rational::from_string(j.at("re").get<std::string>()),
                     Rational::from_string(j.at("im").get<std::string>()));
}

json matrix_to_json(const ExactMatrix& m) {
  json entries = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      entries.push_back(scalar_to_json(m.at(r, c)));
  return entries;
}

ExactMatrix matrix_from_json(const json& entries, std::size_t rows,
                             std::size_t cols) {
  if (!entries.is_array() || entries.size() != rows * cols)
    throw std::invalid_argument("cache: entry count does not match the shape");
  return ExactMatrix::from_fn(rows, cols, [&](std::size_t r, std::size_t c) {
    return scalar_from_json(entries.at(r * cols + c));
  });
}
}  // namespace

BlockCache::BlockCache(std::string dir) : dir_(std::move(dir)) {}

const char* BlockCache::format_version() { return "hsd-block-v1"; }

std::string BlockCache::path_for(SphereOperator op, int m, int n) const {
  return dir_ + "/" + operator_name(op) + "-m" + std::to_string(m) + "-n" +
         std::to_string(n) + ".json";
}

std::optional<OperatorBlock> BlockCache::load(SphereOperator op, int m,
                                              int n) const {
  try {
    std::ifstream in(path_for(op, m, n));
    if (!in) return std::nullopt;
    const json doc = json::parse(in);
    if (doc.at("format").get<std::string>() != format_version())
      return std::nullopt;
    if (doc.at("operator").get<std::string>() != operator_name(op) ||
        doc.at("m").get<int>() != m || doc.at("n").get<int>() != n)
      return std::nullopt;
    const int target = operator_target_spin(op, m);
    const std::size_t q = std::size_t(n + 1);
    const std::size_t rows = q * q * std::size_t(rep_dim(target));
    const std::size_t cols = q * q * std::size_t(rep_dim(m));
    const std::size_t frows = q * std::size_t(rep_dim(target));
    const std::size_t fcols = q * std::size_t(rep_dim(m));
    if (doc.at("rows").get<std::size_t>() != rows ||
        doc.at("cols").get<std::size_t>() != cols ||
        doc.at("factor_rows").get<std::size_t>() != frows ||
        doc.at("factor_cols").get<std::size_t>() != fcols ||
        doc.at("multiplicity").get<long>() != long(n + 1))
      return std::nullopt;
    OperatorBlock blk;
    blk.op = op;
    blk.m = m;
    blk.target_m = target;
    blk.n = n;
    blk.multiplicity = n + 1;
    blk.matrix = matrix_from_json(doc.at("entries"), rows, cols);
    blk.factor = matrix_from_json(doc.at("factor_entries"), frows, fcols);
    return blk;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void BlockCache::store(const OperatorBlock& blk) const {
  try {
    std::filesystem::create_directories(dir_);
    json doc;
    doc["format"] = format_version();
    doc["operator"] = operator_name(blk.op);
    doc["m"] = blk.m;
    doc["n"] = blk.n;
    doc["rows"] = blk.matrix.rows();
    doc["cols"] = blk.matrix.cols();
    doc["factor_rows"] = blk.factor.rows();
    doc["factor_cols"] = blk.factor.cols();
    doc["multiplicity"] = blk.multiplicity;
    doc["entries"] = matrix_to_json(blk.matrix);
    doc["factor_entries"] = matrix_to_json(blk.factor);
    std::ofstream out(path_for(blk.op, blk.m, blk.n));
    if (out) out << doc.dump() << "\n";
  } catch (const std::exception&) {
    // the cache is best-effort; a failed write only costs a recompute later
  }
}

}  // namespace hsd
