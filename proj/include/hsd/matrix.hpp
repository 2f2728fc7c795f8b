// Dense matrices over ExactScalar with exact linear algebra.
//
// Matrices are immutable value types: build them with the static
// constructors, every operation returns a fresh value. Zero-dimensional
// shapes (0xk, kx0) are legal and behave as maps to/from the zero space.
//
// Elimination pivot rule (fixed, so ranks/nullspaces/solutions are
// deterministic): columns are scanned left to right; the pivot for a column
// is the lowest-index unused row with a nonzero entry. Nullspace basis
// vectors are emitted in ascending free-column order, each with a unit
// free coordinate.
#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "hsd/scalar.hpp"

namespace hsd {

class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix diagonal(const std::vector<ExactScalar>& d);
  static ExactMatrix from_rows(std::initializer_list<std::initializer_list<ExactScalar>> rows);
  static ExactMatrix from_fn(std::size_t rows, std::size_t cols,
                             const std::function<ExactScalar(std::size_t, std::size_t)>& f);
  // Single-column matrix from a vector of entries.
  static ExactMatrix column(const std::vector<ExactScalar>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const ExactScalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  const ExactScalar& operator()(std::size_t r, std::size_t c) const { return at(r, c); }

  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator-() const;
  friend ExactMatrix operator*(const ExactScalar& s, const ExactMatrix& m);

  bool operator==(const ExactMatrix& o) const;
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

  ExactMatrix transpose() const;
  ExactMatrix conj_transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  std::string str() const;  // human-readable, for failure messages

 private:
  std::size_t rows_, cols_;
  std::vector<ExactScalar> a_;

  ExactScalar& mut(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

  friend ExactMatrix kron(const ExactMatrix&, const ExactMatrix&);
  friend class RowReducer;
};

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

std::size_t rank(const ExactMatrix& a);
std::size_t nullity(const ExactMatrix& a);
// Basis of {v : Av = 0}, one column per vector; empty vector if trivial.
std::vector<ExactMatrix> nullspace(const ExactMatrix& a);
ExactScalar determinant(const ExactMatrix& a);
std::optional<ExactMatrix> inverse(const ExactMatrix& a);
// Solves A X = B exactly. nullopt when inconsistent; when the system is
// underdetermined, returns the solution with free variables set to zero.
std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b);

// Adjoint of A : (src, G_src) -> (dst, G_dst) for the pairings <u,v> = v* G u:
// A† = G_src^{-1} A* G_dst. Throws std::invalid_argument when a Gram matrix
// is singular (malformed basis).
ExactMatrix gram_adjoint(const ExactMatrix& a, const ExactMatrix& g_src,
                         const ExactMatrix& g_dst);

}  // namespace hsd
