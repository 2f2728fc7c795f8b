// Polynomials in four real variables x1..x4 with ExactScalar coefficients,
// plus first-order differential operators with polynomial coefficients.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "hsd/scalar.hpp"

namespace hsd {

using Exponents = std::array<unsigned, 4>;

class Poly4 {
 public:
  Poly4() = default;

  static Poly4 constant(const ExactScalar& c);
  static Poly4 variable(unsigned j);  // x_{j+1}, j in 0..3
  static Poly4 monomial(const Exponents& e, const ExactScalar& c);

  Poly4 operator+(const Poly4& o) const;
  Poly4 operator-(const Poly4& o) const;
  Poly4 operator*(const Poly4& o) const;
  Poly4 operator-() const;
  friend Poly4 operator*(const ExactScalar& s, const Poly4& p);

  bool operator==(const Poly4& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly4& o) const { return !(*this == o); }

  bool is_zero() const { return terms_.empty(); }
  // Total degree; nullopt for the zero polynomial.
  std::optional<unsigned> degree() const;
  bool is_homogeneous(unsigned d) const;

  Poly4 derivative(unsigned j) const;  // d/dx_{j+1}
  ExactScalar coefficient(const Exponents& e) const;
  ExactScalar eval(const std::array<ExactScalar, 4>& x) const;

  // Term map keyed by exponent tuples (deterministic lexicographic order).
  const std::map<Exponents, ExactScalar>& terms() const { return terms_; }

  std::string str() const;

 private:
  std::map<Exponents, ExactScalar> terms_;  // invariant: no zero coefficients

  void add_term(const Exponents& e, const ExactScalar& c);
};

// First-order operator sum_j c_j(x) d/dx_{j+1}; coeffs[j] is c_j.
Poly4 apply_derivation(const std::array<Poly4, 4>& coeffs, const Poly4& p);

// Builds the coefficient array of sum_{j,v} mat[j][v] x_{v+1} d/dx_{j+1}
// from a 4x4 rational coefficient matrix.
std::array<Poly4, 4> derivation_from_matrix(
    const std::array<std::array<long, 4>, 4>& mat);

}  // namespace hsd
