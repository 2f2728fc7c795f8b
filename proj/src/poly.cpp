#include "hsd/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace hsd {

void Poly4::add_term(const Exponents& e, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly4 Poly4::constant(const ExactScalar& c) {
  Poly4 p;
  p.add_term({0, 0, 0, 0}, c);
  return p;
}

Poly4 Poly4::variable(unsigned j) {
  if (j > 3) throw std::invalid_argument("Poly4: variable index out of range");
  Exponents e{0, 0, 0, 0};
  e[j] = 1;
  Poly4 p;
  p.add_term(e, ExactScalar(1));
  return p;
}

Poly4 Poly4::monomial(const Exponents& e, const ExactScalar& c) {
  Poly4 p;
  p.add_term(e, c);
  return p;
}

Poly4 Poly4::operator+(const Poly4& o) const {
  Poly4 p = *this;
  for (const auto& [e, c] : o.terms_) p.add_term(e, c);
  return p;
}

Poly4 Poly4::operator-(const Poly4& o) const {
  Poly4 p = *this;
  for (const auto& [e, c] : o.terms_) p.add_term(e, -c);
  return p;
}

Poly4 Poly4::operator-() const {
  Poly4 p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

Poly4 Poly4::operator*(const Poly4& o) const {
  Poly4 p;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]};
      p.add_term(e, c1 * c2);
    }
  return p;
}

Poly4 operator*(const ExactScalar& s, const Poly4& p) {
  Poly4 q;
  if (s.is_zero()) return q;
  for (const auto& [e, c] : p.terms_) q.terms_.emplace(e, s * c);
  return q;
}

std::optional<unsigned> Poly4::degree() const {
  if (terms_.empty()) return std::nullopt;
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
  return d;
}

bool Poly4::is_homogeneous(unsigned d) const {
  for (const auto& [e, c] : terms_)
    if (e[0] + e[1] + e[2] + e[3] != d) return false;
  return true;
}

Poly4 Poly4::derivative(unsigned j) const {
  if (j > 3) throw std::invalid_argument("Poly4: variable index out of range");
  Poly4 p;
  for (const auto& [e, c] : terms_) {
    if (e[j] == 0) continue;
    Exponents d = e;
    d[j] -= 1;
    p.add_term(d, ExactScalar(Rational(long(e[j]))) * c);
  }
  return p;
}

ExactScalar Poly4::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? ExactScalar(0) : it->second;
}

ExactScalar Poly4::eval(const std::array<ExactScalar, 4>& x) const {
  ExactScalar acc(0);
  for (const auto& [e, c] : terms_) {
    ExactScalar t = c;
    for (unsigned j = 0; j < 4; ++j)
      for (unsigned k = 0; k < e[j]; ++k) t *= x[j];
    acc += t;
  }
  return acc;
}

std::string Poly4::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (unsigned j = 0; j < 4; ++j) {
      if (e[j] == 0) continue;
      os << "*x" << (j + 1);
      if (e[j] > 1) os << "^" << e[j];
    }
  }
  return os.str();
}

Poly4 apply_derivation(const std::array<Poly4, 4>& coeffs, const Poly4& p) {
  Poly4 out;
  for (unsigned j = 0; j < 4; ++j) {
    if (coeffs[j].is_zero()) continue;
    out = out + coeffs[j] * p.derivative(j);
  }
  return out;
}

std::array<Poly4, 4> derivation_from_matrix(
    const std::array<std::array<long, 4>, 4>& mat) {
  std::array<Poly4, 4> coeffs;
  for (unsigned j = 0; j < 4; ++j)
    for (unsigned v = 0; v < 4; ++v)
      if (mat[j][v] != 0)
        coeffs[j] = coeffs[j] + ExactScalar(Rational(mat[j][v])) * Poly4::variable(v);
  return coeffs;
}

}  // namespace hsd
