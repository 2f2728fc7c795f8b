#include "hsd/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace hsd {

ExactScalar ExactScalar::inv() const {
  Rational n = abs2();
  if (n.is_zero()) throw std::invalid_argument("ExactScalar: division by zero");
  return {re_ / n, -im_ / n};
}

ExactScalar ExactScalar::operator/(const ExactScalar& o) const { return *this * o.inv(); }

std::string ExactScalar::str() const {
  if (im_.is_zero()) return re_.str();
  std::string im = im_.str() + "i";
  if (re_.is_zero()) return im;
  return re_.str() + (im_.sign() < 0 ? "" : "+") + im;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& s) { return os << s.str(); }

}  // namespace hsd
