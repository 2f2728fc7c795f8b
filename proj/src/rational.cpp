#include "hsd/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace hsd {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  mpq_class v;
  if (v.set_str(s, 10) != 0)
    throw std::invalid_argument("Rational: malformed '" + s + "'");
  if (v.get_den() == 0)
    throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
  v.canonicalize();
  return Rational(v);
}

Rational Rational::factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

Rational Rational::binomial(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(mpq_class(b));
}

Rational Rational::pow(unsigned e) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), e);
  return Rational(mpq_class(num, den));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hsd
