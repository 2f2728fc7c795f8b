// Exact rational arithmetic, GMP-backed.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace hsd {

// Arbitrary-precision rational, always in canonical form:
// lowest terms, positive denominator, 0 stored as 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT implicit: integers embed
  Rational(long num, long den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Parses "p/q" or "p" (optional leading '-'). Throws std::invalid_argument
  // on malformed input or zero denominator.
  static Rational from_string(const std::string& s);
  static Rational factorial(unsigned n);
  static Rational binomial(unsigned n, unsigned k);

  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational pow(unsigned e) const;

  // "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace hsd
