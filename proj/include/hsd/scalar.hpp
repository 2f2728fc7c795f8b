// Complex numbers with exact rational real and imaginary parts.
#pragma once

#include <iosfwd>
#include <string>

#include "hsd/rational.hpp"

namespace hsd {

class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long n) : re_(n) {}  // NOLINT implicit: integers embed
  ExactScalar(Rational re) : re_(std::move(re)) {}  // NOLINT implicit
  ExactScalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static ExactScalar i() { return ExactScalar(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  ExactScalar operator+(const ExactScalar& o) const { return {re_ + o.re_, im_ + o.im_}; }
  ExactScalar operator-(const ExactScalar& o) const { return {re_ - o.re_, im_ - o.im_}; }
  ExactScalar operator-() const { return {-re_, -im_}; }
  ExactScalar operator*(const ExactScalar& o) const {
    return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
  }
  ExactScalar operator/(const ExactScalar& o) const;

  ExactScalar& operator+=(const ExactScalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  ExactScalar& operator-=(const ExactScalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }

  bool operator==(const ExactScalar& o) const { return re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const ExactScalar& o) const { return !(*this == o); }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  ExactScalar conj() const { return {re_, -im_}; }
  Rational abs2() const { return re_ * re_ + im_ * im_; }
  ExactScalar inv() const;

  // "a", "bi", or "a+bi" / "a-bi"; exact rational parts.
  std::string str() const;

 private:
  Rational re_, im_;
};

inline ExactScalar operator*(const Rational& r, const ExactScalar& s) {
  return ExactScalar(r) * s;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& s);

}  // namespace hsd
