#pragma once

#include "pfcirc/rational.hpp"

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>

namespace pfcirc {

// Exact element of Q(sqrt2, i), stored as  p + q*sqrt2 + r*i + s*i*sqrt2
// with rational coordinates.  {1, sqrt2, i, i*sqrt2} is a Q-basis, so
// equality and zero-testing are coordinate-wise and exact.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : p_(v) {}  // NOLINT: implicit for numeric literals
  Scalar(Rational v) : p_(std::move(v)) {}
  Scalar(Rational p, Rational q, Rational r, Rational s)
      : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), s_(std::move(s)) {}

  static Scalar sqrt2() { return Scalar(0, 1, 0, 0); }
  static Scalar i() { return Scalar(0, 0, 1, 0); }
  static Scalar inv_sqrt2() { return Scalar(0, Rational(1, 2), 0, 0); }

  const Rational& rat_part() const { return p_; }
  const Rational& sqrt2_part() const { return q_; }
  const Rational& i_part() const { return r_; }
  const Rational& i_sqrt2_part() const { return s_; }

  bool is_zero() const { return p_ == 0 && q_ == 0 && r_ == 0 && s_ == 0; }
  bool is_one() const { return p_ == 1 && q_ == 0 && r_ == 0 && s_ == 0; }
  // True when the element lies in Q (no sqrt2 or imaginary part).
  bool is_rational() const { return q_ == 0 && r_ == 0 && s_ == 0; }

  friend bool operator==(const Scalar&, const Scalar&) = default;

  friend Scalar operator+(const Scalar& x, const Scalar& y) {
    return Scalar(x.p_ + y.p_, x.q_ + y.q_, x.r_ + y.r_, x.s_ + y.s_);
  }
  friend Scalar operator-(const Scalar& x, const Scalar& y) {
    return Scalar(x.p_ - y.p_, x.q_ - y.q_, x.r_ - y.r_, x.s_ - y.s_);
  }
  friend Scalar operator-(const Scalar& x) {
    return Scalar(-x.p_, -x.q_, -x.r_, -x.s_);
  }
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

  // Multiplicative inverse; throws std::domain_error on zero.
  Scalar inverse() const;

  std::complex<double> to_complex() const;

  // Canonical text form, e.g. "1/2 - 3*sqrt2 + i*sqrt2"; "0" for zero.
  // parse() accepts exactly what to_string emits plus whitespace slack,
  // and round-trips bit-exactly.
  std::string to_string() const;
  static Scalar parse(std::string_view text);

 private:
  Rational p_, q_, r_, s_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace pfcirc
