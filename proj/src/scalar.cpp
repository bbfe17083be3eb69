#include "pfcirc/scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace pfcirc {

namespace {

// Q(sqrt2) helpers on (rational, sqrt2-coefficient) pairs.
struct Rt2 {
  Rational a, b;  // a + b*sqrt2
};

Rt2 mul(const Rt2& x, const Rt2& y) {
  return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
}

Rt2 add(const Rt2& x, const Rt2& y) { return {x.a + y.a, x.b + y.b}; }
Rt2 sub(const Rt2& x, const Rt2& y) { return {x.a - y.a, x.b - y.b}; }

Rt2 inv(const Rt2& x) {
  // (a - b*sqrt2) / (a^2 - 2 b^2); the norm vanishes only at zero since
  // sqrt2 is irrational.
  Rational norm = x.a * x.a - 2 * x.b * x.b;
  return {x.a / norm, -x.b / norm};
}

}  // namespace

Scalar operator*(const Scalar& x, const Scalar& y) {
  if (x.is_rational() && y.is_rational()) return Scalar(x.p_ * y.p_);
  Rt2 xr{x.p_, x.q_}, xi{x.r_, x.s_};
  Rt2 yr{y.p_, y.q_}, yi{y.r_, y.s_};
  Rt2 re = sub(mul(xr, yr), mul(xi, yi));
  Rt2 im = add(mul(xr, yi), mul(xi, yr));
  return Scalar(re.a, re.b, im.a, im.b);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: division by zero");
  Rt2 re{p_, q_}, im{r_, s_};
  // 1/(A + Bi) = (A - Bi) / (A^2 + B^2), all in Q(sqrt2).
  Rt2 norm = add(mul(re, re), mul(im, im));
  Rt2 ninv = inv(norm);
  Rt2 ra = mul(re, ninv);
  Rt2 rb = mul(im, ninv);
  return Scalar(ra.a, ra.b, -rb.a, -rb.b);
}

std::complex<double> Scalar::to_complex() const {
  static const double kSqrt2 = std::sqrt(2.0);
  return {to_double(p_) + to_double(q_) * kSqrt2,
          to_double(r_) + to_double(s_) * kSqrt2};
}

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  struct Term {
    const Rational* coef;
    const char* sym;
  };
  const Term terms[] = {{&p_, ""}, {&q_, "sqrt2"}, {&r_, "i"}, {&s_, "i*sqrt2"}};
  std::string out;
  for (const auto& [coef, sym] : terms) {
    if (*coef == 0) continue;
    Rational c = *coef;
    if (out.empty()) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    if (*sym == '\0') {
      out += c.str();
    } else if (c == 1) {
      out += sym;
    } else {
      out += c.str();
      out += "*";
      out += sym;
    }
  }
  return out;
}

namespace {

void skip_ws(std::string_view& s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
}

bool eat(std::string_view& s, std::string_view tok) {
  if (s.substr(0, tok.size()) == tok) {
    s.remove_prefix(tok.size());
    return true;
  }
  return false;
}

Rational parse_rational(std::string_view& s) {
  size_t n = 0;
  while (n < s.size() && (std::isdigit(static_cast<unsigned char>(s[n])) || s[n] == '/')) n++;
  if (n == 0) throw std::invalid_argument("Scalar::parse: expected number");
  Rational r{std::string(s.substr(0, n))};
  s.remove_prefix(n);
  return r;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  std::string_view s = text;
  skip_ws(s);
  if (s.empty()) throw std::invalid_argument("Scalar::parse: empty input");
  Rational coord[4];  // 1, sqrt2, i, i*sqrt2
  bool first = true;
  while (true) {
    skip_ws(s);
    if (s.empty()) break;
    bool neg = false;
    if (eat(s, "-")) {
      neg = true;
    } else if (eat(s, "+")) {
      if (first) throw std::invalid_argument("Scalar::parse: leading '+'");
    } else if (!first) {
      throw std::invalid_argument("Scalar::parse: expected '+' or '-'");
    }
    skip_ws(s);
    Rational mag = 1;
    bool have_num = !s.empty() && std::isdigit(static_cast<unsigned char>(s.front()));
    if (have_num) mag = parse_rational(s);
    int slot = 0;
    if (have_num && !eat(s, "*")) {
      slot = 0;  // bare rational
    } else if (eat(s, "i*sqrt2")) {
      slot = 3;
    } else if (eat(s, "i")) {
      slot = 2;
      if (eat(s, "*")) {
        if (!eat(s, "sqrt2")) throw std::invalid_argument("Scalar::parse: bad term");
        slot = 3;
      }
    } else if (eat(s, "sqrt2")) {
      slot = 1;
    } else if (!have_num) {
      throw std::invalid_argument("Scalar::parse: bad term");
    }
    coord[slot] += neg ? -mag : mag;
    first = false;
  }
  if (first) throw std::invalid_argument("Scalar::parse: no terms");
  return Scalar(coord[0], coord[1], coord[2], coord[3]);
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

}  // namespace pfcirc
