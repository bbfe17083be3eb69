#include "pfcirc/poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pfcirc {

namespace {

int degree_of(const PolyQ::Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

}  // namespace

bool PolyQ::GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  int da = degree_of(a), db = degree_of(b);
  if (da != db) return da < db;
  return a < b;
}

PolyQ PolyQ::constant(int nvars, Rational c) {
  PolyQ p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

PolyQ PolyQ::variable(int nvars, int index) {
  PolyQ p(nvars);
  Exponents e(nvars, 0);
  e.at(index) = 1;
  p.add_term(e, 1);
  return p;
}

PolyQ PolyQ::monomial(int nvars, Exponents e, Rational c) {
  if (static_cast<int>(e.size()) != nvars) throw std::invalid_argument("PolyQ: exponent size");
  PolyQ p(nvars);
  p.add_term(e, c);
  return p;
}

int PolyQ::total_degree() const {
  int deg = 0;
  for (const auto& [e, c] : terms_) deg = std::max(deg, degree_of(e));
  return deg;
}

bool PolyQ::even_graded() const {
  for (const auto& [e, c] : terms_)
    if (degree_of(e) % 2) return false;
  return true;
}

void PolyQ::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("PolyQ: exponent size mismatch");
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PolyQ operator+(const PolyQ& x, const PolyQ& y) {
  if (x.nvars_ != y.nvars_) throw std::invalid_argument("PolyQ +: nvars mismatch");
  PolyQ r = x;
  for (const auto& [e, c] : y.terms_) r.add_term(e, c);
  return r;
}

PolyQ operator-(const PolyQ& x, const PolyQ& y) {
  if (x.nvars_ != y.nvars_) throw std::invalid_argument("PolyQ -: nvars mismatch");
  PolyQ r = x;
  for (const auto& [e, c] : y.terms_) r.add_term(e, -c);
  return r;
}

PolyQ operator*(const PolyQ& x, const PolyQ& y) {
  if (x.nvars_ != y.nvars_) throw std::invalid_argument("PolyQ *: nvars mismatch");
  PolyQ r(x.nvars_);
  PolyQ::Exponents e(x.nvars_);
  for (const auto& [ex, cx] : x.terms_)
    for (const auto& [ey, cy] : y.terms_) {
      for (int k = 0; k < x.nvars_; k++) e[k] = static_cast<uint16_t>(ex[k] + ey[k]);
      r.add_term(e, cx * cy);
    }
  return r;
}

PolyQ PolyQ::operator-() const {
  PolyQ r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

PolyQ PolyQ::scaled(const Rational& c) const {
  PolyQ r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
  return r;
}

Rational PolyQ::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("PolyQ::evaluate: wrong point size");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int k = 0; k < nvars_; k++)
      for (int p = 0; p < e[k]; p++) term *= point[k];
    sum += term;
  }
  return sum;
}

PolyQ PolyQ::substitute_zero(int var) const {
  PolyQ r(nvars_);
  for (const auto& [e, c] : terms_)
    if (e.at(var) == 0) r.terms_.emplace(e, c);
  return r;
}

std::pair<PolyQ, PolyQ> PolyQ::split_by_variable(int var) const {
  PolyQ quotient(nvars_), rest(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e.at(var) == 0) {
      rest.terms_.emplace(e, c);
    } else {
      Exponents q = e;
      q[var]--;
      quotient.terms_.emplace(std::move(q), c);
    }
  }
  return {std::move(quotient), std::move(rest)};
}

std::string PolyQ::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print highest degree first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_var = false;
    for (int k = 0; k < nvars_; k++) has_var = has_var || e[k] > 0;
    if (mag != 1 || !has_var) os << mag.str();
    bool star = mag != 1 || !has_var;
    for (int k = 0; k < nvars_; k++) {
      if (e[k] == 0) continue;
      if (star) os << "*";
      os << "x" << (k + 1);
      if (e[k] > 1) os << "^" << e[k];
      star = true;
    }
  }
  return os.str();
}

}  // namespace pfcirc
