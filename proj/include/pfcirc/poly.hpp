#pragma once

#include "pfcirc/rational.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pfcirc {

// Sparse multivariate polynomial over Q; terms ordered graded-lex for
// deterministic iteration.  No zero coefficients are stored.
class PolyQ {
 public:
  using Exponents = std::vector<uint16_t>;

  struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  PolyQ() = default;
  explicit PolyQ(int nvars) : nvars_(nvars) {}
  static PolyQ constant(int nvars, Rational c);
  static PolyQ variable(int nvars, int index);
  static PolyQ monomial(int nvars, Exponents e, Rational c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  const TermMap& terms() const { return terms_; }

  // True when every term has even total degree (constants included).
  bool even_graded() const;

  void add_term(const Exponents& e, const Rational& c);

  friend PolyQ operator+(const PolyQ& x, const PolyQ& y);
  friend PolyQ operator-(const PolyQ& x, const PolyQ& y);
  friend PolyQ operator*(const PolyQ& x, const PolyQ& y);
  PolyQ operator-() const;
  PolyQ scaled(const Rational& c) const;

  friend bool operator==(const PolyQ&, const PolyQ&) = default;

  Rational evaluate(std::span<const Rational> point) const;

  // Terms containing the variable dropped (substituting it by zero).
  PolyQ substitute_zero(int var) const;

  // poly = x_var * quotient + rest, with rest free of x_var.
  std::pair<PolyQ, PolyQ> split_by_variable(int var) const;

  std::string to_string() const;  // variables render as x1..xn

 private:
  int nvars_ = 0;
  TermMap terms_;
};

}  // namespace pfcirc
