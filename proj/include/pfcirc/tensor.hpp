#pragma once

#include "pfcirc/scalar.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace pfcirc {

enum class Leg : uint8_t { Ket, Bra };
enum class Parity : uint8_t { Even, Odd };

// Dense tensor with two-dimensional legs, each covariant (bra) or
// contravariant (ket).  Coefficients are indexed by subsets of [n]:
// bit k of the mask corresponds to leg k+1, so |I> has mask bits set
// exactly at the positions in I.
class QubitTensor {
 public:
  QubitTensor() : variance_(), coeffs_(1) {}
  explicit QubitTensor(std::vector<Leg> variance)
      : variance_(std::move(variance)), coeffs_(size_t{1} << variance_.size()) {}

  static QubitTensor scalar(Scalar v) {
    QubitTensor t;
    t.coeffs_[0] = std::move(v);
    return t;
  }
  static QubitTensor zero(int arity, Leg leg) {
    return QubitTensor(std::vector<Leg>(arity, leg));
  }
  // Basis (co)vector |bits> / <bits| given as a mask.
  static QubitTensor basis(int arity, Leg leg, uint32_t mask) {
    QubitTensor t = zero(arity, leg);
    t.coeff(mask) = 1;
    return t;
  }

  int arity() const { return static_cast<int>(variance_.size()); }
  const std::vector<Leg>& variance() const { return variance_; }
  bool all_ket() const;
  bool all_bra() const;

  Scalar& coeff(uint32_t mask) { return coeffs_.at(mask); }
  const Scalar& coeff(uint32_t mask) const { return coeffs_.at(mask); }
  size_t coeff_count() const { return coeffs_.size(); }

  bool is_zero() const;

  friend bool operator==(const QubitTensor&, const QubitTensor&) = default;

  friend QubitTensor operator+(const QubitTensor& s, const QubitTensor& t);
  friend QubitTensor operator-(const QubitTensor& s, const QubitTensor& t);
  friend QubitTensor operator*(const Scalar& c, const QubitTensor& t);

 private:
  std::vector<Leg> variance_;
  std::vector<Scalar> coeffs_;
};

struct TwoByTwo {
  Scalar a, b, c, d;  // rows (a b; c d)

  static TwoByTwo identity() { return {1, 0, 0, 1}; }

  Scalar det() const { return a * d - b * c; }
  TwoByTwo inverse() const;

  friend TwoByTwo operator*(const TwoByTwo& x, const TwoByTwo& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const TwoByTwo&, const TwoByTwo&) = default;
};

// Concatenates legs: s's legs come first, then t's.
QubitTensor tensor_product(const QubitTensor& s, const QubitTensor& t);

// Full pairing of a covector against a vector of the same arity.
Scalar pairing(const QubitTensor& cov, const QubitTensor& vec);

// Zeroes out coefficients whose index set has the opposite parity.
QubitTensor parity_projection(const QubitTensor& t, Parity parity);

// Multilinear per-leg action: ket legs are mapped by v -> g v, bra legs by
// w -> w o g, with exactly the matrices supplied (no implicit inversion).
QubitTensor apply_basis_change(const QubitTensor& t, std::span<const TwoByTwo> mats);

// The wire-exchange tensor |0000>+|0101>+|1010>+|1111| (or its bra form).
QubitTensor swap_gate(Leg leg);

// x_1..x_16 of the degree-16 coordinate ring: x_{1+mask} = coeff(mask).
std::array<Scalar, 16> flatten_coeffs(const QubitTensor& t);

// Leg permutation: new leg k carries what old leg src_of_new[k] carried.
QubitTensor permute_legs(const QubitTensor& t, std::span<const int> src_of_new);

}  // namespace pfcirc
