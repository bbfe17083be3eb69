#include "pfcirc/tensor.hpp"

#include <bit>
#include <stdexcept>

namespace pfcirc {

bool QubitTensor::all_ket() const {
  for (Leg l : variance_)
    if (l != Leg::Ket) return false;
  return true;
}

bool QubitTensor::all_bra() const {
  for (Leg l : variance_)
    if (l != Leg::Bra) return false;
  return true;
}

bool QubitTensor::is_zero() const {
  for (const Scalar& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

QubitTensor operator+(const QubitTensor& s, const QubitTensor& t) {
  if (s.variance_ != t.variance_) throw std::invalid_argument("tensor +: variance mismatch");
  QubitTensor r(s.variance_);
  for (size_t m = 0; m < r.coeffs_.size(); m++) r.coeffs_[m] = s.coeffs_[m] + t.coeffs_[m];
  return r;
}

QubitTensor operator-(const QubitTensor& s, const QubitTensor& t) {
  if (s.variance_ != t.variance_) throw std::invalid_argument("tensor -: variance mismatch");
  QubitTensor r(s.variance_);
  for (size_t m = 0; m < r.coeffs_.size(); m++) r.coeffs_[m] = s.coeffs_[m] - t.coeffs_[m];
  return r;
}

QubitTensor operator*(const Scalar& c, const QubitTensor& t) {
  QubitTensor r(t.variance_);
  for (size_t m = 0; m < r.coeffs_.size(); m++) r.coeffs_[m] = c * t.coeffs_[m];
  return r;
}

TwoByTwo TwoByTwo::inverse() const {
  Scalar dt = det();
  if (dt.is_zero()) throw std::domain_error("TwoByTwo: singular matrix");
  Scalar inv = dt.inverse();
  return {d * inv, -(b * inv), -(c * inv), a * inv};
}

QubitTensor tensor_product(const QubitTensor& s, const QubitTensor& t) {
  std::vector<Leg> var = s.variance();
  var.insert(var.end(), t.variance().begin(), t.variance().end());
  QubitTensor r(std::move(var));
  const int ns = s.arity();
  for (uint32_t mt = 0; mt < t.coeff_count(); mt++) {
    if (t.coeff(mt).is_zero()) continue;
    for (uint32_t ms = 0; ms < s.coeff_count(); ms++) {
      if (s.coeff(ms).is_zero()) continue;
      r.coeff(ms | (mt << ns)) = s.coeff(ms) * t.coeff(mt);
    }
  }
  return r;
}

Scalar pairing(const QubitTensor& cov, const QubitTensor& vec) {
  if (!cov.all_bra() || !vec.all_ket()) throw std::invalid_argument("pairing: variance mismatch");
  if (cov.arity() != vec.arity()) throw std::invalid_argument("pairing: arity mismatch");
  Scalar sum;
  for (uint32_t m = 0; m < cov.coeff_count(); m++) sum += cov.coeff(m) * vec.coeff(m);
  return sum;
}

QubitTensor parity_projection(const QubitTensor& t, Parity parity) {
  QubitTensor r(t.variance());
  const int want = parity == Parity::Even ? 0 : 1;
  for (uint32_t m = 0; m < t.coeff_count(); m++)
    if ((std::popcount(m) & 1) == want) r.coeff(m) = t.coeff(m);
  return r;
}

QubitTensor apply_basis_change(const QubitTensor& t, std::span<const TwoByTwo> mats) {
  if (static_cast<int>(mats.size()) != t.arity())
    throw std::invalid_argument("apply_basis_change: arity mismatch");
  QubitTensor cur = t;
  for (int k = 0; k < t.arity(); k++) {
    const TwoByTwo& g = mats[k];
    const uint32_t bit = uint32_t{1} << k;
    QubitTensor next(cur.variance());
    for (uint32_t m = 0; m < cur.coeff_count(); m++) {
      if (m & bit) continue;
      const Scalar& v0 = cur.coeff(m);
      const Scalar& v1 = cur.coeff(m | bit);
      if (cur.variance()[k] == Leg::Ket) {
        next.coeff(m) = g.a * v0 + g.b * v1;
        next.coeff(m | bit) = g.c * v0 + g.d * v1;
      } else {
        next.coeff(m) = v0 * g.a + v1 * g.c;
        next.coeff(m | bit) = v0 * g.b + v1 * g.d;
      }
    }
    cur = std::move(next);
  }
  return cur;
}

QubitTensor swap_gate(Leg leg) {
  QubitTensor t = QubitTensor::zero(4, leg);
  t.coeff(0b0000) = 1;
  t.coeff(0b0101) = 1;
  t.coeff(0b1010) = 1;
  t.coeff(0b1111) = 1;
  return t;
}

std::array<Scalar, 16> flatten_coeffs(const QubitTensor& t) {
  if (t.arity() != 4) throw std::invalid_argument("flatten_coeffs: arity must be 4");
  std::array<Scalar, 16> x;
  for (uint32_t m = 0; m < 16; m++) x[m] = t.coeff(m);
  return x;
}

QubitTensor permute_legs(const QubitTensor& t, std::span<const int> src_of_new) {
  const int n = t.arity();
  if (static_cast<int>(src_of_new.size()) != n)
    throw std::invalid_argument("permute_legs: arity mismatch");
  std::vector<Leg> var(n);
  for (int k = 0; k < n; k++) var[k] = t.variance()[src_of_new[k]];
  QubitTensor r(std::move(var));
  for (uint32_t m = 0; m < t.coeff_count(); m++) {
    uint32_t nm = 0;
    for (int k = 0; k < n; k++)
      if (m & (uint32_t{1} << src_of_new[k])) nm |= uint32_t{1} << k;
    r.coeff(nm) = t.coeff(m);
  }
  return r;
}

}  // namespace pfcirc
