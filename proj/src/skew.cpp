#include "pfcirc/skew.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace pfcirc {

namespace {

void check_labels(const std::vector<int>& labels) {
  for (size_t k = 0; k < labels.size(); k++) {
    if (labels[k] < 1) throw std::invalid_argument("SkewMatrix: labels must be positive");
    if (k > 0 && labels[k] <= labels[k - 1])
      throw std::invalid_argument("SkewMatrix: labels must be strictly increasing");
  }
}

}  // namespace

SkewMatrix::SkewMatrix(std::vector<int> labels) : labels_(std::move(labels)) {
  check_labels(labels_);
  m_.assign(labels_.size() * labels_.size(), Scalar());
}

SkewMatrix SkewMatrix::zero(int n) {
  std::vector<int> labels(n);
  for (int k = 0; k < n; k++) labels[k] = k + 1;
  return SkewMatrix(std::move(labels));
}

SkewMatrix SkewMatrix::from_upper(std::vector<int> labels,
                                  const std::vector<std::tuple<int, int, Scalar>>& upper) {
  SkewMatrix m(std::move(labels));
  for (const auto& [li, lj, v] : upper) {
    auto pos = [&](int label) {
      auto it = std::lower_bound(m.labels_.begin(), m.labels_.end(), label);
      if (it == m.labels_.end() || *it != label)
        throw std::invalid_argument("SkewMatrix: unknown label in entry list");
      return static_cast<int>(it - m.labels_.begin());
    };
    int i = pos(li), j = pos(lj);
    if (i >= j) throw std::invalid_argument("SkewMatrix: entries must be strictly upper");
    m.set(i, j, v);
  }
  return m;
}

size_t SkewMatrix::idx(int i, int j) const {
  if (i < 0 || j < 0 || i >= size() || j >= size())
    throw std::out_of_range("SkewMatrix: index out of range");
  return static_cast<size_t>(i) * size() + j;
}

void SkewMatrix::set(int i, int j, const Scalar& v) {
  if (i == j) {
    if (!v.is_zero()) throw std::invalid_argument("SkewMatrix: nonzero diagonal");
    return;
  }
  m_[idx(i, j)] = v;
  m_[idx(j, i)] = -v;
}

SkewMatrix operator+(const SkewMatrix& x, const SkewMatrix& y) {
  if (x.labels_ != y.labels_) throw std::invalid_argument("SkewMatrix +: label mismatch");
  SkewMatrix r(x.labels_);
  for (size_t k = 0; k < r.m_.size(); k++) r.m_[k] = x.m_[k] + y.m_[k];
  return r;
}

namespace {

// Expansion along the first row of the submatrix selected by `mask`,
// memoized over masks.  Pf(empty) = 1, odd-size masks give 0.
Scalar pf_expand(const SkewMatrix& m, uint32_t mask, std::vector<Scalar>& memo,
                 std::vector<bool>& have) {
  if (mask == 0) return Scalar(1);
  if (std::popcount(mask) & 1) return Scalar();
  if (have[mask]) return memo[mask];
  int first = std::countr_zero(mask);
  Scalar sum;
  int t = 1;  // position within the submatrix, 1-based
  for (uint32_t rest = mask & (mask - 1); rest; rest &= rest - 1) {
    t++;
    int j = std::countr_zero(rest);
    const Scalar& entry = m.at(first, j);
    if (!entry.is_zero()) {
      Scalar sub = pf_expand(m, mask & ~(uint32_t{1} << first) & ~(uint32_t{1} << j), memo, have);
      if (!sub.is_zero()) {
        Scalar term = entry * sub;
        sum += (t & 1) ? -term : term;
      }
    }
  }
  have[mask] = true;
  memo[mask] = sum;
  return sum;
}

// Congruence elimination: exact over the field, O(n^3).
Scalar pf_eliminate(const SkewMatrix& m) {
  const int n = m.size();
  if (n % 2) return Scalar();
  std::vector<Scalar> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) a[static_cast<size_t>(i) * n + j] = m.at(i, j);
  auto at = [&](int i, int j) -> Scalar& { return a[static_cast<size_t>(i) * n + j]; };

  bool negate = false;
  Scalar result(1);
  for (int k = 0; k + 1 < n; k += 2) {
    int piv = -1;
    for (int j = k + 1; j < n; j++)
      if (!at(k, j).is_zero()) {
        piv = j;
        break;
      }
    if (piv < 0) return Scalar();
    if (piv != k + 1) {
      for (int c = 0; c < n; c++) std::swap(at(piv, c), at(k + 1, c));
      for (int r = 0; r < n; r++) std::swap(at(r, piv), at(r, k + 1));
      negate = !negate;
    }
    Scalar pivot = at(k, k + 1);
    Scalar pinv = pivot.inverse();
    for (int i = k + 2; i < n; i++) {
      if (at(k, i).is_zero()) continue;
      Scalar f = at(k, i) * pinv;
      for (int r = 0; r < n; r++) at(r, i) -= f * at(r, k + 1);
      for (int c = 0; c < n; c++) at(i, c) -= f * at(k + 1, c);
    }
    result *= pivot;
  }
  return negate ? -result : result;
}

}  // namespace

Scalar pfaffian(const SkewMatrix& m) {
  const int n = m.size();
  if (n % 2) return Scalar();
  if (n == 0) return Scalar(1);
  if (n <= 12) {
    std::vector<Scalar> memo(size_t{1} << n);
    std::vector<bool> have(size_t{1} << n, false);
    return pf_expand(m, (uint32_t{1} << n) - 1, memo, have);
  }
  return pf_eliminate(m);
}

Scalar determinant(const SkewMatrix& m) {
  const int n = m.size();
  std::vector<Scalar> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) a[static_cast<size_t>(i) * n + j] = m.at(i, j);
  auto at = [&](int i, int j) -> Scalar& { return a[static_cast<size_t>(i) * n + j]; };

  bool negate = false;
  Scalar det(1);
  for (int k = 0; k < n; k++) {
    int piv = -1;
    for (int i = k; i < n; i++)
      if (!at(i, k).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return Scalar();
    if (piv != k) {
      for (int c = 0; c < n; c++) std::swap(at(piv, c), at(k, c));
      negate = !negate;
    }
    Scalar pinv = at(k, k).inverse();
    for (int i = k + 1; i < n; i++) {
      if (at(i, k).is_zero()) continue;
      Scalar f = at(i, k) * pinv;
      for (int c = k; c < n; c++) at(i, c) -= f * at(k, c);
    }
    det *= at(k, k);
  }
  return negate ? -det : det;
}

std::vector<Scalar> all_principal_pfaffians(const SkewMatrix& m) {
  const int n = m.size();
  if (n > 20) throw std::invalid_argument("all_principal_pfaffians: matrix too large");
  std::vector<Scalar> pf(size_t{1} << n);
  pf[0] = 1;
  for (uint32_t mask = 1; mask < pf.size(); mask++) {
    if (std::popcount(mask) & 1) continue;
    int first = std::countr_zero(mask);
    Scalar sum;
    int t = 1;
    for (uint32_t rest = mask & (mask - 1); rest; rest &= rest - 1) {
      t++;
      int j = std::countr_zero(rest);
      const Scalar& entry = m.at(first, j);
      if (entry.is_zero()) continue;
      const Scalar& sub = pf[mask & ~(uint32_t{1} << first) & ~(uint32_t{1} << j)];
      if (sub.is_zero()) continue;
      Scalar term = entry * sub;
      if (t & 1) sum -= term; else sum += term;
    }
    pf[mask] = sum;
  }
  return pf;
}

SkewMatrix principal_minor(const SkewMatrix& m, const std::vector<int>& positions) {
  std::vector<int> labels(positions.size());
  for (size_t k = 0; k < positions.size(); k++) {
    if (k > 0 && positions[k] <= positions[k - 1])
      throw std::invalid_argument("principal_minor: positions must increase");
    labels[k] = m.labels().at(positions[k]);
  }
  SkewMatrix r(std::move(labels));
  for (size_t i = 0; i < positions.size(); i++)
    for (size_t j = i + 1; j < positions.size(); j++)
      r.set(static_cast<int>(i), static_cast<int>(j), m.at(positions[i], positions[j]));
  return r;
}

QubitTensor sub_pfaffian_gate(const SkewMatrix& m) {
  std::vector<Scalar> pf = all_principal_pfaffians(m);
  QubitTensor t = QubitTensor::zero(m.size(), Leg::Ket);
  for (uint32_t mask = 0; mask < pf.size(); mask++) t.coeff(mask) = std::move(pf[mask]);
  return t;
}

QubitTensor sub_pfaffian_cogate(const SkewMatrix& m) {
  std::vector<Scalar> pf = all_principal_pfaffians(m);
  QubitTensor t = QubitTensor::zero(m.size(), Leg::Bra);
  const uint32_t full = static_cast<uint32_t>(pf.size() - 1);
  for (uint32_t mask = 0; mask < pf.size(); mask++) t.coeff(full ^ mask) = std::move(pf[mask]);
  return t;
}

SkewMatrix interleaved_direct_sum(const SkewMatrix& a, const SkewMatrix& b) {
  std::vector<int> merged = a.labels();
  merged.insert(merged.end(), b.labels().begin(), b.labels().end());
  std::sort(merged.begin(), merged.end());
  for (size_t k = 1; k < merged.size(); k++)
    if (merged[k] == merged[k - 1])
      throw std::invalid_argument("interleaved_direct_sum: overlapping labels");
  SkewMatrix r(merged);
  auto place = [&](const SkewMatrix& src) {
    for (int i = 0; i < src.size(); i++) {
      int gi = static_cast<int>(std::lower_bound(merged.begin(), merged.end(), src.labels()[i]) -
                                merged.begin());
      for (int j = i + 1; j < src.size(); j++) {
        int gj = static_cast<int>(std::lower_bound(merged.begin(), merged.end(), src.labels()[j]) -
                                  merged.begin());
        r.set(gi, gj, src.at(i, j));
      }
    }
  };
  place(a);
  place(b);
  return r;
}

SkewMatrix twist(const SkewMatrix& t) {
  SkewMatrix r(t.labels());
  for (int i = 0; i < t.size(); i++)
    for (int j = i + 1; j < t.size(); j++) {
      // 1-based positions: sign (-1)^{i+j+1}
      bool flip = ((i + 1) + (j + 1) + 1) & 1;
      r.set(i, j, flip ? -t.at(i, j) : t.at(i, j));
    }
  return r;
}

Scalar pair_value(const SkewMatrix& x, const SkewMatrix& t) {
  if (x.labels() != t.labels()) throw std::invalid_argument("pair_value: label mismatch");
  return pfaffian(x + twist(t));
}

namespace {

// #{(a,b) in A x B : b < a} mod 2; A, B given as masks into sorted label lists.
int cross_parity(uint32_t amask, const std::vector<int>& alab, uint32_t bmask,
                 const std::vector<int>& blab) {
  int parity = 0;
  for (uint32_t am = amask; am; am &= am - 1) {
    int a = alab[std::countr_zero(am)];
    for (uint32_t bm = bmask; bm; bm &= bm - 1)
      if (blab[std::countr_zero(bm)] < a) parity ^= 1;
  }
  return parity;
}

}  // namespace

QubitTensor labeled_tensor_product(const QubitTensor& s, const std::vector<int>& s_labels,
                                   const QubitTensor& t, const std::vector<int>& t_labels) {
  if (static_cast<int>(s_labels.size()) != s.arity() ||
      static_cast<int>(t_labels.size()) != t.arity())
    throw std::invalid_argument("labeled_tensor_product: label count mismatch");
  const bool kets = s.all_ket() && t.all_ket();
  if (!kets && !(s.all_bra() && t.all_bra()))
    throw std::invalid_argument("labeled_tensor_product: variance must be uniform");
  check_labels(s_labels);
  check_labels(t_labels);

  std::vector<int> merged = s_labels;
  merged.insert(merged.end(), t_labels.begin(), t_labels.end());
  std::sort(merged.begin(), merged.end());
  for (size_t k = 1; k < merged.size(); k++)
    if (merged[k] == merged[k - 1])
      throw std::invalid_argument("labeled_tensor_product: overlapping labels");
  auto rank = [&](int label) {
    return static_cast<int>(std::lower_bound(merged.begin(), merged.end(), label) - merged.begin());
  };

  QubitTensor r = QubitTensor::zero(static_cast<int>(merged.size()),
                                    kets ? Leg::Ket : Leg::Bra);
  const uint32_t sfull = (uint32_t{1} << s.arity()) - 1;
  const uint32_t tfull = (uint32_t{1} << t.arity()) - 1;
  for (uint32_t ms = 0; ms <= sfull; ms++) {
    if (s.coeff(ms).is_zero()) continue;
    for (uint32_t mt = 0; mt <= tfull; mt++) {
      if (t.coeff(mt).is_zero()) continue;
      uint32_t out = 0;
      for (uint32_t m = ms; m; m &= m - 1) out |= uint32_t{1} << rank(s_labels[std::countr_zero(m)]);
      for (uint32_t m = mt; m; m &= m - 1) out |= uint32_t{1} << rank(t_labels[std::countr_zero(m)]);
      // Kets pick up the merge sign of the index sets themselves, bras of
      // their complements (the sub-Pfaffian cogate indexes by complements).
      int parity = kets ? cross_parity(ms, s_labels, mt, t_labels)
                        : cross_parity(sfull & ~ms, s_labels, tfull & ~mt, t_labels);
      Scalar term = s.coeff(ms) * t.coeff(mt);
      r.coeff(out) = parity ? -term : term;
    }
  }
  return r;
}

}  // namespace pfcirc
