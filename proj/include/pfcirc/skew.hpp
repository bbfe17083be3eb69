#pragma once

#include "pfcirc/scalar.hpp"
#include "pfcirc/tensor.hpp"

#include <tuple>
#include <vector>

namespace pfcirc {

// Skew-symmetric matrix whose rows/columns carry strictly increasing
// positive integer labels (the edge labels of a compiled circuit).
class SkewMatrix {
 public:
  SkewMatrix() = default;
  explicit SkewMatrix(std::vector<int> labels);
  static SkewMatrix zero(int n);  // labels 1..n

  // Builds from the strictly-upper entries, given by label pairs.
  static SkewMatrix from_upper(std::vector<int> labels,
                               const std::vector<std::tuple<int, int, Scalar>>& upper);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<int>& labels() const { return labels_; }

  const Scalar& at(int i, int j) const { return m_[idx(i, j)]; }
  // Sets entry (i,j) and its negated mirror; i == j requires zero.
  void set(int i, int j, const Scalar& v);

  friend bool operator==(const SkewMatrix&, const SkewMatrix&) = default;

  friend SkewMatrix operator+(const SkewMatrix& x, const SkewMatrix& y);

 private:
  size_t idx(int i, int j) const;
  std::vector<int> labels_;
  std::vector<Scalar> m_;
};

// Exact Pfaffian; Pf of the empty matrix is 1, odd dimension gives 0.
Scalar pfaffian(const SkewMatrix& m);

// Exact determinant (used for the Pf^2 = det cross-check).
Scalar determinant(const SkewMatrix& m);

// Pfaffians of every principal minor, indexed by position bitmask.
std::vector<Scalar> all_principal_pfaffians(const SkewMatrix& m);

// Submatrix on the given (0-based, increasing) positions.
SkewMatrix principal_minor(const SkewMatrix& m, const std::vector<int>& positions);

// sPf(M)  = sum_I Pf(M_I) |I>        (coefficient of I at mask(I))
// sPf~(M) = sum_I Pf(M_I) <comp(I)|
QubitTensor sub_pfaffian_gate(const SkewMatrix& m);
QubitTensor sub_pfaffian_cogate(const SkewMatrix& m);

// Direct sum rearranged so the combined labels increase; labels must be
// disjoint.
SkewMatrix interleaved_direct_sum(const SkewMatrix& a, const SkewMatrix& b);

// Entrywise sign flip T~_ij = (-1)^{i+j+1} T_ij on 1-based positions.
SkewMatrix twist(const SkewMatrix& t);

// Pf(X + twist(T)); equals the full pairing of sub_pfaffian_cogate(T)
// against sub_pfaffian_gate(X).  Requires identical labels.
Scalar pair_value(const SkewMatrix& x, const SkewMatrix& t);

// Tensor product of labeled (co)gate tensors: legs merge into increasing
// label order with the alternating-sign convention under which
// sub_pfaffian_gate(M) (x) sub_pfaffian_gate(N) = sub_pfaffian_gate(M (+) N)
// holds for interleaved labels.  Both tensors must be uniformly ket or
// uniformly bra; label sets must be disjoint and sorted.
QubitTensor labeled_tensor_product(const QubitTensor& s, const std::vector<int>& s_labels,
                                   const QubitTensor& t, const std::vector<int>& t_labels);

}  // namespace pfcirc
