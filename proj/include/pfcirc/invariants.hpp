#pragma once

#include "pfcirc/tensor.hpp"

#include <array>
#include <span>

namespace pfcirc {

// Values of the four generators of the SL(2,C)^4 invariant ring on a
// four-qubit tensor.
struct InvariantVector {
  Scalar H, det_l, det_m, det_b;

  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

// Cayley hyperdeterminant (the degree-2 generator).
Scalar hyperdeterminant_H(std::span<const Scalar, 16> x);
Scalar det_L(std::span<const Scalar, 16> x);
Scalar det_M(std::span<const Scalar, 16> x);
Scalar det_B(std::span<const Scalar, 16> x);

InvariantVector evaluate_invariants(std::span<const Scalar, 16> x);
InvariantVector evaluate_invariants(const QubitTensor& t);  // arity-4 ket

// Same coefficients with flipped variance (the transpose map).
QubitTensor transpose_tensor(const QubitTensor& t);

// Coefficient of I moves to its complement; an involution.
QubitTensor psi_involution(const QubitTensor& t);

// Dual generators on covectors: transpose, apply T^{(x)4} with
// T = (0,-1;1,0), then evaluate the plain generators.
InvariantVector dual_invariants(const QubitTensor& t);  // arity-4 bra

// True iff all four generator values are unchanged under the basis change;
// every matrix must have determinant exactly 1.
bool check_invariance(const QubitTensor& t, std::span<const TwoByTwo, 4> g);

}  // namespace pfcirc
