#include "pfcirc/invariants.hpp"

#include "pfcirc/invariant_formulas.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace pfcirc {

namespace {

// 1-based access matching the generator formulas.
struct X {
  std::span<const Scalar, 16> v;
  const Scalar& operator()(int k) const { return v[k - 1]; }
};

}  // namespace

Scalar hyperdeterminant_H(std::span<const Scalar, 16> v) {
  return hyperdeterminant_formula<Scalar>(X{v});
}

Scalar det_L(std::span<const Scalar, 16> v) { return det_l_formula<Scalar>(X{v}); }

Scalar det_M(std::span<const Scalar, 16> v) { return det_m_formula<Scalar>(X{v}); }

Scalar det_B(std::span<const Scalar, 16> v) { return det_b_formula<Scalar>(X{v}); }

InvariantVector evaluate_invariants(std::span<const Scalar, 16> x) {
  return {hyperdeterminant_H(x), det_L(x), det_M(x), det_B(x)};
}

InvariantVector evaluate_invariants(const QubitTensor& t) {
  if (t.arity() != 4 || !t.all_ket())
    throw std::invalid_argument("evaluate_invariants: expected an arity-4 ket tensor");
  return evaluate_invariants(std::span<const Scalar, 16>(flatten_coeffs(t)));
}

QubitTensor transpose_tensor(const QubitTensor& t) {
  std::vector<Leg> var;
  for (Leg l : t.variance()) var.push_back(l == Leg::Ket ? Leg::Bra : Leg::Ket);
  QubitTensor r(std::move(var));
  for (uint32_t m = 0; m < t.coeff_count(); m++) r.coeff(m) = t.coeff(m);
  return r;
}

QubitTensor psi_involution(const QubitTensor& t) {
  if (t.arity() != 4) throw std::invalid_argument("psi_involution: arity must be 4");
  QubitTensor r(t.variance());
  const uint32_t full = static_cast<uint32_t>(t.coeff_count() - 1);
  for (uint32_t m = 0; m < t.coeff_count(); m++) r.coeff(full ^ m) = t.coeff(m);
  return r;
}

InvariantVector dual_invariants(const QubitTensor& t) {
  if (t.arity() != 4 || !t.all_bra())
    throw std::invalid_argument("dual_invariants: expected an arity-4 bra tensor");
  TwoByTwo T{0, -1, 1, 0};
  std::vector<TwoByTwo> theta(4, T);
  QubitTensor image = apply_basis_change(transpose_tensor(t), theta);
  return evaluate_invariants(image);
}

bool check_invariance(const QubitTensor& t, std::span<const TwoByTwo, 4> g) {
  if (t.arity() != 4) throw std::invalid_argument("check_invariance: arity must be 4");
  for (const TwoByTwo& gi : g)
    if (!(gi.det() == Scalar(1)))
      throw std::invalid_argument("check_invariance: matrices must be unimodular");
  QubitTensor moved = apply_basis_change(t, g);
  if (t.all_ket()) return evaluate_invariants(t) == evaluate_invariants(moved);
  if (t.all_bra()) return dual_invariants(t) == dual_invariants(moved);
  throw std::invalid_argument("check_invariance: mixed variance unsupported");
}

}  // namespace pfcirc
