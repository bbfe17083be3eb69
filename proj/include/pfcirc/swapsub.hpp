#pragma once

#include "pfcirc/circuit.hpp"
#include "pfcirc/random.hpp"
#include "pfcirc/skew.hpp"
#include "pfcirc/tensor.hpp"
#include "pfcirc/varieties.hpp"

#include <array>
#include <optional>
#include <span>

namespace pfcirc {

// A basis change (M, N) under which the even part of SWAP(M (x) N (x) I (x) I)
// is an elementary cogate sPf~(S): det M = det N = 1, dh = 1, ae = bcfg.
struct SwapSolution {
  TwoByTwo M, N;
  SkewMatrix S;  // 4x4, sPf~(S) = even part of the basis-changed SWAP

  Scalar a() const { return M.a; }
  Scalar b() const { return M.b; }
  Scalar c() const { return M.c; }
  Scalar d() const { return M.d; }
  Scalar e() const { return N.a; }
  Scalar f() const { return N.b; }
  Scalar g() const { return N.c; }
  Scalar h() const { return N.d; }
};

// Solution chart over free parameters (b, c, f, d) with f, d nonzero:
//   a = (1+bc)/d,  e = -bc d,  g = -(1+bc)/f,  h = 1/d.
// Both determinant conditions and dh = 1, ae = bcfg hold identically.
// Throws std::domain_error on a degenerate parameter choice.
SwapSolution sample_solution(const std::array<Scalar, 4>& params);

// d = h = 1, a = e = 1/2, b = f = 1/sqrt2, c = g = -1/sqrt2.
SwapSolution reference_solution();

SwapSolution random_solution(Rng& rng);

// Even/odd split of SWAP(M (x) N (x) I (x) I); P + Q reconstructs it for
// every M, N, and P is a Pfaffian cogate exactly when the solution
// conditions hold.
std::pair<QubitTensor, QubitTensor> decompose_swap(const TwoByTwo& M, const TwoByTwo& N);

// Reads the skew matrix S with sPf~(S) = P off the pair coefficients;
// throws if P is not exactly an elementary cogate.
SkewMatrix cogate_matrix(const QubitTensor& P);

// Host circuit for the substitution demo: degree-4 cogate v against two
// degree-2 gates, optionally extended by elementary pendant pairs, with
// random elementary assignments tied to the canonical labeling.
struct DemoHost {
  Circuit circuit;
  int v;  // the degree-4 cogate
};
DemoHost make_demo_host(Rng& rng, int extra_pendants = 0);

// The substitution experiment.  value_before evaluates the host with v
// carrying sPf~(S)(M^-1 (x) N^-1 (x) I (x) I) and the compensating basis
// change folded into the adjacent gates; value_after replaces v by the
// plain SWAP covector; elementary_value is the Pfaffian-path value of the
// equivalent elementary circuit (v carrying sPf~(S)).  All three agree.
struct DemoResult {
  Scalar value_before, value_after, elementary_value;
};
DemoResult demo_substitution(const Circuit& host, int v, const SwapSolution& sol);

// Pointwise k-SWAP obstruction: the even projection of the k-fold product
// of basis-changed SWAPs.  For k = 2 runs the arity-8 cone-cogate
// membership (expected: not a member, with the violated relation); for
// k = 3 only the parity decomposition is checked.
struct ObstructionReport {
  int k = 0;
  bool parity_decomposition_ok = false;  // even part = sum of even-Q-count terms
  bool defect_present = false;           // the all-Q term is nonzero
  bool pp_in_cone = false;               // P (x) ... (x) P passes cone membership (k=2)
  bool even_projection_in_cone = true;   // the full even projection (k=2)
  std::optional<GPRelation> violated;
  std::optional<Scalar> violation_value;
};
ObstructionReport multi_swap_obstruction(int k, std::span<const SwapSolution> sols);

}  // namespace pfcirc
