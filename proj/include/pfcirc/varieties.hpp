#pragma once

#include "pfcirc/circuit.hpp"
#include "pfcirc/tensor.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pfcirc {

// One Grassmann-Pluecker relation: disjoint index sets S (common to both
// factors) and R, T (the exchange pool, |T| = |R| + 4k), with the derived
// summand list.  Sum over summands of coef * a_{maskA} * a_{maskB} vanishes
// on every sub-Pfaffian image; masks already include S.
struct GPRelation {
  std::vector<int> S, R, T;  // 1-based labels
  struct Summand {
    uint32_t mask_a, mask_b;
    int coef;
  };
  std::vector<Summand> summands;

  // coeffs is the 2^n coefficient table of an all-ket tensor.
  Scalar evaluate(std::span<const Scalar> coeffs) const;

  std::string describe() const;
};

// All relations with support inside [n] (n <= 8) and pool size at most
// 4*max_k + 2: the partition family, the common-spectator family and the
// single-exchange family.
std::vector<GPRelation> enumerate_relations(int n, int max_k = 2);

struct MembershipReport {
  bool member = false;
  std::string reason;  // empty when member
  std::optional<GPRelation> violated;
  std::optional<Scalar> violation_value;
};

// Membership in the gate variety: even support, the empty-set coefficient
// equals 1, and every relation vanishes.  Cone membership drops the
// normalization.  Arity must be at most 8.
MembershipReport check_gate_membership(const QubitTensor& t, bool cone = false);

// Cogate membership: the complement-reindexed conditions (normalization at
// the full index set).
MembershipReport check_cogate_membership(const QubitTensor& t, bool cone = false);

bool is_pfaffian_gate_point(const QubitTensor& t);
bool is_pfaffian_cogate_point(const QubitTensor& t);
bool is_cone_point(const QubitTensor& t, Side side);

}  // namespace pfcirc
