#pragma once

#include "pfcirc/poly.hpp"

#include <optional>
#include <vector>

namespace pfcirc {

// Explicit witness that target = sum multiplier_i * gens[index_i]; verified
// exactly before being handed out.
struct Certificate {
  std::vector<std::pair<int, PolyQ>> multipliers;  // (generator index, multiplier)
  PolyQ target;
  int degree_bound = 0;
};

// Exact recomputation of the certificate sum against the generator list.
bool verify_certificate(const Certificate& cert, const std::vector<PolyQ>& gens);

// Macaulay-matrix search for multipliers of degree at most
// degree_bound - deg(gen); a miss means no certificate at this bound, not
// non-membership.  When every generator and the target carry only
// even-degree terms, multipliers are restricted to even degrees (their odd
// parts would have to cancel on their own).
std::optional<Certificate> membership_certificate(const PolyQ& target,
                                                  const std::vector<PolyQ>& gens,
                                                  int degree_bound);

// Splits off generators that are single variables and kills those
// variables in the remaining generators.
struct LinearElimination {
  std::vector<PolyQ> reduced;                    // rewritten non-linear generators
  std::vector<int> reduced_index;                // their indices in the input list
  std::vector<std::pair<int, int>> eliminated;   // (generator index, variable)
};
LinearElimination eliminate_linears(const std::vector<PolyQ>& gens);

// Certificate search through eliminate_linears: solve in the reduced
// variables, then lift multipliers for the eliminated variables back.
std::optional<Certificate> membership_certificate_with_elimination(
    const PolyQ& target, const std::vector<PolyQ>& gens, int degree_bound);

// The system whose emptiness separates SWAP from the cogate variety, in
// C[x1..x16]: H - 2, det L - 1, det M, det B (the invariant values SWAP
// attains), the eight odd-support coordinates, and the quadric difference.
std::vector<PolyQ> swap_cogate_generators();

// Ascending-degree search for 1 in I + J; returns the certificate and the
// degree at which it was found.
struct CertSearchResult {
  std::optional<Certificate> cert;
  int degree_used = 0;
  std::vector<int> ladder;
};
CertSearchResult swap_cogate_certificate(std::vector<int> ladder = {4, 6, 8, 10, 12});

}  // namespace pfcirc
