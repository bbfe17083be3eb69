#include "pfcirc/acceptance.hpp"

#include "pfcirc/certs.hpp"
#include "pfcirc/circuit_gen.hpp"
#include "pfcirc/invariants.hpp"
#include "pfcirc/random.hpp"
#include "pfcirc/swapsub.hpp"
#include "pfcirc/varieties.hpp"

#include <chrono>
#include <ostream>
#include <set>
#include <sstream>

namespace pfcirc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

CriterionResult oracle_equivalence(Rng& rng) {
  CriterionResult res{1, "oracle equivalence: evaluate == brute force on random circuits"};
  auto t0 = Clock::now();
  const int trials = 500;
  int equal = 0;
  std::set<int> families;
  for (int trial = 0; trial < trials; trial++) {
    Circuit c = make_random_circuit(rng, trial, 10, trial % 25 == 0);
    families.insert(trial % 6);
    if (evaluate(c) == evaluate_bruteforce(c)) equal++;
  }
  double elapsed = seconds_since(t0);
  std::ostringstream os;
  os << equal << "/" << trials << " exact matches over " << families.size()
     << " topology families in " << elapsed << " s";
  res.detail = os.str();
  res.pass = equal == trials && families.size() >= 4 && elapsed < 60.0;
  return res;
}

CriterionResult direct_sum_lemma(Rng& rng) {
  CriterionResult res{2, "direct sum lemma: sPf(M) (x) sPf(N) == sPf(M (+) N)"};
  const int trials = 200;
  int good = 0;
  for (int trial = 0; trial < trials; trial++) {
    int total = 2 + static_cast<int>(rng() % 9);
    int na = static_cast<int>(rng() % (total + 1));
    std::vector<int> universe = random_labels(rng, total, total + 4);
    std::vector<int> la, lb;
    for (int k = 0; k < total; k++) {
      bool to_a = static_cast<int>(la.size()) < na &&
                  (static_cast<int>(lb.size()) >= total - na || rng() % 2);
      (to_a ? la : lb).push_back(universe[k]);
    }
    SkewMatrix a = random_skew(rng, la, trial % 6 == 0);
    SkewMatrix b = random_skew(rng, lb, trial % 6 == 0);
    SkewMatrix sum = interleaved_direct_sum(a, b);
    bool gate_ok = labeled_tensor_product(sub_pfaffian_gate(a), la, sub_pfaffian_gate(b), lb) ==
                   sub_pfaffian_gate(sum);
    bool cogate_ok =
        labeled_tensor_product(sub_pfaffian_cogate(a), la, sub_pfaffian_cogate(b), lb) ==
        sub_pfaffian_cogate(sum);
    if (gate_ok && cogate_ok) good++;
  }

  // a fixed 5x5 interleaving example, bit-exact
  SkewMatrix m({1, 3});
  m.set(0, 1, Scalar(12));
  SkewMatrix n({2, 4, 5});
  n.set(0, 1, Scalar(45));
  n.set(0, 2, Scalar(46));
  n.set(1, 2, Scalar(56));
  SkewMatrix sum = interleaved_direct_sum(m, n);
  SkewMatrix expected({1, 2, 3, 4, 5});
  expected.set(0, 2, Scalar(12));
  expected.set(1, 3, Scalar(45));
  expected.set(1, 4, Scalar(46));
  expected.set(3, 4, Scalar(56));
  bool example_ok = sum == expected;

  std::ostringstream os;
  os << good << "/" << trials << " random pairs, 5x5 example "
     << (example_ok ? "reproduced" : "MISMATCH");
  res.detail = os.str();
  res.pass = good == trials && example_ok;
  return res;
}

CriterionResult swap_invariants(Rng& rng) {
  CriterionResult res{3, "invariant values on SWAP and the dual route"};
  InvariantVector expected{2, 1, Scalar(), Scalar()};
  bool values_ok = evaluate_invariants(swap_gate(Leg::Ket)) == expected;
  bool dual_ok = dual_invariants(swap_gate(Leg::Bra)) == expected;
  int involution_ok = 0;
  const int trials = 100;
  for (int trial = 0; trial < trials; trial++) {
    QubitTensor t = random_tensor(rng, 4, Leg::Ket, trial % 8 == 0);
    if (psi_involution(psi_involution(t)) == t) involution_ok++;
  }
  std::ostringstream os;
  os << "(H,detL,detM,detB) " << (values_ok ? "= (2,1,0,0)" : "WRONG") << ", dual "
     << (dual_ok ? "agrees" : "DISAGREES") << ", involution " << involution_ok << "/" << trials;
  res.detail = os.str();
  res.pass = values_ok && dual_ok && involution_ok == trials;
  return res;
}

CriterionResult invariance(Rng& rng) {
  CriterionResult res{4, "SL(2)^4 invariance and homogeneity degrees (2,4,4,6)"};
  const int trials = 200;
  int inv_ok = 0;
  for (int trial = 0; trial < trials; trial++) {
    QubitTensor t = random_tensor(rng, 4, trial % 2 ? Leg::Ket : Leg::Bra, trial % 11 == 0);
    std::array<TwoByTwo, 4> g{random_sl2(rng), random_sl2(rng), random_sl2(rng), random_sl2(rng)};
    if (check_invariance(t, g)) inv_ok++;
  }
  int hom_ok = 0;
  const int hom_trials = 50;
  for (int trial = 0; trial < hom_trials; trial++) {
    QubitTensor t = random_tensor(rng, 4, Leg::Ket);
    Scalar lam = random_scalar(rng);
    if (lam.is_zero()) lam = Scalar(3);
    InvariantVector base = evaluate_invariants(t);
    InvariantVector scaled = evaluate_invariants(lam * t);
    Scalar l2 = lam * lam, l4 = l2 * l2;
    if (scaled.H == l2 * base.H && scaled.det_l == l4 * base.det_l &&
        scaled.det_m == l4 * base.det_m && scaled.det_b == l4 * l2 * base.det_b)
      hom_ok++;
  }
  std::ostringstream os;
  os << inv_ok << "/" << trials << " invariance checks, " << hom_ok << "/" << hom_trials
     << " scaling checks";
  res.detail = os.str();
  res.pass = inv_ok == trials && hom_ok == hom_trials;
  return res;
}

CriterionResult gp_calibration(Rng& rng) {
  CriterionResult res{5, "Grassmann-Pluecker calibration and SWAP non-membership"};
  auto t0 = Clock::now();
  long long checked = 0, vanished = 0;
  for (int n : {4, 6, 8}) {
    auto rels = enumerate_relations(n);
    for (int trial = 0; trial < 1000; trial++) {
      SkewMatrix m = random_skew(rng, SkewMatrix::zero(n).labels(), trial % 20 == 0, 9);
      QubitTensor g = sub_pfaffian_gate(m);
      std::vector<Scalar> coeffs(g.coeff_count());
      for (uint32_t mask = 0; mask < g.coeff_count(); mask++) coeffs[mask] = g.coeff(mask);
      for (const GPRelation& rel : rels) {
        checked++;
        if (rel.evaluate(coeffs).is_zero()) vanished++;
      }
    }
  }
  MembershipReport ket = check_gate_membership(swap_gate(Leg::Ket));
  MembershipReport bra = check_cogate_membership(swap_gate(Leg::Bra));
  bool swap_rejected = !ket.member && !bra.member;
  bool quadric_shown = ket.violated && ket.violated->S.empty() &&
                       ket.violated->T == std::vector<int>{1, 2, 3, 4} && bra.violated &&
                       bra.violated->T == std::vector<int>{1, 2, 3, 4};
  std::ostringstream os;
  os << vanished << "/" << checked << " relation evaluations vanished on 1000 images per n in "
     << seconds_since(t0) << " s; SWAP " << (swap_rejected ? "rejected" : "ACCEPTED")
     << (quadric_shown ? " with the n=4 quadric exhibited" : " without the quadric");
  res.detail = os.str();
  res.pass = checked == vanished && swap_rejected && quadric_shown;
  return res;
}

CriterionResult swap_construction(Rng& rng) {
  CriterionResult res{6, "SWAP decomposition: reference basis change, cogate membership, substitution"};
  SwapSolution ref = reference_solution();
  Scalar half(Rational(1, 2));
  SkewMatrix a_expected = SkewMatrix::zero(4);
  a_expected.set(0, 1, half);
  a_expected.set(0, 2, half);
  a_expected.set(0, 3, -half);
  a_expected.set(1, 2, -half);
  a_expected.set(1, 3, half);
  a_expected.set(2, 3, half);
  bool a_ok = ref.S == a_expected;

  const int solutions = 50, hosts = 20;
  int member_ok = 0, demo_ok = 0, demo_total = 0;
  for (int k = 0; k < solutions; k++) {
    SwapSolution sol = k == 0 ? ref : random_solution(rng);
    auto [p, q] = decompose_swap(sol.M, sol.N);
    if (is_pfaffian_cogate_point(p)) member_ok++;
    for (int host_trial = 0; host_trial < hosts; host_trial++) {
      DemoHost host = make_demo_host(rng, host_trial % 3);
      DemoResult demo = demo_substitution(host.circuit, host.v, sol);
      demo_total++;
      if (demo.value_before == demo.value_after && demo.value_before == demo.elementary_value)
        demo_ok++;
    }
  }
  std::ostringstream os;
  os << "matrix A " << (a_ok ? "bit-exact" : "MISMATCH") << ", " << member_ok << "/" << solutions
     << " cogate memberships, " << demo_ok << "/" << demo_total << " equal-value substitutions";
  res.detail = os.str();
  res.pass = a_ok && member_ok == solutions && demo_ok == demo_total;
  return res;
}

CriterionResult swap2_obstruction(Rng& rng) {
  CriterionResult res{7, "k=2 obstruction: doubled construction violates an arity-8 relation"};
  const int trials = 50;
  int obstructed = 0;
  std::string example;
  for (int trial = 0; trial < trials; trial++) {
    std::vector<SwapSolution> pair;
    pair.push_back(trial == 0 ? reference_solution() : random_solution(rng));
    pair.push_back(trial == 0 ? reference_solution() : random_solution(rng));
    ObstructionReport rep = multi_swap_obstruction(2, pair);
    if (!rep.even_projection_in_cone && rep.violated && rep.parity_decomposition_ok &&
        rep.pp_in_cone && rep.defect_present) {
      obstructed++;
      if (example.empty()) example = rep.violated->describe();
    }
  }
  std::ostringstream os;
  os << obstructed << "/" << trials << " solution pairs obstructed; first violation: " << example;
  res.detail = os.str();
  res.pass = obstructed == trials;
  return res;
}

CriterionResult certificate(Rng&) {
  CriterionResult res{8, "Nullstellensatz certificate for 1 in I + J"};
  CertSearchResult found = swap_cogate_certificate();
  if (!found.cert) {
    std::ostringstream os;
    os << "no certificate up to degree " << found.ladder.back()
       << "; open question flagged, see ladder";
    res.detail = os.str();
    res.pass = false;
    return res;
  }
  bool verified = verify_certificate(*found.cert, swap_cogate_generators());
  std::ostringstream os;
  os << "found at degree " << found.degree_used << " with " << found.cert->multipliers.size()
     << " multipliers, independent re-verification " << (verified ? "passed" : "FAILED");
  res.detail = os.str();
  res.pass = verified && found.degree_used <= 12;
  return res;
}

CriterionResult pfaffian_correctness(Rng& rng) {
  CriterionResult res{9, "Pfaffian correctness: Pf(M)^2 == det(M), Pf(empty) == 1"};
  const int trials = 200;
  int good = 0;
  for (int trial = 0; trial < trials; trial++) {
    int n = 2 * (1 + static_cast<int>(rng() % 4));
    SkewMatrix m = random_skew(rng, random_labels(rng, n, n + 2), trial % 10 == 0);
    Scalar pf = pfaffian(m);
    if (pf * pf == determinant(m)) good++;
  }
  bool empty_ok = pfaffian(SkewMatrix()) == Scalar(1);
  std::ostringstream os;
  os << good << "/" << trials << " squared-Pfaffian checks, Pf(empty) "
     << (empty_ok ? "== 1" : "WRONG");
  res.detail = os.str();
  res.pass = good == trials && empty_ok;
  return res;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(uint64_t seed, std::ostream* out) {
  std::vector<CriterionResult> results;
  CriterionResult (*criteria[])(Rng&) = {
      oracle_equivalence, direct_sum_lemma, swap_invariants,   invariance, gp_calibration,
      swap_construction,  swap2_obstruction, certificate,      pfaffian_correctness};
  for (auto* criterion : criteria) {
    Rng rng(seed + results.size());
    results.push_back(criterion(rng));
    if (out)
      *out << (results.back().pass ? "PASS" : "FAIL") << "  " << results.back().index << ". "
           << results.back().name << " -- " << results.back().detail << "\n";
  }
  return results;
}

int run_acceptance_and_report(uint64_t seed, std::ostream& out) {
  int failures = 0;
  for (const CriterionResult& r : run_acceptance(seed, &out))
    if (!r.pass) failures++;
  return failures;
}

}  // namespace pfcirc
