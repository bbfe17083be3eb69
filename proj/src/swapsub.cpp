#include "pfcirc/swapsub.hpp"

#include "pfcirc/circuit_gen.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace pfcirc {

namespace {

QubitTensor basis_changed_swap(const TwoByTwo& M, const TwoByTwo& N) {
  std::vector<TwoByTwo> mats{M, N, TwoByTwo::identity(), TwoByTwo::identity()};
  return apply_basis_change(swap_gate(Leg::Bra), mats);
}

}  // namespace

SwapSolution sample_solution(const std::array<Scalar, 4>& params) {
  const Scalar& b = params[0];
  const Scalar& c = params[1];
  const Scalar& f = params[2];
  const Scalar& d = params[3];
  if (f.is_zero() || d.is_zero())
    throw std::domain_error("sample_solution: degenerate parameters (f and d must be nonzero)");
  Scalar one_bc = Scalar(1) + b * c;
  Scalar dinv = d.inverse();
  TwoByTwo M{one_bc * dinv, b, c, d};
  TwoByTwo N{-(b * c * d), f, -(one_bc * f.inverse()), dinv};
  auto [p, q] = decompose_swap(M, N);
  SwapSolution sol{M, N, cogate_matrix(p)};
  return sol;
}

SwapSolution reference_solution() {
  Scalar r = Scalar::inv_sqrt2();
  return sample_solution({r, -r, r, Scalar(1)});
}

SwapSolution random_solution(Rng& rng) {
  while (true) {
    std::array<Scalar, 4> params;
    for (Scalar& p : params) p = random_scalar(rng, true, 3, 2);
    if (params[2].is_zero() || params[3].is_zero()) continue;
    return sample_solution(params);
  }
}

std::pair<QubitTensor, QubitTensor> decompose_swap(const TwoByTwo& M, const TwoByTwo& N) {
  QubitTensor moved = basis_changed_swap(M, N);
  return {parity_projection(moved, Parity::Even), parity_projection(moved, Parity::Odd)};
}

SkewMatrix cogate_matrix(const QubitTensor& P) {
  if (P.arity() != 4 || !P.all_bra())
    throw std::invalid_argument("cogate_matrix: expected an arity-4 covector");
  SkewMatrix s = SkewMatrix::zero(4);
  for (int i = 0; i < 4; i++)
    for (int j = i + 1; j < 4; j++) {
      uint32_t pair = (uint32_t{1} << i) | (uint32_t{1} << j);
      s.set(i, j, P.coeff(0b1111 ^ pair));
    }
  if (!(sub_pfaffian_cogate(s) == P))
    throw std::invalid_argument("cogate_matrix: covector is not an elementary cogate");
  return s;
}

DemoHost make_demo_host(Rng& rng, int extra_pendants) {
  Circuit c;
  int a = c.add_vertex(Side::Gate);
  int b = c.add_vertex(Side::Gate);
  int v = c.add_vertex(Side::Cogate);
  c.add_edge(a, v);
  c.add_edge(a, v);
  c.add_edge(b, v);
  c.add_edge(b, v);
  // two bigons; planar with the parallel strands adjacent around v
  for (int k = 0; k < extra_pendants; k++) {
    // hang an elementary cogate-gate path off one of the gates; the added
    // cogate keeps even degree so the remaining covector side stays
    // even-supported, which the substitution argument needs
    int host_gate = k % 2 == 0 ? a : b;
    int w = c.add_vertex(Side::Cogate);
    c.add_edge(host_gate, w);
    int z = c.add_vertex(Side::Gate);
    c.add_edge(z, w);
  }
  assign_random_elementary(c, rng);
  return {std::move(c), v};
}

DemoResult demo_substitution(const Circuit& host, int v, const SwapSolution& sol) {
  if (host.vertex(v).side != Side::Cogate || host.vertex(v).degree() != 4)
    throw std::invalid_argument("demo_substitution: v must be a degree-4 cogate");
  for (int u = 0; u < host.vertex_count(); u++) {
    if (u != v && !host.vertex(u).elementary())
      throw std::invalid_argument("demo_substitution: other vertices must be elementary");
    if (u != v && host.vertex(u).side == Side::Cogate && host.vertex(u).degree() % 2)
      throw std::invalid_argument(
          "demo_substitution: other cogates must have even degree to keep the "
          "remaining covector side even-supported");
  }

  // the equivalent elementary circuit: v carries sPf~(S) directly
  Circuit elementary = host;
  elementary.assign(v, sol.S);
  Scalar elementary_value = evaluate(elementary);

  // fold the basis change into v and compensate on the far gate legs of
  // v's first two legs
  TwoByTwo minv = sol.M.inverse(), ninv = sol.N.inverse();
  std::vector<TwoByTwo> undo{minv, ninv, TwoByTwo::identity(), TwoByTwo::identity()};
  QubitTensor folded_cogate = apply_basis_change(sub_pfaffian_cogate(sol.S), undo);

  Circuit before = elementary;
  before.assign(v, folded_cogate);
  const std::vector<int>& vlegs = host.vertex(v).legs();
  for (int leg = 0; leg < 2; leg++) {
    int e = vlegs[leg];
    int far = host.edge(e).first == v ? host.edge(e).second : host.edge(e).first;
    const std::vector<int>& flegs = before.vertex(far).legs();
    std::vector<TwoByTwo> mats(flegs.size(), TwoByTwo::identity());
    auto it = std::find(flegs.begin(), flegs.end(), e);
    mats[it - flegs.begin()] = leg == 0 ? sol.M : sol.N;
    before.assign(far, apply_basis_change(vertex_tensor(before.vertex(far)), mats));
  }
  Scalar value_before = evaluate_bruteforce(before);

  Circuit after = substitute(before, v, swap_gate(Leg::Bra));
  Scalar value_after = evaluate_bruteforce(after);

  return {std::move(value_before), std::move(value_after), std::move(elementary_value)};
}

ObstructionReport multi_swap_obstruction(int k, std::span<const SwapSolution> sols) {
  if (k != 2 && k != 3) throw std::invalid_argument("multi_swap_obstruction: k must be 2 or 3");
  if (static_cast<int>(sols.size()) != k)
    throw std::invalid_argument("multi_swap_obstruction: need one solution per factor");

  ObstructionReport rep;
  rep.k = k;

  std::vector<QubitTensor> parts, evens, odds;
  for (const SwapSolution& sol : sols) {
    parts.push_back(basis_changed_swap(sol.M, sol.N));
    auto [p, q] = decompose_swap(sol.M, sol.N);
    evens.push_back(std::move(p));
    odds.push_back(std::move(q));
  }
  QubitTensor full = parts[0];
  for (int i = 1; i < k; i++) full = tensor_product(full, parts[i]);
  QubitTensor even = parity_projection(full, Parity::Even);

  // even part = sum over factor patterns with an even number of odd parts
  QubitTensor expected = QubitTensor::zero(4 * k, Leg::Bra);
  for (uint32_t pattern = 0; pattern < (uint32_t{1} << k); pattern++) {
    if (std::popcount(pattern) & 1) continue;
    QubitTensor term = QubitTensor::scalar(Scalar(1));
    for (int i = 0; i < k; i++)
      term = tensor_product(term, (pattern & (uint32_t{1} << i)) ? odds[i] : evens[i]);
    expected = expected + term;
  }
  rep.parity_decomposition_ok = even == expected;

  QubitTensor qq = odds[0];
  for (int i = 1; i < k; i++) qq = tensor_product(qq, odds[i]);
  if (k % 2 == 0) rep.defect_present = !qq.is_zero();
  else {
    QubitTensor mixed = tensor_product(tensor_product(odds[0], odds[1]), evens[2]);
    rep.defect_present = !mixed.is_zero();
  }

  if (k == 2) {
    QubitTensor pp = tensor_product(evens[0], evens[1]);
    rep.pp_in_cone = check_cogate_membership(pp, true).member;
    MembershipReport mem = check_cogate_membership(even, true);
    rep.even_projection_in_cone = mem.member;
    rep.violated = std::move(mem.violated);
    rep.violation_value = std::move(mem.violation_value);
  }
  return rep;
}

}  // namespace pfcirc
