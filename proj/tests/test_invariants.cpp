#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pfcirc/invariants.hpp"
#include "pfcirc/random.hpp"
#include "pfcirc/skew.hpp"
#include "pfcirc/varieties.hpp"

using namespace pfcirc;

namespace {

std::array<TwoByTwo, 4> random_sl2_quad(Rng& rng) {
  return {random_sl2(rng), random_sl2(rng), random_sl2(rng), random_sl2(rng)};
}

}  // namespace

TEST_CASE("invariant values on SWAP") {
  InvariantVector iv = evaluate_invariants(swap_gate(Leg::Ket));
  CHECK(iv.H == Scalar(2));
  CHECK(iv.det_l == Scalar(1));
  CHECK(iv.det_m == Scalar());
  CHECK(iv.det_b == Scalar());

  InvariantVector dual = dual_invariants(swap_gate(Leg::Bra));
  CHECK(dual.H == Scalar(2));
  CHECK(dual.det_l == Scalar(1));
  CHECK(dual.det_m == Scalar());
  CHECK(dual.det_b == Scalar());
}

TEST_CASE("hyperdeterminant basics") {
  std::array<Scalar, 16> zero{};
  CHECK(hyperdeterminant_H(zero) == Scalar());
  CHECK(det_L(zero) == Scalar());
  CHECK(det_M(zero) == Scalar());
  CHECK(det_B(zero) == Scalar());

  std::array<Scalar, 16> corner{};
  corner[0] = 1;
  corner[15] = 1;
  CHECK(hyperdeterminant_H(corner) == Scalar(1));
}

TEST_CASE("zero covector dual invariants") {
  InvariantVector iv = dual_invariants(QubitTensor::zero(4, Leg::Bra));
  CHECK(iv.H == Scalar());
  CHECK(iv.det_l == Scalar());
  CHECK(iv.det_m == Scalar());
  CHECK(iv.det_b == Scalar());
}

TEST_CASE("invariance under random unimodular quadruples") {
  Rng rng(61);
  for (int trial = 0; trial < 60; trial++) {
    QubitTensor t = random_tensor(rng, 4, Leg::Ket, trial % 7 == 0);
    CHECK(check_invariance(t, random_sl2_quad(rng)));
  }
  for (int trial = 0; trial < 20; trial++) {
    QubitTensor t = random_tensor(rng, 4, Leg::Bra);
    CHECK(check_invariance(t, random_sl2_quad(rng)));
  }
  QubitTensor t = random_tensor(rng, 4, Leg::Ket);
  std::array<TwoByTwo, 4> ids{TwoByTwo::identity(), TwoByTwo::identity(), TwoByTwo::identity(),
                              TwoByTwo::identity()};
  CHECK(check_invariance(t, ids));
  std::array<TwoByTwo, 4> bad = ids;
  bad[2] = TwoByTwo{2, 0, 0, 1};
  CHECK_THROWS_AS(check_invariance(t, bad), std::invalid_argument);
}

TEST_CASE("psi is an involution and exchanges the varieties") {
  CHECK(psi_involution(QubitTensor::basis(4, Leg::Ket, 0)) ==
        QubitTensor::basis(4, Leg::Ket, 0b1111));
  Rng rng(62);
  for (int trial = 0; trial < 40; trial++) {
    QubitTensor t = random_tensor(rng, 4, Leg::Ket, trial % 9 == 0);
    CHECK(psi_involution(psi_involution(t)) == t);
  }
  for (int trial = 0; trial < 15; trial++) {
    SkewMatrix m = random_skew(rng, SkewMatrix::zero(4).labels(), true, 5);
    QubitTensor image = psi_involution(sub_pfaffian_gate(m));
    // Psi(sPf(M)) lies in the transposed cogate variety
    CHECK(is_pfaffian_cogate_point(transpose_tensor(image)));
  }
}

TEST_CASE("dual route agrees with psi on cogate points") {
  Rng rng(63);
  for (int trial = 0; trial < 30; trial++) {
    SkewMatrix n = random_skew(rng, SkewMatrix::zero(4).labels(), trial % 4 == 0, 5);
    QubitTensor v = sub_pfaffian_cogate(n);
    InvariantVector dual = dual_invariants(v);
    InvariantVector via_psi = evaluate_invariants(psi_involution(transpose_tensor(v)));
    CHECK(dual == via_psi);
  }
}

TEST_CASE("homogeneity degrees 2,4,4,6") {
  Rng rng(64);
  for (int trial = 0; trial < 25; trial++) {
    QubitTensor t = random_tensor(rng, 4, Leg::Ket);
    Scalar lam = random_scalar(rng);
    if (lam.is_zero()) lam = Scalar(2);
    InvariantVector base = evaluate_invariants(t);
    InvariantVector scaled = evaluate_invariants(lam * t);
    Scalar l2 = lam * lam;
    Scalar l4 = l2 * l2;
    CHECK(scaled.H == l2 * base.H);
    CHECK(scaled.det_l == l4 * base.det_l);
    CHECK(scaled.det_m == l4 * base.det_m);
    CHECK(scaled.det_b == l4 * l2 * base.det_b);
  }
}

TEST_CASE("sPf images differ from SWAP on the invariants") {
  // consequence of the emptiness of V(I+J): no Pfaffian point shares the
  // SWAP values (2,1,0,0); spot-checked on random samples
  Rng rng(65);
  InvariantVector target{2, 1, Scalar(), Scalar()};
  for (int trial = 0; trial < 50; trial++) {
    SkewMatrix m = random_skew(rng, SkewMatrix::zero(4).labels(), trial % 3 == 0, 6);
    CHECK_FALSE(evaluate_invariants(sub_pfaffian_gate(m)) == target);
  }
}
