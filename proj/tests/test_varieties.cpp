#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pfcirc/random.hpp"
#include "pfcirc/skew.hpp"
#include "pfcirc/varieties.hpp"

using namespace pfcirc;

namespace {

std::vector<Scalar> gate_coeffs(const QubitTensor& t) {
  std::vector<Scalar> out(t.coeff_count());
  for (uint32_t m = 0; m < t.coeff_count(); m++) out[m] = t.coeff(m);
  return out;
}

}  // namespace

TEST_CASE("enumeration small cases") {
  CHECK(enumerate_relations(2).empty());
  CHECK(enumerate_relations(3).empty());

  // n=4: a single relation class, the quadric
  auto rels4 = enumerate_relations(4);
  REQUIRE(rels4.size() == 1);
  const GPRelation& q = rels4[0];
  CHECK(q.S.empty());
  CHECK(q.R.empty());
  CHECK(q.T == std::vector<int>{1, 2, 3, 4});
  REQUIRE(q.summands.size() == 4);
  // a0*a1234 - a12*a34 + a13*a24 - a23*a14
  auto coef = [&](uint32_t a, uint32_t b) {
    for (const auto& s : q.summands)
      if ((s.mask_a == a && s.mask_b == b) || (s.mask_a == b && s.mask_b == a)) return s.coef;
    return 0;
  };
  CHECK(coef(0b0000, 0b1111) == 1);
  CHECK(coef(0b0011, 0b1100) == -1);
  CHECK(coef(0b0101, 0b1010) == 1);
  CHECK(coef(0b0110, 0b1001) == -1);
}

TEST_CASE("n=8 has pool-4 relations for every spectator choice") {
  auto rels = enumerate_relations(8);
  for (int s = 1; s <= 8; s++) {
    bool found = false;
    for (const GPRelation& r : rels)
      if (r.S == std::vector<int>{s} && r.R.empty() && r.T.size() == 4) found = true;
    CHECK(found);
  }
  bool empty_s = false;
  for (const GPRelation& r : rels)
    if (r.S.empty() && r.R.empty() && r.T.size() == 4) empty_s = true;
  CHECK(empty_s);
}

TEST_CASE("relations vanish on sub-pfaffian images") {
  for (int n : {4, 5, 6, 7, 8}) {
    auto rels = enumerate_relations(n);
    Rng rng(40 + n);
    for (int trial = 0; trial < 12; trial++) {
      SkewMatrix m = random_skew(rng, SkewMatrix::zero(n).labels(), trial % 5 == 0, 6);
      auto coeffs = gate_coeffs(sub_pfaffian_gate(m));
      for (const GPRelation& rel : rels) CHECK(rel.evaluate(coeffs).is_zero());
    }
  }
}

TEST_CASE("gate membership") {
  Rng rng(51);
  for (int trial = 0; trial < 15; trial++) {
    SkewMatrix m = random_skew(rng, SkewMatrix::zero(4).labels(), true, 5);
    CHECK(is_pfaffian_gate_point(sub_pfaffian_gate(m)));
  }
  CHECK(is_pfaffian_gate_point(QubitTensor::basis(4, Leg::Ket, 0)));  // |0000>

  MembershipReport rep = check_gate_membership(swap_gate(Leg::Ket));
  CHECK_FALSE(rep.member);
  REQUIRE(rep.violated.has_value());
  // the exhibited violation is the n=4 quadric: 1*1 = 0 - 0 + 0 fails
  CHECK(rep.violated->T == std::vector<int>{1, 2, 3, 4});
  CHECK(rep.violated->S.empty());
  CHECK(rep.violation_value.has_value());
}

TEST_CASE("cogate membership") {
  Rng rng(52);
  for (int trial = 0; trial < 15; trial++) {
    SkewMatrix m = random_skew(rng, SkewMatrix::zero(4).labels(), true, 5);
    CHECK(is_pfaffian_cogate_point(sub_pfaffian_cogate(m)));
    for (int n : {5, 6}) {
      SkewMatrix big = random_skew(rng, SkewMatrix::zero(n).labels(), false, 5);
      CHECK(is_pfaffian_cogate_point(sub_pfaffian_cogate(big)));
      CHECK(is_pfaffian_gate_point(sub_pfaffian_gate(big)));
    }
  }
  CHECK_FALSE(is_pfaffian_cogate_point(swap_gate(Leg::Bra)));
}

TEST_CASE("membership under relabeling") {
  // reversing all leg labels maps images to images
  Rng rng(53);
  for (int trial = 0; trial < 10; trial++) {
    SkewMatrix m = random_skew(rng, SkewMatrix::zero(6).labels(), false, 5);
    QubitTensor t = sub_pfaffian_gate(m);
    std::vector<int> reversed{5, 4, 3, 2, 1, 0};
    CHECK(is_pfaffian_gate_point(permute_legs(t, reversed)));
  }
}

TEST_CASE("cone membership") {
  CHECK(is_cone_point(QubitTensor::zero(4, Leg::Ket), Side::Gate));
  CHECK(is_cone_point(QubitTensor::zero(4, Leg::Bra), Side::Cogate));

  Rng rng(54);
  SkewMatrix m = random_skew(rng, SkewMatrix::zero(4).labels(), true, 5);
  QubitTensor scaled = Scalar(3) * sub_pfaffian_gate(m);
  CHECK(is_cone_point(scaled, Side::Gate));
  CHECK_FALSE(is_pfaffian_gate_point(scaled));

  for (int lam : {1, -1, 2, 5}) {
    CHECK_FALSE(is_cone_point(Scalar(lam) * swap_gate(Leg::Ket), Side::Gate));
    CHECK_FALSE(is_cone_point(Scalar(lam) * swap_gate(Leg::Bra), Side::Cogate));
  }
}

TEST_CASE("arity guard") {
  CHECK_THROWS_AS(enumerate_relations(9), std::invalid_argument);
  CHECK_THROWS_AS(is_pfaffian_gate_point(QubitTensor::zero(9, Leg::Ket)), std::invalid_argument);
}
