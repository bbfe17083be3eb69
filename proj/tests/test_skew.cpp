#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pfcirc/random.hpp"
#include "pfcirc/skew.hpp"

using namespace pfcirc;

namespace {

SkewMatrix upper4(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d,
                  const Scalar& e, const Scalar& f) {
  SkewMatrix m = SkewMatrix::zero(4);
  m.set(0, 1, a);
  m.set(0, 2, b);
  m.set(0, 3, c);
  m.set(1, 2, d);
  m.set(1, 3, e);
  m.set(2, 3, f);
  return m;
}

}  // namespace

TEST_CASE("pfaffian base cases") {
  CHECK(pfaffian(SkewMatrix()) == Scalar(1));
  CHECK(pfaffian(SkewMatrix::zero(1)) == Scalar());
  CHECK(pfaffian(SkewMatrix::zero(3)) == Scalar());

  SkewMatrix m2 = SkewMatrix::zero(2);
  m2.set(0, 1, Scalar(7));
  CHECK(pfaffian(m2) == Scalar(7));

  // af - be + cd on the upper entries (a,b,c,d,e,f)
  SkewMatrix m4 = upper4(2, 3, 5, 7, 11, 13);
  CHECK(pfaffian(m4) == Scalar(2 * 13 - 3 * 11 + 5 * 7));
}

TEST_CASE("pfaffian squared equals determinant") {
  Rng rng(17);
  for (int trial = 0; trial < 60; trial++) {
    for (int n : {2, 4, 6, 8}) {
      SkewMatrix m = random_skew(rng, random_labels(rng, n, n + 3), trial % 4 == 0);
      Scalar pf = pfaffian(m);
      CHECK(pf * pf == determinant(m));
    }
  }
}

TEST_CASE("expansion and elimination agree") {
  Rng rng(19);
  for (int trial = 0; trial < 20; trial++) {
    SkewMatrix big(random_labels(rng, 14, 20));
    for (int i = 0; i < 14; i++)
      for (int j = i + 1; j < 14; j++) big.set(i, j, random_scalar(rng, false, 4));
    // size 14 dispatches to elimination; check against the memoized
    // expansion of an identically-valued size-12 minor plus expansion row.
    SkewMatrix small = principal_minor(big, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
    std::vector<Scalar> pfs = all_principal_pfaffians(small);
    CHECK(pfs.back() == pfaffian(small));
  }
  // direct cross-check at a size where both paths run
  for (int trial = 0; trial < 10; trial++) {
    SkewMatrix m = random_skew(rng, random_labels(rng, 8, 8), true, 4);
    std::vector<Scalar> pfs = all_principal_pfaffians(m);
    CHECK(pfs.back() == pfaffian(m));
  }
}

TEST_CASE("principal minors") {
  SkewMatrix m = upper4(2, 3, 5, 7, 11, 13);
  CHECK(principal_minor(m, {}) == SkewMatrix());
  CHECK(principal_minor(m, {0, 1, 2, 3}) == m);
  SkewMatrix top = principal_minor(m, {0, 1});
  CHECK(top.size() == 2);
  CHECK(top.at(0, 1) == Scalar(2));
}

TEST_CASE("sub-pfaffian gate") {
  CHECK(sub_pfaffian_gate(SkewMatrix()).coeff(0) == Scalar(1));

  SkewMatrix m2 = SkewMatrix::zero(2);
  m2.set(0, 1, Scalar(0, 1, 0, 0));
  QubitTensor g = sub_pfaffian_gate(m2);
  CHECK(g.coeff(0b00) == Scalar(1));
  CHECK(g.coeff(0b11) == Scalar(0, 1, 0, 0));
  CHECK(g.coeff(0b01) == Scalar());

  QubitTensor z = sub_pfaffian_gate(SkewMatrix::zero(4));
  for (uint32_t mask = 1; mask < 16; mask++) CHECK(z.coeff(mask) == Scalar());
  CHECK(z.coeff(0) == Scalar(1));
}

TEST_CASE("odd-size index sets never appear in sPf images") {
  Rng rng(23);
  for (int trial = 0; trial < 40; trial++) {
    SkewMatrix m = random_skew(rng, random_labels(rng, 5, 8), true);
    QubitTensor g = sub_pfaffian_gate(m);
    for (uint32_t mask = 0; mask < g.coeff_count(); mask++)
      if (std::popcount(mask) & 1) CHECK(g.coeff(mask) == Scalar());
  }
}

TEST_CASE("sub-pfaffian cogate indexes by complements") {
  SkewMatrix m2 = SkewMatrix::zero(2);
  m2.set(0, 1, Scalar(5));
  QubitTensor c = sub_pfaffian_cogate(m2);
  CHECK(c.coeff(0b11) == Scalar(1));
  CHECK(c.coeff(0b00) == Scalar(5));

  QubitTensor z = sub_pfaffian_cogate(SkewMatrix::zero(4));
  CHECK(z.coeff(0b1111) == Scalar(1));
  for (uint32_t mask = 0; mask < 15; mask++) CHECK(z.coeff(mask) == Scalar());
}

TEST_CASE("interleaved direct sum reproduces the 5x5 example") {
  SkewMatrix m({1, 3});
  m.set(0, 1, Scalar(12));
  SkewMatrix n({2, 4, 5});
  n.set(0, 1, Scalar(45));
  n.set(0, 2, Scalar(46));
  n.set(1, 2, Scalar(56));

  SkewMatrix sum = interleaved_direct_sum(m, n);
  REQUIRE(sum.size() == 5);
  CHECK(sum.labels() == std::vector<int>{1, 2, 3, 4, 5});
  // m occupies global positions {0,2}, n occupies {1,3,4}
  CHECK(sum.at(0, 2) == Scalar(12));
  CHECK(sum.at(1, 3) == Scalar(45));
  CHECK(sum.at(1, 4) == Scalar(46));
  CHECK(sum.at(3, 4) == Scalar(56));
  CHECK(sum.at(0, 1) == Scalar());
  CHECK(sum.at(0, 3) == Scalar());
  CHECK(sum.at(0, 4) == Scalar());
  CHECK(sum.at(1, 2) == Scalar());
  CHECK(sum.at(2, 3) == Scalar());
  CHECK(sum.at(2, 4) == Scalar());

  CHECK(interleaved_direct_sum(m, SkewMatrix()) == m);
  SkewMatrix blockl({1, 2}), blockr({3, 4});
  blockl.set(0, 1, Scalar(9));
  blockr.set(0, 1, Scalar(8));
  SkewMatrix block = interleaved_direct_sum(blockl, blockr);
  CHECK(block.at(0, 1) == Scalar(9));
  CHECK(block.at(2, 3) == Scalar(8));
  CHECK(block.at(1, 2) == Scalar());

  CHECK_THROWS_AS(interleaved_direct_sum(m, m), std::invalid_argument);
}

TEST_CASE("direct sum lemma: labeled product matches sPf of the sum") {
  Rng rng(29);
  for (int trial = 0; trial < 120; trial++) {
    int total = 2 + static_cast<int>(rng() % 9);  // up to 10
    int na = static_cast<int>(rng() % (total + 1));
    std::vector<int> universe = random_labels(rng, total, total + 4);
    std::vector<int> la(universe.begin(), universe.begin() + na);
    std::vector<int> lb(universe.begin() + na, universe.end());
    // random disjoint labels, independently shuffled between the two sides
    for (int k = 0; k < total; k++) {
      int other = static_cast<int>(rng() % total);
      bool in_a = k < na, other_in_a = other < na;
      if (in_a != other_in_a) {
        int& x = in_a ? la[k] : lb[k - na];
        int& y = other_in_a ? la[other] : lb[other - na];
        std::swap(x, y);
      }
    }
    std::sort(la.begin(), la.end());
    std::sort(lb.begin(), lb.end());

    SkewMatrix a = random_skew(rng, la, trial % 5 == 0);
    SkewMatrix b = random_skew(rng, lb, trial % 5 == 0);
    SkewMatrix sum = interleaved_direct_sum(a, b);

    CHECK(labeled_tensor_product(sub_pfaffian_gate(a), la, sub_pfaffian_gate(b), lb) ==
          sub_pfaffian_gate(sum));
    CHECK(labeled_tensor_product(sub_pfaffian_cogate(a), la, sub_pfaffian_cogate(b), lb) ==
          sub_pfaffian_cogate(sum));
  }
}

TEST_CASE("twist") {
  SkewMatrix t2 = SkewMatrix::zero(2);
  t2.set(0, 1, Scalar(3));
  CHECK(twist(t2).at(0, 1) == Scalar(3));

  SkewMatrix t4 = SkewMatrix::zero(4);
  t4.set(0, 2, Scalar(4));  // positions 1,3: sign (-1)^5
  CHECK(twist(t4).at(0, 2) == Scalar(-4));

  CHECK(twist(SkewMatrix::zero(4)) == SkewMatrix::zero(4));
}

TEST_CASE("pair value kernel identity") {
  SkewMatrix x2 = SkewMatrix::zero(2), t2 = SkewMatrix::zero(2);
  x2.set(0, 1, Scalar(10));
  t2.set(0, 1, Scalar(3));
  CHECK(pair_value(x2, t2) == Scalar(13));
  CHECK(pairing(sub_pfaffian_cogate(t2), sub_pfaffian_gate(x2)) == Scalar(13));

  CHECK(pair_value(SkewMatrix::zero(4), SkewMatrix::zero(4)) == Scalar());

  Rng rng(31);
  for (int trial = 0; trial < 60; trial++) {
    int n = 2 * (1 + static_cast<int>(rng() % 5));
    SkewMatrix x = random_skew(rng, random_labels(rng, n, n), trial % 3 == 0);
    SkewMatrix t = random_skew(rng, x.labels(), trial % 3 == 0);
    CHECK(pair_value(x, t) == pairing(sub_pfaffian_cogate(t), sub_pfaffian_gate(x)));
  }

  SkewMatrix wrong = SkewMatrix::zero(4);
  CHECK_THROWS_AS(pair_value(x2, wrong), std::invalid_argument);
}

TEST_CASE("cogate of the section-4 matrix") {
  Scalar h(Rational(1, 2));
  SkewMatrix a = upper4(h, h, -h, -h, h, h);
  CHECK(pfaffian(a) == Scalar(Rational(1, 4)));
  QubitTensor c = sub_pfaffian_cogate(a);
  CHECK(c.coeff(0b1111) == Scalar(1));
  CHECK(c.coeff(0b0000) == Scalar(Rational(1, 4)));
}
