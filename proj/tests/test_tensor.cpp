#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pfcirc/random.hpp"
#include "pfcirc/tensor.hpp"

using namespace pfcirc;

TEST_CASE("tensor product basics") {
  QubitTensor k0 = QubitTensor::basis(1, Leg::Ket, 0b0);
  QubitTensor k1 = QubitTensor::basis(1, Leg::Ket, 0b1);
  QubitTensor p = tensor_product(k0, k1);
  CHECK(p.arity() == 2);
  CHECK(p.coeff(0b10) == Scalar(1));  // |01>: leg1=0, leg2=1

  QubitTensor one = QubitTensor::scalar(Scalar(1));
  Rng rng1(3);
  QubitTensor t = random_tensor(rng1, 3, Leg::Ket);
  CHECK(tensor_product(one, t) == t);

  // (|00>+x|11>) (x) (|00>+y|11>)
  Scalar x(3), y(5);
  QubitTensor a = QubitTensor::zero(2, Leg::Ket), b = QubitTensor::zero(2, Leg::Ket);
  a.coeff(0b00) = 1;
  a.coeff(0b11) = x;
  b.coeff(0b00) = 1;
  b.coeff(0b11) = y;
  QubitTensor ab = tensor_product(a, b);
  CHECK(ab.coeff(0b0000) == Scalar(1));
  CHECK(ab.coeff(0b1100) == y);  // |0011>: legs 3,4 set
  CHECK(ab.coeff(0b0011) == x);  // |1100>
  CHECK(ab.coeff(0b1111) == x * y);
}

TEST_CASE("tensor product is associative, pairing bilinear") {
  Rng rng(5);
  for (int trial = 0; trial < 30; trial++) {
    QubitTensor a = random_tensor(rng, 2, Leg::Ket), b = random_tensor(rng, 1, Leg::Ket),
                c = random_tensor(rng, 2, Leg::Ket);
    CHECK(tensor_product(tensor_product(a, b), c) == tensor_product(a, tensor_product(b, c)));

    QubitTensor u = random_tensor(rng, 3, Leg::Bra), v = random_tensor(rng, 3, Leg::Bra);
    QubitTensor w = random_tensor(rng, 3, Leg::Ket);
    Scalar lam = random_scalar(rng);
    CHECK(pairing(u + v, w) == pairing(u, w) + pairing(v, w));
    CHECK(pairing(lam * u, w) == lam * pairing(u, w));
  }
}

TEST_CASE("pairing") {
  QubitTensor b00 = QubitTensor::basis(2, Leg::Bra, 0b00);
  QubitTensor k00 = QubitTensor::basis(2, Leg::Ket, 0b00);
  QubitTensor b11 = QubitTensor::basis(2, Leg::Bra, 0b11);
  CHECK(pairing(b00, k00) == Scalar(1));
  CHECK(pairing(b11, k00) == Scalar());
  CHECK_THROWS_AS(pairing(b00, [&]{ Rng r1(1); return random_tensor(r1, 3, Leg::Ket); }()), std::invalid_argument);
  CHECK_THROWS_AS(pairing(k00, k00), std::invalid_argument);
}

TEST_CASE("parity projections") {
  QubitTensor sw = swap_gate(Leg::Ket);
  CHECK(parity_projection(sw, Parity::Even) == sw);
  CHECK(parity_projection(sw, Parity::Odd).is_zero());

  Rng rng(9);
  for (int trial = 0; trial < 30; trial++) {
    QubitTensor t = random_tensor(rng, 4, Leg::Bra);
    QubitTensor even = parity_projection(t, Parity::Even);
    QubitTensor odd = parity_projection(t, Parity::Odd);
    CHECK(parity_projection(even, Parity::Even) == even);
    CHECK(parity_projection(even, Parity::Odd).is_zero());
    CHECK(even + odd == t);
    // orthogonality: even covector against odd vector pairs to zero
    QubitTensor v = random_tensor(rng, 4, Leg::Ket);
    CHECK(pairing(even, parity_projection(v, Parity::Odd)) == Scalar());
  }
}

TEST_CASE("basis change identity and single-leg action") {
  Rng rng(15);
  QubitTensor t = random_tensor(rng, 3, Leg::Ket);
  std::vector<TwoByTwo> ids(3, TwoByTwo::identity());
  CHECK(apply_basis_change(t, ids) == t);

  QubitTensor k0 = QubitTensor::basis(1, Leg::Ket, 0);
  CHECK(apply_basis_change(k0, std::vector<TwoByTwo>{TwoByTwo::identity()}) == k0);
}

TEST_CASE("basis change matches the printed SWAP expansion") {
  // SWAP(M (x) N (x) I (x) I) even part:
  // ae<0000| + bf<1100| + cg<0011| + bg<1001| + cf<0110| + de<1010| +
  // ah<0101| + dh<1111|
  Scalar a(2), b(3), c(5), d(7), e(11), f(13), g(17), h(19);
  TwoByTwo M{a, b, c, d}, N{e, f, g, h};
  std::vector<TwoByTwo> mats{M, N, TwoByTwo::identity(), TwoByTwo::identity()};
  QubitTensor res = apply_basis_change(swap_gate(Leg::Bra), mats);
  QubitTensor even = parity_projection(res, Parity::Even);
  CHECK(even.coeff(0b0000) == a * e);
  CHECK(even.coeff(0b0011) == b * f);  // <1100|: legs 1,2
  CHECK(even.coeff(0b1100) == c * g);  // <0011|
  CHECK(even.coeff(0b1001) == b * g);  // <1001|: legs 1,4
  CHECK(even.coeff(0b0110) == c * f);  // <0110|
  CHECK(even.coeff(0b0101) == d * e);  // <1010|: legs 1,3
  CHECK(even.coeff(0b1010) == a * h);  // <0101|
  CHECK(even.coeff(0b1111) == d * h);
  int nonzero_even = 0;
  for (uint32_t mask = 0; mask < 16; mask++)
    if (!even.coeff(mask).is_zero()) nonzero_even++;
  CHECK(nonzero_even == 8);
}

TEST_CASE("basis change is functorial") {
  Rng rng(21);
  for (int trial = 0; trial < 25; trial++) {
    QubitTensor t = QubitTensor({Leg::Ket, Leg::Bra, Leg::Ket});
    for (uint32_t mask = 0; mask < 8; mask++) t.coeff(mask) = random_scalar(rng);
    std::vector<TwoByTwo> g1, g2, prod;
    for (int k = 0; k < 3; k++) {
      g1.push_back(random_sl2(rng));
      g2.push_back(random_sl2(rng));
      // ket legs compose as g2*g1, bra legs as g1*g2
      prod.push_back(t.variance()[k] == Leg::Ket ? g2[k] * g1[k] : g1[k] * g2[k]);
    }
    CHECK(apply_basis_change(apply_basis_change(t, g1), g2) == apply_basis_change(t, prod));
  }
}

TEST_CASE("swap gate coefficients") {
  QubitTensor ks = swap_gate(Leg::Ket);
  CHECK(ks.coeff(0b1010) == Scalar(1));  // |0101>
  CHECK(ks.coeff(0b1000) == Scalar());   // |0001>
  // wire-exchange pattern: legs 1,3 agree and legs 2,4 agree
  for (uint32_t mask = 0; mask < 16; mask++) {
    bool cross = ((mask >> 0) & 1) == ((mask >> 2) & 1) && ((mask >> 1) & 1) == ((mask >> 3) & 1);
    CHECK(ks.coeff(mask) == (cross ? Scalar(1) : Scalar()));
  }
  QubitTensor bs = swap_gate(Leg::Bra);
  CHECK(bs.all_bra());
  for (uint32_t mask = 0; mask < 16; mask++) CHECK(bs.coeff(mask) == ks.coeff(mask));
}

TEST_CASE("flatten coefficients") {
  auto xs = flatten_coeffs(swap_gate(Leg::Ket));
  for (int k = 0; k < 16; k++) {
    bool on = k == 0 || k == 5 || k == 10 || k == 15;  // x1, x6, x11, x16
    CHECK(xs[k] == (on ? Scalar(1) : Scalar()));
  }
  auto e0 = flatten_coeffs(QubitTensor::basis(4, Leg::Ket, 0));
  CHECK(e0[0] == Scalar(1));
  auto zs = flatten_coeffs(QubitTensor::zero(4, Leg::Ket));
  for (const Scalar& v : zs) CHECK(v == Scalar());
  CHECK_THROWS_AS(flatten_coeffs(QubitTensor::zero(3, Leg::Ket)), std::invalid_argument);
}

TEST_CASE("leg permutation") {
  Rng rng33(33);
  QubitTensor t = random_tensor(rng33, 3, Leg::Ket);
  std::vector<int> rot{2, 0, 1};
  QubitTensor r = permute_legs(t, rot);
  for (uint32_t mask = 0; mask < 8; mask++) {
    uint32_t src = 0;
    for (int k = 0; k < 3; k++)
      if (mask & (1u << k)) src |= 1u << rot[k];
    CHECK(r.coeff(mask) == t.coeff(src));
  }
}
