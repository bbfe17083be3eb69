#pragma once

#include "pfcirc/scalar.hpp"
#include "pfcirc/skew.hpp"
#include "pfcirc/tensor.hpp"

#include <random>
#include <vector>

namespace pfcirc {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int num_bound = 9, int den_bound = 1) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  return Rational(num(rng), den(rng));
}

// Small random field element; full = false keeps it in Q (cheaper).
inline Scalar random_scalar(Rng& rng, bool full = true, int num_bound = 9, int den_bound = 3) {
  if (!full) return Scalar(random_rational(rng, num_bound, den_bound));
  return Scalar(random_rational(rng, num_bound, den_bound),
                random_rational(rng, num_bound, den_bound),
                random_rational(rng, num_bound, den_bound),
                random_rational(rng, num_bound, den_bound));
}

inline SkewMatrix random_skew(Rng& rng, std::vector<int> labels, bool full_field = false,
                              int num_bound = 9) {
  SkewMatrix m(std::move(labels));
  for (int i = 0; i < m.size(); i++)
    for (int j = i + 1; j < m.size(); j++)
      m.set(i, j, random_scalar(rng, full_field, num_bound, full_field ? 2 : 1));
  return m;
}

inline QubitTensor random_tensor(Rng& rng, int arity, Leg leg, bool full_field = false) {
  QubitTensor t = QubitTensor::zero(arity, leg);
  for (uint32_t m = 0; m < t.coeff_count(); m++) t.coeff(m) = random_scalar(rng, full_field);
  return t;
}

// Exactly unimodular rational 2x2: product of elementary shears.
inline TwoByTwo random_sl2(Rng& rng, int bound = 5) {
  Scalar r(random_rational(rng, bound, 2));
  Scalar s(random_rational(rng, bound, 2));
  Scalar u(random_rational(rng, bound, 2));
  TwoByTwo upper_r{1, r, 0, 1};
  TwoByTwo lower_s{1, 0, s, 1};
  TwoByTwo upper_u{1, u, 0, 1};
  return upper_r * lower_s * upper_u;
}

// Random strictly increasing label set of the given size within [1, universe].
inline std::vector<int> random_labels(Rng& rng, int count, int universe) {
  std::vector<int> all(universe);
  for (int k = 0; k < universe; k++) all[k] = k + 1;
  for (int k = 0; k < count; k++) {
    std::uniform_int_distribution<int> pick(k, universe - 1);
    std::swap(all[k], all[pick(rng)]);
  }
  std::vector<int> out(all.begin(), all.begin() + count);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pfcirc
