#pragma once

#include <array>

namespace pfcirc {

// The four generators as ring-generic formulas (used both for exact scalar
// evaluation and for building them as polynomials); 1-based indexing.

namespace detail {

template <class Ring>
Ring det3_formula(const std::array<Ring, 9>& m) {
  return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

template <class Ring>
Ring det4_formula(const std::array<Ring, 16>& m) {
  Ring det = m[0] * det3_formula<Ring>({m[5], m[6], m[7], m[9], m[10], m[11], m[13], m[14], m[15]});
  det = det - m[1] * det3_formula<Ring>({m[4], m[6], m[7], m[8], m[10], m[11], m[12], m[14], m[15]});
  det = det + m[2] * det3_formula<Ring>({m[4], m[5], m[7], m[8], m[9], m[11], m[12], m[13], m[15]});
  det = det - m[3] * det3_formula<Ring>({m[4], m[5], m[6], m[8], m[9], m[10], m[12], m[13], m[14]});
  return det;
}

}  // namespace detail

template <class Ring, class At>
Ring hyperdeterminant_formula(const At& x) {
  return x(1) * x(16) - x(2) * x(15) - x(3) * x(14) + x(4) * x(13) - x(5) * x(12) +
         x(6) * x(11) + x(7) * x(10) - x(8) * x(9);
}

template <class Ring, class At>
Ring det_l_formula(const At& x) {
  return detail::det4_formula<Ring>({x(1), x(5), x(9), x(13),   //
                                     x(2), x(6), x(10), x(14),  //
                                     x(3), x(7), x(11), x(15),  //
                                     x(4), x(8), x(12), x(16)});
}

template <class Ring, class At>
Ring det_m_formula(const At& x) {
  return detail::det4_formula<Ring>({x(1), x(9), x(3), x(11),   //
                                     x(2), x(10), x(4), x(12),  //
                                     x(5), x(13), x(7), x(15),  //
                                     x(6), x(14), x(8), x(16)});
}

template <class Ring, class At>
Ring det_b_formula(const At& x) {
  Ring p1 = x(1) * x(12) + x(4) * x(9) - x(3) * x(10) - x(2) * x(11);
  Ring p2 = x(1) * x(16) + x(4) * x(13) + x(5) * x(12) + x(8) * x(9) - x(3) * x(14) -
            x(2) * x(15) - x(7) * x(10) - x(6) * x(11);
  Ring p3 = x(5) * x(16) + x(8) * x(13) - x(6) * x(15) - x(7) * x(14);
  return detail::det3_formula<Ring>({x(1) * x(4) - x(2) * x(3),
                                     x(1) * x(8) + x(4) * x(5) - x(3) * x(6) - x(2) * x(7),
                                     x(5) * x(8) - x(6) * x(7),
                                     p1, p2, p3,
                                     x(9) * x(12) - x(10) * x(11),
                                     x(9) * x(16) + x(12) * x(13) - x(11) * x(14) - x(10) * x(15),
                                     x(13) * x(16) - x(14) * x(15)});
}

}  // namespace pfcirc
