#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pfcirc {

// Arbitrary-precision rational, always stored reduced with positive
// denominator (the backing type maintains that canonical form).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& r) { return r.str(); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace pfcirc
