#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <numeric>
#include <string>
#include <vector>

namespace rotorlab {

// Arbitrary-precision rational. GMP keeps values canonical: gcd(num, den) = 1,
// den > 0, zero is 0/1.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

std::string rat_to_string(const Rat& r);

} // namespace rotorlab
