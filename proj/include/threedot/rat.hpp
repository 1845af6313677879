#pragma once

#include <boost/rational.hpp>
#include <cmath>
#include <cstdint>
#include <string>

namespace threedot {

// Exact probabilities. Everything a window law can produce here has a small
// denominator (a power of 2 times a power of 3), so 64-bit rationals suffice.
using Rat = boost::rational<long long>;

inline double to_double(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// "3/2^4" when the denominator is a power of two (the exact-output convention
// for dyadic probabilities), otherwise plain "n/d"; integers print bare.
std::string exact_string(const Rat& r);

std::string format_double(double v);

}  // namespace threedot
