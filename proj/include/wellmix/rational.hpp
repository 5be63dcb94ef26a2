#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace wellmix {

// Exact arithmetic types. Probabilities stay rational end to end; only the
// final log evaluation ever touches floating point.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }
inline double to_double(const BigInt& n) { return n.convert_to<double>(); }

// "num/den" rendering used by all JSON report surfaces.
inline std::string rat_str(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

inline BigInt pow2(unsigned bits) { return BigInt(1) << bits; }

}  // namespace wellmix
