#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace xpk {

// Exact arithmetic for every ground-truth comparison (expansion, Cheeger
// constants, density thresholds, game criterion sums).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Exact value of an IEEE double; every finite double is a dyadic rational.
Rational exact(double x);

inline Rational ratio(std::int64_t num, std::int64_t den) {
  return Rational(num, den);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Shortest decimal fraction that rounds to x (1.3 -> 13/10), else the
// simplest fraction that does (1.0 / 60 -> 1/60). Parameters
// arrive as decimal literals; comparing against their binary expansion
// would make e.g. 13 >= 1.3 * 10 false.
Rational decimal(double x);

// "p/q" or "p" when q == 1.
std::string to_string(const Rational& r);

// floor(x) for a double that may carry representation error from a decimal
// literal (0.05 * 60 must floor to 3, not 2).
std::int64_t floor_tolerant(double x);
std::int64_t ceil_tolerant(double x);

}  // namespace xpk
