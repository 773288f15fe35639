#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace hwcls {

/* All offsets in this library are exact rationals; no floating point anywhere.
   Magnitudes stay tiny (desk-scale combinatorics), so 64-bit components
   suffice. */
using Rational = boost::rational<long long>;

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

inline long long to_integer(const Rational& r) { return r.numerator(); }

/* Sign tests via the numerator: boost::rational keeps the denominator
   positive, and mixed rational/int comparisons must be avoided (the
   reversed-candidate rewrite of C++20 makes boost's heterogeneous
   operator== call itself). */
inline int sign(const Rational& r) {
  return (r.numerator() > 0) - (r.numerator() < 0);
}

inline bool is_zero(const Rational& r) { return r.numerator() == 0; }

inline Rational rational_abs(const Rational& r) { return sign(r) < 0 ? -r : r; }

/* Prints `p` for integers and `p/q` otherwise. */
inline std::string to_string(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1)
    s += "/" + std::to_string(r.denominator());
  return s;
}

} // namespace hwcls
