#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace vc1 {

// Exact rational arithmetic. Losses, error rates and expectations are
// computed as exact fractions; floating point appears only in Monte-Carlo
// estimates and in display approximations.
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// "3/10", or just "3" when the denominator is 1.
inline std::string to_string(const Rational& q) {
  return q.get_str();
}

inline double to_double(const Rational& q) {
  return q.get_d();
}

}  // namespace vc1
