#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace boost {

// Boost 1.74's mixed integer == rational templates recurse under C++20 reversed-operator
// lookup. Exact-match overloads take precedence over those templates.
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == rational<std::int64_t>(b); }
inline bool operator==(const rational<std::int64_t>& a, long b) { return a == rational<std::int64_t>(b); }
inline bool operator==(const rational<std::int64_t>& a, long long b) {
  return a == rational<std::int64_t>(static_cast<std::int64_t>(b));
}
inline bool operator==(int a, const rational<std::int64_t>& b) { return b == a; }
inline bool operator==(long a, const rational<std::int64_t>& b) { return b == a; }
inline bool operator==(long long a, const rational<std::int64_t>& b) { return b == a; }

}  // namespace boost

namespace bterm {

/// Exact rational used for every discrepancy value. Always kept in lowest terms.
using Rational = boost::rational<std::int64_t>;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

/// Boundary coefficient 1 - 1/e of a divisor carrying a degree-e cover.
inline Rational boundary_coefficient(std::int64_t e) { return Rational(1) - Rational(1, e); }

/// Closed range [lo, hi] of exact values; a point when lo == hi.
struct RationalRange {
  Rational lo{0};
  Rational hi{0};

  static RationalRange point(Rational v) { return {v, v}; }
  bool is_point() const { return lo == hi; }
  bool operator==(const RationalRange&) const = default;
};

}  // namespace bterm
