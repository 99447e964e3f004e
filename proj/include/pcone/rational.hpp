#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace pcone {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. The backend keeps the canonical form at all times:
// denominator > 0, gcd(|numerator|, denominator) == 1, zero is 0/1.
// Equality is therefore structural.
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator_of(const Rational& q) {
    return boost::multiprecision::numerator(q);
}

inline Int denominator_of(const Rational& q) {
    return boost::multiprecision::denominator(q);
}

inline int sign_of(const Rational& q) { return q.sign(); }

/// num/den with the sign moved to the numerator. The backend's own two-value
/// constructor requires a positive denominator outright; this is the one
/// place that normalizes. Throws std::invalid_argument when den == 0.
Rational make_rational(Int num, Int den);

/// Serializes as "p/q" (or just "p" when q == 1), base 10, no whitespace.
std::string to_string(const Rational& q);

/// Parses the "p/q" / "p" form. Throws std::invalid_argument on malformed
/// input or zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace pcone
