// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

// boost::rational's mixed integer equality forwards to itself once C++20
// considers reversed candidates, which recurses without end. Exact
// non-template overloads win overload resolution and break the cycle.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == static_cast<std::int64_t>(b); }
}  // namespace boost

namespace nks {

/// Exact rational scalar used throughout the library. Magnitudes stay small
/// (labels and structure constants are single digits), so 64-bit numerators
/// are ample.
using Rational = boost::rational<std::int64_t>;

/// Human-readable form: "12", "-3/2".
std::string format(const Rational& r);

/// Serialized form, always "p/q" (q > 0), e.g. "12/1", "-3/2".
std::string serialize(const Rational& r);

/// Accepts "p", "p/q" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace nks
