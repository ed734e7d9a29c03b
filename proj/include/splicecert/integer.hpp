#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace splicecert {

/// Exact unbounded integer used for every weight, product and semigroup element.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& v) { return v.str(); }

/// Parses a decimal integer with optional leading '-'. Returns nullopt on any
/// non-digit character or empty input.
std::optional<Integer> parse_integer(std::string_view text);

Integer gcd(const Integer& a, const Integer& b);

/// True when |v| fits the 53-bit exact range of an IEEE double.
bool fits_json_number(const Integer& v);

}  // namespace splicecert
