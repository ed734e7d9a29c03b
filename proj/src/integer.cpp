#include "splicecert/integer.hpp"

#include <boost/integer/common_factor_rt.hpp>

namespace splicecert {

std::optional<Integer> parse_integer(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  if (text.empty()) return std::nullopt;
  Integer value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

bool fits_json_number(const Integer& v) {
  static const Integer limit = Integer(1) << 53;
  return abs(v) <= limit;
}

}  // namespace splicecert
