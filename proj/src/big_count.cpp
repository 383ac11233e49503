#include "dominion/big_count.hpp"

#include "dominion/error.hpp"

namespace dominion {

std::string to_decimal(const BigCount& value) { return value.str(); }

BigCount parse_decimal(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty decimal string");
  BigCount value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw Error(ErrorKind::ParseError, "not a decimal integer: '" + std::string(text) + "'");
    }
    value = value * 10 + (ch - '0');
  }
  return value;
}

BigCount pow2(std::uint64_t exponent) {
  BigCount value = 0;
  boost::multiprecision::bit_set(value, exponent);
  return value;
}

std::ostream& operator<<(std::ostream& os, const DominationSummary& summary) {
  return os << "(gamma=" << summary.gamma << ", zeta=" << summary.zeta << ")";
}

}  // namespace dominion
