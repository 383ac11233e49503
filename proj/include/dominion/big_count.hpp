#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace dominion {

/// Unbounded nonnegative integer used for every count and every closed-form
/// domination number.
using BigCount = boost::multiprecision::cpp_int;

std::string to_decimal(const BigCount& value);

/// Parses a plain decimal string (no sign, no whitespace). Throws
/// Error(ParseError) on anything else.
BigCount parse_decimal(std::string_view text);

BigCount pow2(std::uint64_t exponent);

/// (gamma, zeta): the domination number and the number of minimum
/// dominating sets.
struct DominationSummary {
  BigCount gamma;
  BigCount zeta;

  friend bool operator==(const DominationSummary&, const DominationSummary&) = default;
};

std::ostream& operator<<(std::ostream& os, const DominationSummary& summary);

}  // namespace dominion
