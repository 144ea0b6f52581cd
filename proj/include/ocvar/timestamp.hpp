#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ocvar {

/// UTC instant, milliseconds since the Unix epoch.
struct Timestamp {
  std::int64_t millis = 0;

  friend auto operator<=>(const Timestamp&, const Timestamp&) = default;
};

/// Parses an RFC 3339 date-time. A time zone designator ("Z" or a numeric
/// offset) is mandatory; fractional seconds beyond milliseconds are
/// truncated. Throws std::invalid_argument on malformed input.
Timestamp parse_rfc3339(std::string_view text);

/// Canonical form: "YYYY-MM-DDTHH:MM:SS.mmmZ".
std::string format_rfc3339(Timestamp ts);

}  // namespace ocvar
