#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace carebench {

using UtcTime = std::chrono::sys_seconds;

// SCADA statistics are 10-minute aggregates; all timestamps sit on this grid.
inline constexpr std::chrono::seconds kSampleInterval{600};

// Parses "YYYY-MM-DD HH:MM:SS" or "YYYY-MM-DDTHH:MM:SS", optional trailing 'Z'.
// Returns nullopt on malformed input. Timestamps are treated as UTC.
std::optional<UtcTime> parse_timestamp(std::string_view text);

// Canonical form written by this library: "YYYY-MM-DDTHH:MM:SSZ".
std::string format_timestamp(UtcTime t);

inline bool on_sample_grid(UtcTime t) {
  return t.time_since_epoch() % kSampleInterval == std::chrono::seconds{0};
}

}  // namespace carebench
