// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace rpafit {

/// UTC instant with millisecond precision.
struct Timestamp {
  std::int64_t ms = 0;  // milliseconds since 1970-01-01T00:00:00Z

  friend constexpr auto operator<=>(const Timestamp&, const Timestamp&) = default;
};

constexpr std::int64_t kMillisPerMinute = 60'000;
constexpr std::int64_t kMillisPerHour = 3'600'000;
constexpr std::int64_t kMillisPerDay = 86'400'000;

constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
  return a - floor_div(a, b) * b;
}

// Calendar date in the proleptic Gregorian calendar.
struct CivilDate {
  int year = 1970;
  unsigned month = 1;  // 1..12
  unsigned day = 1;    // 1..31
};

/// Days since the Unix epoch for a civil date. Throws std::invalid_argument on
/// an impossible date (e.g. Feb 30).
std::int64_t days_from_civil(const CivilDate& d);
CivilDate civil_from_days(std::int64_t days);

/// Weekday of a day index, Monday = 0 .. Sunday = 6.
inline int weekday_of_day(std::int64_t days) {
  return static_cast<int>(floor_mod(days + 3, 7));  // 1970-01-01 was a Thursday
}

/// Parse a timestamp against a pattern. Tokens: yyyy MM dd HH mm ss SSS and
/// zzz (zone designator Z, +HH:MM, -HHMM or +HH; may be absent in the input).
/// Every other pattern character is a literal that must match. Inputs without
/// zone information are shifted by `default_offset_minutes` (minutes east of
/// UTC, 0 = treat as UTC). Throws std::invalid_argument on mismatch.
Timestamp parse_timestamp(std::string_view text, std::string_view pattern,
                          int default_offset_minutes = 0);

/// Format a UTC timestamp with the same token set (zzz emits "Z").
std::string format_timestamp(Timestamp t, std::string_view pattern);

/// Lenient ISO 8601 parser: "2018-03-06T07:44:00", optional fractional
/// seconds (1..9 digits), optional zone designator, 'T' or ' ' separator.
Timestamp parse_iso8601(std::string_view text);

/// "2018-03-06T07:44:00.000Z"
std::string format_iso8601(Timestamp t);

enum class BucketUnit { Day, Week, Month };

std::optional<BucketUnit> bucket_unit_from_string(std::string_view s);
std::string_view to_string(BucketUnit u);

/// Index of the calendar bucket containing `t`, evaluated on the local clock
/// `utc_offset_minutes` east of UTC. Day buckets are local calendar days,
/// week buckets start on Monday, month buckets are calendar months.
std::int64_t bucket_index(Timestamp t, BucketUnit unit, int utc_offset_minutes = 0);

/// Human-readable bucket key: "2018-03-06", "wk-2018-03-05" (the Monday),
/// or "2018-03".
std::string bucket_label(std::int64_t index, BucketUnit unit);

/// Number of buckets a closed timestamp span intersects.
inline std::int64_t buckets_in_span(Timestamp first, Timestamp last, BucketUnit unit,
                                    int utc_offset_minutes = 0) {
  return bucket_index(last, unit, utc_offset_minutes) -
         bucket_index(first, unit, utc_offset_minutes) + 1;
}

/// Weekly working window on a local clock. `weekdays` is indexed Monday = 0.
/// An instant is inside iff its local weekday is enabled and its local
/// time of day lies in [start_minute, end_minute).
struct BusinessHours {
  std::array<bool, 7> weekdays = {true, true, true, true, true, false, false};
  int start_minute = 8 * 60;
  int end_minute = 18 * 60;
  int utc_offset_minutes = 0;

  bool contains(Timestamp t) const {
    const std::int64_t local = t.ms + static_cast<std::int64_t>(utc_offset_minutes) * kMillisPerMinute;
    const int wd = weekday_of_day(floor_div(local, kMillisPerDay));
    if (!weekdays[static_cast<std::size_t>(wd)]) return false;
    const int minute = static_cast<int>(floor_mod(local, kMillisPerDay) / kMillisPerMinute);
    return minute >= start_minute && minute < end_minute;
  }
};

}  // namespace rpafit
