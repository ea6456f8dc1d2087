// SPDX-License-Identifier: Apache-2.0
#include "rpafit/time.hpp"

#include <chrono>
#include <cstdio>
#include <stdexcept>

namespace rpafit {

namespace {

[[noreturn]] void bad(std::string_view text, std::string_view why) {
  throw std::invalid_argument("cannot parse timestamp \"" + std::string(text) +
                              "\": " + std::string(why));
}

bool read_digits(std::string_view in, std::size_t& pos, int width, std::int64_t& out) {
  if (pos + static_cast<std::size_t>(width) > in.size()) return false;
  std::int64_t v = 0;
  for (int i = 0; i < width; ++i) {
    const char c = in[pos + static_cast<std::size_t>(i)];
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
  }
  pos += static_cast<std::size_t>(width);
  out = v;
  return true;
}

// Zone designator: Z, +HH:MM, -HHMM, +HH. Returns offset minutes east of UTC.
bool read_zone(std::string_view in, std::size_t& pos, int& offset_minutes) {
  if (pos >= in.size()) return false;
  const char c = in[pos];
  if (c == 'Z' || c == 'z') {
    ++pos;
    offset_minutes = 0;
    return true;
  }
  if (c != '+' && c != '-') return false;
  const int sign = c == '-' ? -1 : 1;
  std::size_t p = pos + 1;
  std::int64_t hh = 0, mm = 0;
  if (!read_digits(in, p, 2, hh)) return false;
  if (p < in.size() && in[p] == ':') ++p;
  if (p + 2 <= in.size()) {
    std::size_t q = p;
    if (read_digits(in, q, 2, mm)) p = q;
  }
  pos = p;
  offset_minutes = sign * static_cast<int>(hh * 60 + mm);
  return true;
}

}  // namespace

std::int64_t days_from_civil(const CivilDate& d) {
  const std::chrono::year_month_day ymd{std::chrono::year{d.year},
                                        std::chrono::month{d.month},
                                        std::chrono::day{d.day}};
  if (!ymd.ok()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "invalid civil date %04d-%02u-%02u", d.year, d.month, d.day);
    throw std::invalid_argument(buf);
  }
  return std::chrono::sys_days{ymd}.time_since_epoch().count();
}

CivilDate civil_from_days(std::int64_t days) {
  const std::chrono::year_month_day ymd{
      std::chrono::sys_days{std::chrono::days{days}}};
  return CivilDate{static_cast<int>(ymd.year()),
                   static_cast<unsigned>(ymd.month()),
                   static_cast<unsigned>(ymd.day())};
}

Timestamp parse_timestamp(std::string_view text, std::string_view pattern,
                          int default_offset_minutes) {
  std::int64_t year = 1970, month = 1, day = 1;
  std::int64_t hour = 0, minute = 0, second = 0, millis = 0;
  int offset = default_offset_minutes;

  std::size_t ti = 0;
  std::size_t pi = 0;
  while (pi < pattern.size()) {
    const std::string_view rest = pattern.substr(pi);
    if (rest.starts_with("yyyy")) {
      if (!read_digits(text, ti, 4, year)) bad(text, "expected 4-digit year");
      pi += 4;
    } else if (rest.starts_with("MM")) {
      if (!read_digits(text, ti, 2, month)) bad(text, "expected 2-digit month");
      pi += 2;
    } else if (rest.starts_with("dd")) {
      if (!read_digits(text, ti, 2, day)) bad(text, "expected 2-digit day");
      pi += 2;
    } else if (rest.starts_with("HH")) {
      if (!read_digits(text, ti, 2, hour)) bad(text, "expected 2-digit hour");
      pi += 2;
    } else if (rest.starts_with("mm")) {
      if (!read_digits(text, ti, 2, minute)) bad(text, "expected 2-digit minute");
      pi += 2;
    } else if (rest.starts_with("SSS")) {
      if (!read_digits(text, ti, 3, millis)) bad(text, "expected 3-digit fraction");
      pi += 3;
    } else if (rest.starts_with("ss")) {
      if (!read_digits(text, ti, 2, second)) bad(text, "expected 2-digit second");
      pi += 2;
    } else if (rest.starts_with("zzz")) {
      int z = 0;
      if (read_zone(text, ti, z)) offset = z;  // absent zone keeps the default
      pi += 3;
    } else {
      if (ti >= text.size() || text[ti] != pattern[pi]) bad(text, "literal mismatch");
      ++ti;
      ++pi;
    }
  }
  if (ti != text.size()) bad(text, "trailing characters");
  if (month < 1 || month > 12 || day < 1 || day > 31) bad(text, "date out of range");
  if (hour > 23 || minute > 59 || second > 59) bad(text, "time out of range");

  std::int64_t days;
  try {
    days = days_from_civil(CivilDate{static_cast<int>(year),
                                     static_cast<unsigned>(month),
                                     static_cast<unsigned>(day)});
  } catch (const std::invalid_argument&) {
    bad(text, "impossible calendar date");
  }
  const std::int64_t local_ms = days * kMillisPerDay + hour * kMillisPerHour +
                                minute * kMillisPerMinute + second * 1000 + millis;
  return Timestamp{local_ms - static_cast<std::int64_t>(offset) * kMillisPerMinute};
}

std::string format_timestamp(Timestamp t, std::string_view pattern) {
  const std::int64_t days = floor_div(t.ms, kMillisPerDay);
  const std::int64_t rem = floor_mod(t.ms, kMillisPerDay);
  const CivilDate d = civil_from_days(days);
  const int hour = static_cast<int>(rem / kMillisPerHour);
  const int minute = static_cast<int>(rem % kMillisPerHour / kMillisPerMinute);
  const int second = static_cast<int>(rem % kMillisPerMinute / 1000);
  const int millis = static_cast<int>(rem % 1000);

  std::string out;
  out.reserve(pattern.size() + 8);
  char buf[8];
  std::size_t pi = 0;
  while (pi < pattern.size()) {
    const std::string_view rest = pattern.substr(pi);
    if (rest.starts_with("yyyy")) {
      std::snprintf(buf, sizeof buf, "%04d", d.year);
      out += buf;
      pi += 4;
    } else if (rest.starts_with("MM")) {
      std::snprintf(buf, sizeof buf, "%02u", d.month);
      out += buf;
      pi += 2;
    } else if (rest.starts_with("dd")) {
      std::snprintf(buf, sizeof buf, "%02u", d.day);
      out += buf;
      pi += 2;
    } else if (rest.starts_with("HH")) {
      std::snprintf(buf, sizeof buf, "%02d", hour);
      out += buf;
      pi += 2;
    } else if (rest.starts_with("mm")) {
      std::snprintf(buf, sizeof buf, "%02d", minute);
      out += buf;
      pi += 2;
    } else if (rest.starts_with("SSS")) {
      std::snprintf(buf, sizeof buf, "%03d", millis);
      out += buf;
      pi += 3;
    } else if (rest.starts_with("ss")) {
      std::snprintf(buf, sizeof buf, "%02d", second);
      out += buf;
      pi += 2;
    } else if (rest.starts_with("zzz")) {
      out += 'Z';
      pi += 3;
    } else {
      out += pattern[pi];
      ++pi;
    }
  }
  return out;
}

Timestamp parse_iso8601(std::string_view text) {
  std::size_t pos = 0;
  std::int64_t year, month, day, hour, minute, second;
  auto expect = [&](char c) {
    if (pos >= text.size() || text[pos] != c) bad(text, "not ISO 8601");
    ++pos;
  };
  if (!read_digits(text, pos, 4, year)) bad(text, "not ISO 8601");
  expect('-');
  if (!read_digits(text, pos, 2, month)) bad(text, "not ISO 8601");
  expect('-');
  if (!read_digits(text, pos, 2, day)) bad(text, "not ISO 8601");
  if (pos >= text.size() || (text[pos] != 'T' && text[pos] != ' ')) bad(text, "not ISO 8601");
  ++pos;
  if (!read_digits(text, pos, 2, hour)) bad(text, "not ISO 8601");
  expect(':');
  if (!read_digits(text, pos, 2, minute)) bad(text, "not ISO 8601");
  expect(':');
  if (!read_digits(text, pos, 2, second)) bad(text, "not ISO 8601");

  std::int64_t millis = 0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::int64_t scale = 100;
    int ndigits = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      if (ndigits < 3) millis += (text[pos] - '0') * scale;
      scale /= 10;
      ++ndigits;
      ++pos;
    }
    if (ndigits == 0 || ndigits > 9) bad(text, "bad fractional seconds");
  }
  int offset = 0;
  if (pos < text.size()) {
    if (!read_zone(text, pos, offset)) bad(text, "bad zone designator");
  }
  if (pos != text.size()) bad(text, "trailing characters");
  if (month < 1 || month > 12 || hour > 23 || minute > 59 || second > 59)
    bad(text, "field out of range");

  std::int64_t days;
  try {
    days = days_from_civil(CivilDate{static_cast<int>(year),
                                     static_cast<unsigned>(month),
                                     static_cast<unsigned>(day)});
  } catch (const std::invalid_argument&) {
    bad(text, "impossible calendar date");
  }
  const std::int64_t local_ms = days * kMillisPerDay + hour * kMillisPerHour +
                                minute * kMillisPerMinute + second * 1000 + millis;
  return Timestamp{local_ms - static_cast<std::int64_t>(offset) * kMillisPerMinute};
}

std::string format_iso8601(Timestamp t) {
  return format_timestamp(t, "yyyy-MM-ddTHH:mm:ss.SSSzzz");
}

std::optional<BucketUnit> bucket_unit_from_string(std::string_view s) {
  if (s == "day") return BucketUnit::Day;
  if (s == "week") return BucketUnit::Week;
  if (s == "month") return BucketUnit::Month;
  return std::nullopt;
}

std::string_view to_string(BucketUnit u) {
  switch (u) {
    case BucketUnit::Day: return "day";
    case BucketUnit::Week: return "week";
    case BucketUnit::Month: return "month";
  }
  return "day";
}

std::int64_t bucket_index(Timestamp t, BucketUnit unit, int utc_offset_minutes) {
  const std::int64_t local =
      t.ms + static_cast<std::int64_t>(utc_offset_minutes) * kMillisPerMinute;
  const std::int64_t days = floor_div(local, kMillisPerDay);
  switch (unit) {
    case BucketUnit::Day:
      return days;
    case BucketUnit::Week:
      return floor_div(days + 3, 7);  // Monday-aligned, epoch day was Thursday
    case BucketUnit::Month: {
      const CivilDate d = civil_from_days(days);
      return static_cast<std::int64_t>(d.year - 1970) * 12 + (d.month - 1);
    }
  }
  return days;
}

std::string bucket_label(std::int64_t index, BucketUnit unit) {
  char buf[48];
  switch (unit) {
    case BucketUnit::Day: {
      const CivilDate d = civil_from_days(index);
      std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", d.year, d.month, d.day);
      return buf;
    }
    case BucketUnit::Week: {
      const CivilDate d = civil_from_days(index * 7 - 3);  // the Monday
      std::snprintf(buf, sizeof buf, "wk-%04d-%02u-%02u", d.year, d.month, d.day);
      return buf;
    }
    case BucketUnit::Month: {
      const std::int64_t y = 1970 + floor_div(index, 12);
      const std::int64_t m = floor_mod(index, 12) + 1;
      std::snprintf(buf, sizeof buf, "%04lld-%02lld", static_cast<long long>(y),
                    static_cast<long long>(m));
      return buf;
    }
  }
  return "";
}

}  // namespace rpafit
