// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "rpafit/time.hpp"

namespace rpafit {

/// Scalar attribute value as found in CSV and XES exports.
using AttrValue = std::variant<std::string, std::int64_t, double, bool, Timestamp>;
using AttrMap = std::map<std::string, AttrValue>;

/// Artificial boundary labels used by the directly-follows relation. They are
/// reserved: parsers reject activities carrying these exact names.
inline constexpr std::string_view kStartToken = "START";
inline constexpr std::string_view kEndToken = "END";

inline bool is_reserved_label(std::string_view activity) {
  return activity == kStartToken || activity == kEndToken;
}

struct Event {
  std::string case_id;
  std::string activity;  // non-empty after trimming
  Timestamp timestamp;
  std::optional<std::string> resource;
  AttrMap attributes;

  friend bool operator==(const Event&, const Event&) = default;
};

struct Case {
  std::string case_id;
  std::vector<Event> events;  // non-empty, timestamps non-decreasing
  AttrMap case_attributes;

  Timestamp start() const { return events.front().timestamp; }
  Timestamp end() const { return events.back().timestamp; }

  /// Throughput time: last event minus first event, in milliseconds.
  std::int64_t throughput_ms() const { return end().ms - start().ms; }

  bool contains_activity(std::string_view activity) const {
    for (const Event& e : events)
      if (e.activity == activity) return true;
    return false;
  }

  std::size_t count_activity(std::string_view activity) const {
    std::size_t n = 0;
    for (const Event& e : events)
      if (e.activity == activity) ++n;
    return n;
  }

  friend bool operator==(const Case&, const Case&) = default;
};

/// Immutable after construction; one value per ingested file (or filter
/// result). Safe to share across concurrent readers.
struct EventLog {
  std::vector<Case> cases;
  std::set<std::string> activity_alphabet;
  std::optional<std::pair<Timestamp, Timestamp>> time_span;  // absent iff no cases
  std::vector<std::string> warnings;  // non-fatal ingest diagnostics

  bool empty() const { return cases.empty(); }

  std::size_t total_events() const {
    std::size_t n = 0;
    for (const Case& c : cases) n += c.events.size();
    return n;
  }

  /// Total occurrences of an activity across all cases.
  std::uint64_t occurrences(std::string_view activity) const {
    std::uint64_t n = 0;
    for (const Case& c : cases) n += c.count_activity(activity);
    return n;
  }

  bool operator==(const EventLog& other) const {
    return cases == other.cases && activity_alphabet == other.activity_alphabet &&
           time_span == other.time_span;  // warnings are diagnostics, not content
  }
};

/// Occurrence count per activity label, ordered by label.
std::map<std::string, std::uint64_t> activity_occurrences(const EventLog& log);

/// Assemble an EventLog from parsed cases: sorts events per case by timestamp
/// (stable, so source order breaks ties), derives the alphabet and time span,
/// and checks the model invariants (unique case ids, non-empty cases,
/// non-empty trimmed activity labels, no reserved labels). Throws Error on
/// violation. Case order is preserved.
EventLog finalize_log(std::vector<Case> cases, std::vector<std::string> warnings = {});

std::string trim(std::string_view s);

}  // namespace rpafit
