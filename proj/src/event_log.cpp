// SPDX-License-Identifier: Apache-2.0
#include "rpafit/event_log.hpp"

#include <algorithm>
#include <unordered_set>

#include "rpafit/errors.hpp"

namespace rpafit {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r' || s[b] == '\n')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r' || s[e - 1] == '\n')) --e;
  return std::string(s.substr(b, e - b));
}

std::map<std::string, std::uint64_t> activity_occurrences(const EventLog& log) {
  std::map<std::string, std::uint64_t> counts;
  for (const Case& c : log.cases)
    for (const Event& e : c.events) ++counts[e.activity];
  return counts;
}

EventLog finalize_log(std::vector<Case> cases, std::vector<std::string> warnings) {
  EventLog log;
  log.warnings = std::move(warnings);

  std::unordered_set<std::string> seen_ids;
  seen_ids.reserve(cases.size() * 2);

  for (Case& c : cases) {
    if (c.events.empty()) throw Error("case \"" + c.case_id + "\" has no events");
    if (!seen_ids.insert(c.case_id).second)
      throw Error("duplicate case id \"" + c.case_id + "\"");

    std::stable_sort(c.events.begin(), c.events.end(),
                     [](const Event& a, const Event& b) { return a.timestamp < b.timestamp; });

    for (Event& e : c.events) {
      e.case_id = c.case_id;
      if (trim(e.activity).empty())
        throw Error("case \"" + c.case_id + "\" has an empty activity label");
      if (is_reserved_label(e.activity))
        throw Error("case \"" + c.case_id + "\" uses the reserved activity label \"" +
                    e.activity + "\"");
      log.activity_alphabet.insert(e.activity);
      if (!log.time_span) {
        log.time_span = {e.timestamp, e.timestamp};
      } else {
        log.time_span->first = std::min(log.time_span->first, e.timestamp);
        log.time_span->second = std::max(log.time_span->second, e.timestamp);
      }
    }
  }
  log.cases = std::move(cases);
  return log;
}

}  // namespace rpafit
