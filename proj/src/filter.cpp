// SPDX-License-Identifier: Apache-2.0
#include "rpafit/filter.hpp"

#include <cstdio>

namespace rpafit {

std::string attribute_text(const AttrValue& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&v)) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", *d);
    return buf;
  }
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return format_iso8601(std::get<Timestamp>(v));
}

bool CaseFilter::matches(const Case& c) const {
  for (const auto& [key, expected] : attribute_equals) {
    const auto it = c.case_attributes.find(key);
    if (it == c.case_attributes.end()) return false;
    if (attribute_text(it->second) != expected) return false;
  }
  if (window_begin && c.start() < *window_begin) return false;
  if (window_end && !(c.start() < *window_end)) return false;
  return true;
}

EventLog filter_cases(const EventLog& log, const CaseFilter& filter) {
  std::vector<std::string> warnings;
  for (const auto& [key, expected] : filter.attribute_equals) {
    bool known = false;
    for (const Case& c : log.cases) {
      if (c.case_attributes.count(key)) {
        known = true;
        break;
      }
    }
    if (!known)
      warnings.push_back("filter attribute \"" + key + "\" occurs in no case");
  }

  std::vector<Case> kept;
  for (const Case& c : log.cases)
    if (filter.matches(c)) kept.push_back(c);
  return finalize_log(std::move(kept), std::move(warnings));
}

}  // namespace rpafit
