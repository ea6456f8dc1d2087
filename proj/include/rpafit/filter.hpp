// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rpafit/event_log.hpp"

namespace rpafit {

/// Case selection predicate: every attribute equality must hold, and when a
/// window is set the case's first event must fall inside [begin, end).
struct CaseFilter {
  std::vector<std::pair<std::string, std::string>> attribute_equals;
  std::optional<Timestamp> window_begin;
  std::optional<Timestamp> window_end;

  bool matches(const Case& c) const;
};

/// Sublog of matching cases, original order preserved; the input log is not
/// modified. An empty result is valid. Attribute names present in no case at
/// all are recorded as warnings on the result.
EventLog filter_cases(const EventLog& log, const CaseFilter& filter);

/// Canonical text form of an attribute value, used for equality filters.
std::string attribute_text(const AttrValue& v);

}  // namespace rpafit
