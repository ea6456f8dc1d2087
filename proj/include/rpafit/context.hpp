// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rpafit/event_log.hpp"

namespace rpafit {

/// Directly-follows counts over adjacent activity pairs, with artificial
/// START/END boundary edges contributed once per case.
using Dfg = std::map<std::pair<std::string, std::string>, std::uint64_t>;

/// Throws EmptyLogError on an empty log.
Dfg build_dfg(const EventLog& log);

/// Incoming and outgoing transition counts of one activity. total_in and
/// total_out both equal the activity's occurrence count.
struct ActivityContext {
  std::string activity;
  std::map<std::string, std::uint64_t> predecessors;  // may include START
  std::map<std::string, std::uint64_t> successors;    // may include END
  std::uint64_t total_in = 0;
  std::uint64_t total_out = 0;
};

/// Throws UnknownActivityError when the activity appears in no edge.
ActivityContext activity_context(const Dfg& dfg, const std::string& activity);

enum class Direction { In, Out };

/// Share of the activity's transitions in the chosen direction whose label
/// lies in `valid`. Throws ZeroTotalError when the activity never occurs.
double coverage(const ActivityContext& context, const std::set<std::string>& valid,
                Direction direction);

/// The k most frequent labels of a distribution, count descending, ties by
/// label. Used to auto-derive compliant predecessor/successor sets.
std::set<std::string> top_labels(const std::map<std::string, std::uint64_t>& distribution,
                                 std::size_t k);

}  // namespace rpafit
