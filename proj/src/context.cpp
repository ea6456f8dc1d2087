// SPDX-License-Identifier: Apache-2.0
#include "rpafit/context.hpp"

#include <algorithm>

#include "rpafit/errors.hpp"

namespace rpafit {

Dfg build_dfg(const EventLog& log) {
  if (log.empty()) throw EmptyLogError();

  Dfg dfg;
  const std::string start{kStartToken};
  const std::string end{kEndToken};
  for (const Case& c : log.cases) {
    ++dfg[{start, c.events.front().activity}];
    for (std::size_t i = 0; i + 1 < c.events.size(); ++i)
      ++dfg[{c.events[i].activity, c.events[i + 1].activity}];
    ++dfg[{c.events.back().activity, end}];
  }
  return dfg;
}

ActivityContext activity_context(const Dfg& dfg, const std::string& activity) {
  ActivityContext ctx;
  ctx.activity = activity;
  for (const auto& [edge, count] : dfg) {
    if (edge.second == activity) {
      ctx.predecessors[edge.first] += count;
      ctx.total_in += count;
    }
    if (edge.first == activity) {
      ctx.successors[edge.second] += count;
      ctx.total_out += count;
    }
  }
  if (ctx.total_in == 0 && ctx.total_out == 0) throw UnknownActivityError(activity);
  return ctx;
}

double coverage(const ActivityContext& context, const std::set<std::string>& valid,
                Direction direction) {
  const auto& dist = direction == Direction::In ? context.predecessors : context.successors;
  const std::uint64_t total = direction == Direction::In ? context.total_in : context.total_out;
  if (total == 0)
    throw ZeroTotalError("activity \"" + context.activity + "\" has no " +
                         (direction == Direction::In ? "incoming" : "outgoing") + " transitions");
  std::uint64_t covered = 0;
  for (const auto& [label, count] : dist)
    if (valid.count(label)) covered += count;
  return static_cast<double>(covered) / static_cast<double>(total);
}

std::set<std::string> top_labels(const std::map<std::string, std::uint64_t>& distribution,
                                 std::size_t k) {
  std::vector<std::pair<std::string, std::uint64_t>> ranked(distribution.begin(),
                                                            distribution.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::set<std::string> out;
  for (std::size_t i = 0; i < ranked.size() && i < k; ++i) out.insert(ranked[i].first);
  return out;
}

}  // namespace rpafit
