// SPDX-License-Identifier: Apache-2.0
#include "rpafit/variants.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "rpafit/errors.hpp"

namespace rpafit {

VariantTable build_variant_table(const EventLog& log) {
  if (log.empty()) throw EmptyLogError();

  std::map<std::vector<std::string>, std::vector<std::string>> groups;
  std::vector<std::string> sequence;
  for (const Case& c : log.cases) {
    sequence.clear();
    sequence.reserve(c.events.size());
    for (const Event& e : c.events) sequence.push_back(e.activity);
    groups[sequence].push_back(c.case_id);
  }

  VariantTable table;
  table.total_cases = log.cases.size();
  table.variants.reserve(groups.size());
  for (auto& [seq, ids] : groups) {
    Variant v;
    v.sequence = seq;
    v.count = ids.size();
    v.case_ids = std::move(ids);
    table.variants.push_back(std::move(v));
  }
  std::sort(table.variants.begin(), table.variants.end(), [](const Variant& a, const Variant& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.sequence < b.sequence;
  });
  return table;
}

EventLog coverage_filter(const VariantTable& table, const EventLog& log, double fraction) {
  if (!(fraction > 0.0) || fraction > 1.0) throw InvalidFractionError(fraction);

  // Minimal prefix with cumulative share >= fraction. The epsilon keeps exact
  // decimal fractions (0.9 of 10 cases) from spilling into the next variant.
  const double total = static_cast<double>(table.total_cases);
  const double threshold = fraction * total - 1e-9 * total;
  std::unordered_set<std::string> kept_ids;
  std::uint64_t cumulative = 0;
  for (const Variant& v : table.variants) {
    if (static_cast<double>(cumulative) >= threshold) break;
    cumulative += v.count;
    kept_ids.insert(v.case_ids.begin(), v.case_ids.end());
  }

  std::vector<Case> kept;
  kept.reserve(kept_ids.size());
  for (const Case& c : log.cases)
    if (kept_ids.count(c.case_id)) kept.push_back(c);
  return finalize_log(std::move(kept));
}

std::vector<Variant> variants_containing(const VariantTable& table, const std::string& activity) {
  std::vector<Variant> out;
  for (const Variant& v : table.variants)
    if (std::find(v.sequence.begin(), v.sequence.end(), activity) != v.sequence.end())
      out.push_back(v);
  return out;
}

}  // namespace rpafit
