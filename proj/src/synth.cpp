// SPDX-License-Identifier: Apache-2.0
#include "rpafit/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include <json.hpp>

#include "rpafit/errors.hpp"

namespace rpafit {

namespace {

// Unbiased bound sampling with a stable draw count is not needed here; the
// modulo-rejection loop keeps results identical across platforms because
// mt19937_64 itself is pinned by the standard.
std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % n;
}

template <typename T>
void shuffle_vec(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[rng_below(rng, i)]);
}

std::int64_t sample_gap(const GapSpec& gap, std::mt19937_64& rng) {
  if (gap.min_ms == gap.max_ms) return gap.min_ms;
  return gap.min_ms + static_cast<std::int64_t>(
                          rng_below(rng, static_cast<std::uint64_t>(gap.max_ms - gap.min_ms) + 1));
}

// p of n, rounded to the nearest whole count.
std::uint64_t quota(double p, std::uint64_t n) {
  return static_cast<std::uint64_t>(std::llround(p * static_cast<double>(n)));
}

// Largest-remainder apportionment of n_cases across template probabilities.
std::vector<std::uint64_t> template_counts(const std::vector<VariantTemplate>& templates,
                                           std::uint64_t n_cases) {
  std::vector<std::uint64_t> counts(templates.size(), 0);
  std::vector<std::pair<double, std::size_t>> remainders;
  std::uint64_t assigned = 0;
  for (std::size_t i = 0; i < templates.size(); ++i) {
    const double exact = templates[i].probability * static_cast<double>(n_cases);
    counts[i] = static_cast<std::uint64_t>(exact);
    assigned += counts[i];
    remainders.emplace_back(exact - static_cast<double>(counts[i]), i);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t k = 0; assigned < n_cases; ++k, ++assigned) {
    ++counts[remainders[k % remainders.size()].second];
  }
  return counts;
}

std::int64_t local_day(Timestamp t, const BusinessHours& bh) {
  return floor_div(t.ms + static_cast<std::int64_t>(bh.utc_offset_minutes) * kMillisPerMinute,
                   kMillisPerDay);
}

Timestamp at_local_minute(std::int64_t day, int minute, const BusinessHours& bh) {
  return Timestamp{day * kMillisPerDay + static_cast<std::int64_t>(minute) * kMillisPerMinute -
                   static_cast<std::int64_t>(bh.utc_offset_minutes) * kMillisPerMinute};
}

bool is_business_day(std::int64_t day, const BusinessHours& bh) {
  return bh.weekdays[static_cast<std::size_t>(weekday_of_day(day))];
}

// Smallest t' >= t inside business hours.
Timestamp force_in(Timestamp t, const BusinessHours& bh) {
  if (bh.contains(t)) return t;
  std::int64_t day = local_day(t, bh);
  const std::int64_t minute =
      floor_mod(t.ms + static_cast<std::int64_t>(bh.utc_offset_minutes) * kMillisPerMinute,
                kMillisPerDay) /
      kMillisPerMinute;
  if (!(is_business_day(day, bh) && minute < bh.start_minute)) {
    ++day;
    while (!is_business_day(day, bh)) ++day;
  }
  return at_local_minute(day, bh.start_minute, bh);
}

// Smallest convenient t' >= t outside business hours.
Timestamp force_out(Timestamp t, const BusinessHours& bh) {
  if (!bh.contains(t)) return t;
  const std::int64_t day = local_day(t, bh);
  Timestamp candidate = bh.end_minute < 24 * 60 ? at_local_minute(day, bh.end_minute, bh)
                                                : at_local_minute(day + 1, 0, bh);
  while (bh.contains(candidate)) candidate.ms += kMillisPerDay;
  return candidate;
}

void check_fraction(const char* field, double value) {
  if (!(value >= 0.0 && value <= 1.0))
    throw InvalidSpecError(field, "must lie in [0, 1]");
}

}  // namespace

std::string resolved_target(const SynthSpec& spec) {
  if (!spec.target_activity.empty()) return spec.target_activity;
  if (!spec.variant_templates.empty() && !spec.variant_templates.front().sequence.empty())
    return spec.variant_templates.front().sequence.front();
  return {};
}

void validate(const SynthSpec& spec) {
  if (spec.n_cases == 0) throw InvalidSpecError("n_cases", "must be at least 1");
  if (spec.variant_templates.empty())
    throw InvalidSpecError("variant_templates", "at least one template required");
  double prob_sum = 0.0;
  for (const VariantTemplate& t : spec.variant_templates) {
    if (t.sequence.empty())
      throw InvalidSpecError("variant_templates", "template sequence must not be empty");
    for (const std::string& a : t.sequence)
      if (is_reserved_label(a))
        throw InvalidSpecError("variant_templates", "activity label \"" + a + "\" is reserved");
    if (!(t.probability >= 0.0 && t.probability <= 1.0))
      throw InvalidSpecError("variant_templates", "probability must lie in [0, 1]");
    prob_sum += t.probability;
  }
  if (std::abs(prob_sum - 1.0) > 1e-9)
    throw InvalidSpecError("variant_templates", "probabilities must sum to 1");
  check_fraction("rework_probability", spec.rework_probability);
  check_fraction("terminal_failure_probability", spec.terminal_failure_probability);
  check_fraction("robot_user_share", spec.robot_user_share);
  if (spec.out_of_hours_share) check_fraction("out_of_hours_share", *spec.out_of_hours_share);

  const std::string target = resolved_target(spec);
  if (target.empty())
    throw InvalidSpecError("target_activity", "no target activity and none derivable");
  if (is_reserved_label(target))
    throw InvalidSpecError("target_activity", "label \"" + target + "\" is reserved");
  bool target_in_templates = false;
  for (const VariantTemplate& t : spec.variant_templates)
    for (const std::string& a : t.sequence)
      if (a == target) target_in_templates = true;
  if (!target_in_templates)
    throw InvalidSpecError("target_activity", "\"" + target + "\" occurs in no template");

  if (spec.terminal_failure_probability > 0.0) {
    if (spec.failure_terminal_activity.empty())
      throw InvalidSpecError("failure_terminal_activity",
                             "required when terminal failures are planted");
    if (spec.failure_terminal_activity == target)
      throw InvalidSpecError("failure_terminal_activity",
                             "must differ from the target activity");
    if (is_reserved_label(spec.failure_terminal_activity))
      throw InvalidSpecError("failure_terminal_activity", "label is reserved");
  }
  if (spec.robot_user_share > 0.0 && spec.robot_user_pool.empty())
    throw InvalidSpecError("robot_user_pool", "required when robot_user_share > 0");

  if (spec.inter_event_gap.min_ms < 0 || spec.inter_event_gap.min_ms > spec.inter_event_gap.max_ms)
    throw InvalidSpecError("inter_event_gap", "needs 0 <= min <= max");
  if (spec.start_window.first > spec.start_window.second)
    throw InvalidSpecError("start_window", "begin must not exceed end");
  if (spec.start_stride_ms < 0) throw InvalidSpecError("start_stride_ms", "must not be negative");

  if (spec.out_of_hours_share) {
    const BusinessHours& bh = spec.business_hours;
    if (bh.start_minute >= bh.end_minute)
      throw InvalidSpecError("business_hours", "start must precede end");
    bool any_business = false, any_free = false;
    for (bool d : bh.weekdays) (d ? any_business : any_free) = true;
    if (!any_business)
      throw InvalidSpecError("business_hours", "placement needs at least one business day");
    if (!any_free && bh.start_minute == 0 && bh.end_minute == 24 * 60)
      throw InvalidSpecError("business_hours",
                             "placement needs some time outside business hours");
  }
  if (spec.system_pool.size() > 0)
    for (const std::string& s : spec.system_pool)
      if (s.empty()) throw InvalidSpecError("system_pool", "system ids must not be empty");
  if (spec.system_attribute_key.empty() && !spec.system_pool.empty())
    throw InvalidSpecError("system_attribute_key", "required when system_pool is set");
}

std::pair<EventLog, GroundTruthLedger> generate(const SynthSpec& spec) {
  validate(spec);
  std::mt19937_64 rng(spec.seed);
  const std::string target = resolved_target(spec);

  // Template assignment by quota, shuffled for interleaving.
  const std::vector<std::uint64_t> counts = template_counts(spec.variant_templates, spec.n_cases);
  std::vector<std::size_t> assignment;
  assignment.reserve(spec.n_cases);
  for (std::size_t t = 0; t < counts.size(); ++t)
    for (std::uint64_t k = 0; k < counts[t]; ++k) assignment.push_back(t);
  shuffle_vec(assignment, rng);

  // Final per-case sequences: template, plus planted rework and terminal
  // failures on disjoint target-containing case sets.
  std::vector<std::vector<std::string>> sequences(spec.n_cases);
  std::vector<std::size_t> target_cases;
  for (std::size_t i = 0; i < spec.n_cases; ++i) {
    sequences[i] = spec.variant_templates[assignment[i]].sequence;
    if (std::find(sequences[i].begin(), sequences[i].end(), target) != sequences[i].end())
      target_cases.push_back(i);
  }
  const std::uint64_t rework_quota = quota(spec.rework_probability, target_cases.size());
  const std::uint64_t terminal_quota =
      quota(spec.terminal_failure_probability, target_cases.size());
  if (rework_quota + terminal_quota > target_cases.size())
    throw InvalidSpecError("rework_probability",
                           "rework and terminal plantings exceed the target-containing cases");
  std::vector<std::size_t> planting_order = target_cases;
  shuffle_vec(planting_order, rng);
  std::set<std::size_t> rework_set(planting_order.begin(),
                                   planting_order.begin() + rework_quota);
  std::set<std::size_t> terminal_set(planting_order.begin() + rework_quota,
                                     planting_order.begin() + rework_quota + terminal_quota);
  for (std::size_t i : rework_set) {
    auto it = std::find(sequences[i].begin(), sequences[i].end(), target);
    sequences[i].insert(it + 1, target);
  }
  for (std::size_t i : terminal_set) sequences[i].push_back(spec.failure_terminal_activity);

  // Target execution slots in emission order, for the robot / out-of-hours
  // quotas.
  std::vector<std::pair<std::size_t, std::size_t>> target_slots;  // (case, event index)
  for (std::size_t i = 0; i < spec.n_cases; ++i)
    for (std::size_t j = 0; j < sequences[i].size(); ++j)
      if (sequences[i][j] == target) target_slots.emplace_back(i, j);

  const std::uint64_t robot_quota = quota(spec.robot_user_share, target_slots.size());
  std::vector<std::size_t> slot_order(target_slots.size());
  std::iota(slot_order.begin(), slot_order.end(), 0);
  shuffle_vec(slot_order, rng);
  std::set<std::size_t> robot_slots(slot_order.begin(), slot_order.begin() + robot_quota);

  std::set<std::size_t> out_slots;
  if (spec.out_of_hours_share) {
    const std::uint64_t out_quota = quota(*spec.out_of_hours_share, target_slots.size());
    std::vector<std::size_t> order(target_slots.size());
    std::iota(order.begin(), order.end(), 0);
    shuffle_vec(order, rng);
    out_slots.insert(order.begin(), order.begin() + out_quota);
  }
  // slot lookup: (case, event) -> slot ordinal
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> slot_of;
  for (std::size_t s = 0; s < target_slots.size(); ++s) slot_of[target_slots[s]] = s;

  std::vector<std::string> human_order = spec.user_pool;
  shuffle_vec(human_order, rng);

  const std::int64_t window_span = spec.start_window.second.ms - spec.start_window.first.ms;
  const std::int64_t stride =
      spec.start_stride_ms > 0
          ? spec.start_stride_ms
          : (spec.n_cases > 1 ? window_span / static_cast<std::int64_t>(spec.n_cases - 1) : 0);

  GroundTruthLedger ledger;
  ledger.target_activity = target;
  ledger.n_cases = spec.n_cases;
  ledger.bucket_unit = BucketUnit::Day;
  ledger.bucket_utc_offset_minutes = spec.business_hours.utc_offset_minutes;

  std::vector<Case> cases;
  cases.reserve(spec.n_cases);
  std::size_t human_counter = 0, robot_counter = 0, filler_counter = 0;
  std::optional<Timestamp> span_min, span_max;

  for (std::size_t i = 0; i < spec.n_cases; ++i) {
    Case c;
    c.case_id = "case_" + std::to_string(i + 1);
    const std::vector<std::string>& seq = sequences[i];
    const bool has_target = std::find(seq.begin(), seq.end(), target) != seq.end();

    if (!spec.system_pool.empty()) {
      const std::string& system = spec.system_pool[i % spec.system_pool.size()];
      c.case_attributes[spec.system_attribute_key] = system;
      if (has_target) ++ledger.system_counts[system];
    }

    Timestamp cursor{spec.start_window.first.ms + static_cast<std::int64_t>(i) * stride};
    for (std::size_t j = 0; j < seq.size(); ++j) {
      Timestamp t = j == 0 ? cursor
                           : Timestamp{cursor.ms + sample_gap(spec.inter_event_gap, rng)};
      const bool is_target = seq[j] == target;
      if (is_target && spec.out_of_hours_share) {
        const std::size_t slot = slot_of.at({i, j});
        t = out_slots.contains(slot) ? force_out(t, spec.business_hours)
                                     : force_in(t, spec.business_hours);
        if (t < cursor) t = cursor;  // adjustments only ever move forward
      }
      cursor = t;

      Event e;
      e.case_id = c.case_id;
      e.activity = seq[j];
      e.timestamp = t;
      if (is_target) {
        const std::size_t slot = slot_of.at({i, j});
        if (robot_slots.contains(slot)) {
          e.resource = spec.robot_user_pool[robot_counter % spec.robot_user_pool.size()];
          ++robot_counter;
          ++ledger.robot_target_events;
        } else if (!human_order.empty()) {
          e.resource = human_order[human_counter % human_order.size()];
          ++human_counter;
        }
        ++ledger.n_target_events;
        if (e.resource)
          ++ledger.user_counts[*e.resource];
        else
          ++ledger.missing_resource_target_events;
        ++ledger.target_per_bucket[bucket_index(t, BucketUnit::Day,
                                                spec.business_hours.utc_offset_minutes)];
        if (!spec.business_hours.contains(t)) {
          ++ledger.out_of_hours_target_events;
          ledger.out_of_hours_event_ids.push_back(c.case_id + "#" + std::to_string(j));
        }
      } else if (!human_order.empty()) {
        e.resource = human_order[filler_counter % human_order.size()];
        ++filler_counter;
      }
      if (!span_min || t < *span_min) span_min = t;
      if (!span_max || t > *span_max) span_max = t;
      c.events.push_back(std::move(e));
      ++ledger.n_events;
    }

    ++ledger.variant_counts[seq];
    ledger.dfg_counts[{std::string(kStartToken), seq.front()}]++;
    for (std::size_t j = 0; j + 1 < seq.size(); ++j) ledger.dfg_counts[{seq[j], seq[j + 1]}]++;
    ledger.dfg_counts[{seq.back(), std::string(kEndToken)}]++;

    const std::int64_t throughput = c.events.back().timestamp.ms - c.events.front().timestamp.ms;
    if (has_target) {
      ++ledger.n_cases_with_target;
      ledger.with_target_throughput_ms_sum += throughput;
      ++ledger.with_target_case_count;
      if (rework_set.contains(i)) ledger.rework_case_ids.push_back(c.case_id);
      if (terminal_set.contains(i)) ledger.terminal_case_ids.push_back(c.case_id);
    } else {
      ledger.without_target_throughput_ms_sum += throughput;
      ++ledger.without_target_case_count;
    }
    cases.push_back(std::move(c));
  }

  ledger.span_first_ms = span_min->ms;
  ledger.span_last_ms = span_max->ms;
  ledger.n_buckets_in_span =
      buckets_in_span(*span_min, *span_max, BucketUnit::Day,
                      spec.business_hours.utc_offset_minutes);

  return {finalize_log(std::move(cases)), std::move(ledger)};
}

std::string ledger_to_json(const GroundTruthLedger& ledger) {
  nlohmann::ordered_json root;
  root["target_activity"] = ledger.target_activity;
  root["n_cases"] = ledger.n_cases;
  root["n_events"] = ledger.n_events;
  auto variants = nlohmann::ordered_json::array();
  for (const auto& [sequence, count] : ledger.variant_counts)
    variants.push_back({{"sequence", sequence}, {"count", count}});
  root["variant_counts"] = variants;
  root["rework_case_ids"] = ledger.rework_case_ids;
  root["terminal_case_ids"] = ledger.terminal_case_ids;
  root["n_cases_with_target"] = ledger.n_cases_with_target;
  root["n_target_events"] = ledger.n_target_events;
  root["bucket_unit"] = std::string(to_string(ledger.bucket_unit));
  root["bucket_utc_offset_minutes"] = ledger.bucket_utc_offset_minutes;
  auto buckets = nlohmann::ordered_json::array();
  for (const auto& [index, count] : ledger.target_per_bucket)
    buckets.push_back({{"bucket", index}, {"count", count}});
  root["target_per_bucket"] = buckets;
  root["span_first_ms"] = ledger.span_first_ms;
  root["span_last_ms"] = ledger.span_last_ms;
  root["n_buckets_in_span"] = ledger.n_buckets_in_span;
  root["user_counts"] = ledger.user_counts;
  root["robot_target_events"] = ledger.robot_target_events;
  root["missing_resource_target_events"] = ledger.missing_resource_target_events;
  root["out_of_hours_event_ids"] = ledger.out_of_hours_event_ids;
  root["out_of_hours_target_events"] = ledger.out_of_hours_target_events;
  auto dfg = nlohmann::ordered_json::array();
  for (const auto& [edge, count] : ledger.dfg_counts)
    dfg.push_back({{"from", edge.first}, {"to", edge.second}, {"count", count}});
  root["dfg_counts"] = dfg;
  root["with_target_throughput_ms_sum"] = ledger.with_target_throughput_ms_sum;
  root["with_target_case_count"] = ledger.with_target_case_count;
  root["without_target_throughput_ms_sum"] = ledger.without_target_throughput_ms_sum;
  root["without_target_case_count"] = ledger.without_target_case_count;
  root["system_counts"] = ledger.system_counts;
  return root.dump(2) + "\n";
}

GroundTruthLedger ledger_from_json(const std::string& text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed ledger JSON: ") + e.what());
  }
  try {
    GroundTruthLedger ledger;
    ledger.target_activity = root.at("target_activity").get<std::string>();
    ledger.n_cases = root.at("n_cases").get<std::uint64_t>();
    ledger.n_events = root.at("n_events").get<std::uint64_t>();
    for (const auto& entry : root.at("variant_counts"))
      ledger.variant_counts[entry.at("sequence").get<std::vector<std::string>>()] =
          entry.at("count").get<std::uint64_t>();
    ledger.rework_case_ids = root.at("rework_case_ids").get<std::vector<std::string>>();
    ledger.terminal_case_ids = root.at("terminal_case_ids").get<std::vector<std::string>>();
    ledger.n_cases_with_target = root.at("n_cases_with_target").get<std::uint64_t>();
    ledger.n_target_events = root.at("n_target_events").get<std::uint64_t>();
    const auto unit = bucket_unit_from_string(root.at("bucket_unit").get<std::string>());
    if (!unit) throw Error("unknown bucket unit in ledger");
    ledger.bucket_unit = *unit;
    ledger.bucket_utc_offset_minutes = root.at("bucket_utc_offset_minutes").get<int>();
    for (const auto& entry : root.at("target_per_bucket"))
      ledger.target_per_bucket[entry.at("bucket").get<std::int64_t>()] =
          entry.at("count").get<std::uint64_t>();
    ledger.span_first_ms = root.at("span_first_ms").get<std::int64_t>();
    ledger.span_last_ms = root.at("span_last_ms").get<std::int64_t>();
    ledger.n_buckets_in_span = root.at("n_buckets_in_span").get<std::int64_t>();
    for (const auto& [user, count] : root.at("user_counts").items())
      ledger.user_counts[user] = count.get<std::uint64_t>();
    ledger.robot_target_events = root.at("robot_target_events").get<std::uint64_t>();
    ledger.missing_resource_target_events =
        root.at("missing_resource_target_events").get<std::uint64_t>();
    ledger.out_of_hours_event_ids =
        root.at("out_of_hours_event_ids").get<std::vector<std::string>>();
    ledger.out_of_hours_target_events =
        root.at("out_of_hours_target_events").get<std::uint64_t>();
    for (const auto& entry : root.at("dfg_counts"))
      ledger.dfg_counts[{entry.at("from").get<std::string>(),
                         entry.at("to").get<std::string>()}] =
          entry.at("count").get<std::uint64_t>();
    ledger.with_target_throughput_ms_sum =
        root.at("with_target_throughput_ms_sum").get<std::int64_t>();
    ledger.with_target_case_count = root.at("with_target_case_count").get<std::uint64_t>();
    ledger.without_target_throughput_ms_sum =
        root.at("without_target_throughput_ms_sum").get<std::int64_t>();
    ledger.without_target_case_count =
        root.at("without_target_case_count").get<std::uint64_t>();
    for (const auto& [system, count] : root.at("system_counts").items())
      ledger.system_counts[system] = count.get<std::uint64_t>();
    return ledger;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("ledger JSON violates the schema: ") + e.what());
  }
}

}  // namespace rpafit
