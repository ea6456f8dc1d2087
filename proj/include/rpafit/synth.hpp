// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rpafit/context.hpp"
#include "rpafit/event_log.hpp"
#include "rpafit/time.hpp"

namespace rpafit {

/// Inter-event gap distribution in milliseconds; fixed when min == max,
/// otherwise uniform over [min, max].
struct GapSpec {
  std::int64_t min_ms = 3'600'000;
  std::int64_t max_ms = 3'600'000;
};

struct VariantTemplate {
  std::vector<std::string> sequence;
  double probability = 0.0;
};

/// Declarative recipe for a synthetic log. Counts are planted by quota
/// (rounded to the nearest case/event), not sampled, so the emitted ledger
/// is an exact oracle.
struct SynthSpec {
  std::uint64_t n_cases = 0;
  std::vector<VariantTemplate> variant_templates;

  // Defaults to the first activity of the first template.
  std::string target_activity;

  // Share of target-containing cases that get an extra target execution
  // inserted right after the first one (a rework self-loop).
  double rework_probability = 0.0;

  // Share of target-containing cases (disjoint from the rework set) whose
  // trace is terminated by failure_terminal_activity.
  double terminal_failure_probability = 0.0;
  std::string failure_terminal_activity;

  std::vector<std::string> user_pool;
  std::vector<std::string> robot_user_pool = {"robot_batch_1"};
  // Share of target executions assigned to robot accounts.
  double robot_user_share = 0.0;

  // When set, target executions are placed inside/outside business hours to
  // hit this share; when absent timestamps run unadjusted (the ledger still
  // records the realized counts).
  std::optional<double> out_of_hours_share;
  BusinessHours business_hours;

  GapSpec inter_event_gap;
  std::pair<Timestamp, Timestamp> start_window = {Timestamp{1520236800000},
                                                  Timestamp{1520236800000}};
  // Distance between consecutive case starts; 0 spreads cases evenly across
  // the start window.
  std::int64_t start_stride_ms = 0;

  // When non-empty, each case gets system_attribute_key assigned round-robin
  // from this pool as a case attribute.
  std::vector<std::string> system_pool;
  std::string system_attribute_key = "Source";

  std::uint64_t seed = 1;
};

/// Throws InvalidSpecError naming the offending field.
void validate(const SynthSpec& spec);

/// The effective target activity (explicit or derived from the templates).
std::string resolved_target(const SynthSpec& spec);

/// Quantities counted while the log was emitted; every value is exact.
struct GroundTruthLedger {
  std::string target_activity;
  std::uint64_t n_cases = 0;
  std::uint64_t n_events = 0;

  std::map<std::vector<std::string>, std::uint64_t> variant_counts;
  std::vector<std::string> rework_case_ids;
  std::vector<std::string> terminal_case_ids;
  std::uint64_t n_cases_with_target = 0;
  std::uint64_t n_target_events = 0;

  BucketUnit bucket_unit = BucketUnit::Day;
  int bucket_utc_offset_minutes = 0;
  std::map<std::int64_t, std::uint64_t> target_per_bucket;  // non-zero buckets only
  std::int64_t span_first_ms = 0;
  std::int64_t span_last_ms = 0;
  std::int64_t n_buckets_in_span = 0;

  std::map<std::string, std::uint64_t> user_counts;  // target executions per resource
  std::uint64_t robot_target_events = 0;
  std::uint64_t missing_resource_target_events = 0;

  std::vector<std::string> out_of_hours_event_ids;  // "<case_id>#<event_index>"
  std::uint64_t out_of_hours_target_events = 0;

  Dfg dfg_counts;

  std::int64_t with_target_throughput_ms_sum = 0;
  std::uint64_t with_target_case_count = 0;
  std::int64_t without_target_throughput_ms_sum = 0;
  std::uint64_t without_target_case_count = 0;

  std::map<std::string, std::uint64_t> system_counts;  // over target-containing cases

  friend bool operator==(const GroundTruthLedger&, const GroundTruthLedger&) = default;
};

/// Deterministic: the same spec (seed included) yields a bit-identical log
/// and ledger. Throws InvalidSpecError.
std::pair<EventLog, GroundTruthLedger> generate(const SynthSpec& spec);

std::string ledger_to_json(const GroundTruthLedger& ledger);
GroundTruthLedger ledger_from_json(const std::string& text);

}  // namespace rpafit
