// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "rpafit/context.hpp"
#include "rpafit/errors.hpp"
#include "rpafit/filter.hpp"
#include "rpafit/synth.hpp"
#include "rpafit/variants.hpp"

using namespace rpafit;

namespace {

SynthSpec p2p_like_spec() {
  SynthSpec spec;
  spec.n_cases = 200;
  spec.variant_templates = {
      {{"Create PO", "Approve", "Record GR", "Record Invoice", "Clear Invoice"}, 0.5},
      {{"Create PO", "Approve", "Change Quantity", "Record GR", "Record Invoice",
        "Clear Invoice"},
       0.3},
      {{"Create PO", "Change Quantity", "Approve", "Record GR", "Record Invoice",
        "Clear Invoice"},
       0.2},
  };
  spec.target_activity = "Change Quantity";
  spec.rework_probability = 0.05;
  spec.terminal_failure_probability = 0.02;
  spec.failure_terminal_activity = "Cancel PO";
  spec.user_pool = {"u1", "u2", "u3", "u4", "u5", "u6"};
  spec.robot_user_share = 0.25;
  spec.out_of_hours_share = 0.3;
  spec.start_window = {parse_iso8601("2018-01-08T09:00:00Z"),
                       parse_iso8601("2018-11-26T09:00:00Z")};
  spec.system_pool = {"SAP_1", "SAP_2", "SAP_3"};
  spec.seed = 42;
  return spec;
}

std::uint64_t count_rework_cases(const EventLog& log, const std::string& target) {
  std::uint64_t n = 0;
  for (const Case& c : log.cases)
    if (c.count_activity(target) >= 2) ++n;
  return n;
}

}  // namespace

TEST_CASE("generation is deterministic in the seed") {
  const SynthSpec spec = p2p_like_spec();
  const auto [log_a, ledger_a] = generate(spec);
  const auto [log_b, ledger_b] = generate(spec);
  CHECK(log_a == log_b);
  CHECK(ledger_a == ledger_b);

  SynthSpec reseeded = spec;
  reseeded.seed = 43;
  const auto [log_c, ledger_c] = generate(reseeded);
  CHECK_FALSE(log_a == log_c);
}

TEST_CASE("a one-case spec emits exactly the template") {
  SynthSpec spec;
  spec.n_cases = 1;
  spec.variant_templates = {{{"A", "B", "C"}, 1.0}};
  spec.user_pool = {"ada"};
  const auto [log, ledger] = generate(spec);

  REQUIRE(log.cases.size() == 1);
  const Case& c = log.cases[0];
  CHECK(c.case_id == "case_1");
  REQUIRE(c.events.size() == 3);
  CHECK(c.events[0].activity == "A");
  CHECK(c.events[1].activity == "B");
  CHECK(c.events[2].activity == "C");
  CHECK(c.events[0].timestamp.ms == 1520236800000);
  CHECK(c.events[1].timestamp.ms == c.events[0].timestamp.ms + 3'600'000);  // default gap

  CHECK(resolved_target(spec) == "A");  // first activity of the first template
  CHECK(ledger.target_activity == "A");
  CHECK(ledger.n_cases == 1);
  CHECK(ledger.n_events == 3);
  CHECK(ledger.n_cases_with_target == 1);
  CHECK(ledger.variant_counts.at({"A", "B", "C"}) == 1);
}

TEST_CASE("template quotas are apportioned exactly") {
  SynthSpec spec;
  spec.n_cases = 10;
  spec.variant_templates = {{{"A", "X"}, 0.5}, {{"A", "Y"}, 0.3}, {{"A", "Z"}, 0.2}};
  spec.user_pool = {"u1"};
  const auto [log, ledger] = generate(spec);

  CHECK(ledger.variant_counts.at({"A", "X"}) == 5);
  CHECK(ledger.variant_counts.at({"A", "Y"}) == 3);
  CHECK(ledger.variant_counts.at({"A", "Z"}) == 2);

  const VariantTable table = build_variant_table(log);
  CHECK(table.total_cases == 10);
  for (const Variant& v : table.variants)
    CHECK(v.count == ledger.variant_counts.at(v.sequence));
}

TEST_CASE("planted quantities land exactly where the ledger says") {
  const SynthSpec spec = p2p_like_spec();
  const auto [log, ledger] = generate(spec);
  const std::string& target = ledger.target_activity;

  // 100 of 200 cases carry the target (the 0.3 and 0.2 templates)
  CHECK(ledger.n_cases_with_target == 100);
  CHECK(ledger.rework_case_ids.size() == 5);    // llround(0.05 * 100)
  CHECK(ledger.terminal_case_ids.size() == 2);  // llround(0.02 * 100)
  CHECK(count_rework_cases(log, target) == 5);

  SUBCASE("rework and terminal case sets are disjoint") {
    std::set<std::string> rework(ledger.rework_case_ids.begin(), ledger.rework_case_ids.end());
    for (const std::string& id : ledger.terminal_case_ids)
      CHECK_FALSE(rework.contains(id));
  }
  SUBCASE("terminal cases end in the failure activity") {
    std::set<std::string> terminal(ledger.terminal_case_ids.begin(),
                                   ledger.terminal_case_ids.end());
    std::uint64_t seen = 0;
    for (const Case& c : log.cases) {
      const bool ends_failed = c.events.back().activity == spec.failure_terminal_activity;
      CHECK(ends_failed == terminal.contains(c.case_id));
      if (ends_failed) ++seen;
    }
    CHECK(seen == 2);
  }
  SUBCASE("target events, robots and out-of-hours hit their quotas") {
    CHECK(ledger.n_target_events == 105);  // 100 containing + 5 rework inserts
    CHECK(ledger.robot_target_events == 26);        // llround(0.25 * 105)
    CHECK(ledger.out_of_hours_target_events == 32); // llround(0.30 * 105)

    std::uint64_t robots = 0, outside = 0, total = 0;
    for (const Case& c : log.cases)
      for (const Event& e : c.events) {
        if (e.activity != target) continue;
        ++total;
        if (e.resource && e.resource->find("robot_batch") != std::string::npos) ++robots;
        if (!spec.business_hours.contains(e.timestamp)) ++outside;
      }
    CHECK(total == ledger.n_target_events);
    CHECK(robots == ledger.robot_target_events);
    CHECK(outside == ledger.out_of_hours_target_events);
  }
  SUBCASE("per-user counts add up") {
    std::uint64_t sum = 0;
    for (const auto& [user, n] : ledger.user_counts) sum += n;
    CHECK(sum + ledger.missing_resource_target_events == ledger.n_target_events);
    CHECK(ledger.missing_resource_target_events == 0);  // pool provided
  }
  SUBCASE("adjacency and throughput tallies match a recount") {
    CHECK(ledger.dfg_counts == build_dfg(log));

    std::int64_t with_sum = 0, without_sum = 0;
    std::uint64_t with_n = 0, without_n = 0;
    for (const Case& c : log.cases) {
      if (c.contains_activity(target)) {
        with_sum += c.throughput_ms();
        ++with_n;
      } else {
        without_sum += c.throughput_ms();
        ++without_n;
      }
    }
    CHECK(with_sum == ledger.with_target_throughput_ms_sum);
    CHECK(with_n == ledger.with_target_case_count);
    CHECK(without_sum == ledger.without_target_throughput_ms_sum);
    CHECK(without_n == ledger.without_target_case_count);
  }
  SUBCASE("system assignment is counted over target-containing cases") {
    std::map<std::string, std::uint64_t> recount;
    for (const Case& c : log.cases) {
      if (!c.contains_activity(target)) continue;
      recount[attribute_text(c.case_attributes.at("Source"))]++;
    }
    CHECK(recount == ledger.system_counts);
  }
  SUBCASE("bucket tallies cover the span") {
    std::uint64_t bucketed = 0;
    for (const auto& [bucket, n] : ledger.target_per_bucket) bucketed += n;
    CHECK(bucketed == ledger.n_target_events);
    REQUIRE(log.time_span.has_value());
    CHECK(ledger.span_first_ms == log.time_span->first.ms);
    CHECK(ledger.span_last_ms == log.time_span->second.ms);
    CHECK(ledger.n_buckets_in_span ==
          buckets_in_span(log.time_span->first, log.time_span->second, BucketUnit::Day,
                          spec.business_hours.utc_offset_minutes));
  }
}

TEST_CASE("unusable specs are rejected with the offending field") {
  SynthSpec good = p2p_like_spec();
  CHECK_NOTHROW(validate(good));

  auto field_of = [](const SynthSpec& spec) {
    try {
      validate(spec);
      return std::string("(none)");
    } catch (const InvalidSpecError& e) {
      return std::string(e.field());
    }
  };

  SynthSpec s = good;
  s.n_cases = 0;
  CHECK(field_of(s) == "n_cases");

  s = good;
  s.variant_templates[0].probability = 0.4;  // sum now 0.9
  CHECK(field_of(s) == "variant_templates");

  s = good;
  s.variant_templates[0].sequence.push_back("END");
  CHECK(field_of(s) == "variant_templates");

  s = good;
  s.target_activity = "Not There";
  CHECK(field_of(s) == "target_activity");

  s = good;
  s.failure_terminal_activity.clear();
  CHECK(field_of(s) == "failure_terminal_activity");

  s = good;
  s.failure_terminal_activity = s.target_activity;
  CHECK(field_of(s) == "failure_terminal_activity");

  s = good;
  s.robot_user_pool.clear();
  CHECK(field_of(s) == "robot_user_pool");

  s = good;
  s.inter_event_gap = {5000, 1000};
  CHECK(field_of(s) == "inter_event_gap");

  s = good;
  std::swap(s.start_window.first, s.start_window.second);
  CHECK(field_of(s) == "start_window");

  s = good;
  s.business_hours.weekdays = {false, false, false, false, false, false, false};
  CHECK(field_of(s) == "business_hours");

  s = good;
  s.system_pool.push_back("");
  CHECK(field_of(s) == "system_pool");

  s = good;
  s.rework_probability = 0.8;
  s.terminal_failure_probability = 0.8;
  CHECK_THROWS_AS(generate(s), InvalidSpecError);  // quotas exceed the target cases
}

TEST_CASE("the ledger survives a json round trip") {
  const auto [log, ledger] = generate(p2p_like_spec());
  CHECK(ledger_from_json(ledger_to_json(ledger)) == ledger);
}
