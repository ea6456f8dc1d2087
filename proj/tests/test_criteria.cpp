// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "builders.hpp"
#include "rpafit/criteria.hpp"
#include "rpafit/errors.hpp"

using namespace rpafit;
using testutil::kHourMs;
using testutil::kMondayMorning;
using testutil::make_case;
using testutil::seq_log;

namespace {

AssessmentConfig config_for(std::string target) {
  AssessmentConfig c;
  c.target_activity = std::move(target);
  return c;
}

const CriterionResult& result_for(const std::vector<CriterionResult>& results, Criterion c) {
  for (const CriterionResult& r : results)
    if (r.criterion == c) return r;
  throw std::logic_error("criterion missing from results");
}

}  // namespace

TEST_CASE("criterion ids, perspectives and externals are consistent") {
  CHECK(all_criteria().size() == kCriterionCount);

  std::set<std::string> ids;
  std::map<Perspective, int> per_perspective;
  int externals = 0;
  for (Criterion c : all_criteria()) {
    const std::string id{criterion_id(c)};
    CHECK(ids.insert(id).second);
    CHECK(criterion_from_id(id) == c);
    ++per_perspective[perspective_of(c)];
    if (is_external_criterion(c)) ++externals;
  }
  CHECK(per_perspective[Perspective::Task] == 4);
  CHECK(per_perspective[Perspective::Time] == 3);
  CHECK(per_perspective[Perspective::Data] == 1);
  CHECK(per_perspective[Perspective::System] == 3);
  CHECK(per_perspective[Perspective::Human] == 2);
  CHECK(externals == 4);
  CHECK(is_external_criterion(Criterion::Determinism));
  CHECK(is_external_criterion(Criterion::Structuredness));
  CHECK(is_external_criterion(Criterion::Interfaces));
  CHECK(is_external_criterion(Criterion::Stability));
  CHECK_FALSE(criterion_from_id("not_a_criterion").has_value());
}

TEST_CASE("piecewise linear score maps interpolate and clamp") {
  const PiecewiseLinear falling{{{0.0, 1.0}, {0.2, 0.0}}};
  CHECK(falling(0.0) == 1.0);
  CHECK(falling(0.1) == doctest::Approx(0.5));
  CHECK(falling(0.2) == 0.0);
  CHECK(falling(0.9) == 0.0);
  CHECK(falling(-1.0) == 1.0);

  const PiecewiseLinear rising{{{0.0, 0.0}, {30.0, 1.0}}};
  CHECK(rising(15.0) == doctest::Approx(0.5));
  CHECK(rising(60.0) == 1.0);

  const PiecewiseLinear bent{{{0.0, 0.0}, {10.0, 0.5}, {20.0, 1.0}}};
  CHECK(bent(5.0) == doctest::Approx(0.25));
  CHECK(bent(15.0) == doctest::Approx(0.75));
}

TEST_CASE("config validation rejects unusable assessments") {
  const EventLog log = seq_log({{"A", "B"}});
  CHECK_THROWS_AS(evaluate_all(log, config_for("")), ConfigError);
  CHECK_THROWS_AS(evaluate_all(log, config_for("START")), ConfigError);
  CHECK_THROWS_AS(evaluate_all(log, config_for("Q")), UnknownActivityError);

  AssessmentConfig bad_hours = config_for("A");
  bad_hours.business_hours.start_minute = 600;
  bad_hours.business_hours.end_minute = 500;
  CHECK_THROWS_AS(evaluate_all(log, bad_hours), ConfigError);

  AssessmentConfig zero_k = config_for("A");
  zero_k.auto_predecessor_count = 0;
  CHECK_THROWS_AS(evaluate_all(log, zero_k), ConfigError);

  AssessmentConfig bad_evidence = config_for("A");
  bad_evidence.external_evidence[Criterion::Stability] = {1.5, ""};
  CHECK_THROWS_AS(evaluate_all(log, bad_evidence), ConfigError);

  AssessmentConfig computed_evidence = config_for("A");
  computed_evidence.external_evidence[Criterion::Frequency] = {0.5, ""};
  CHECK_THROWS_AS(evaluate_all(log, computed_evidence), ConfigError);
}

TEST_CASE("standardization scores transition-set coverage") {
  SUBCASE("a single variant is fully covered by auto-derived sets") {
    const EventLog log = seq_log({{"A", "B", "C"}, {"A", "B", "C"}});
    const CriterionResult r = eval_standardization(log, config_for("B"));
    CHECK(r.status == ResultStatus::Computed);
    CHECK(r.metrics.at("pred_coverage") == 1.0);
    CHECK(r.metrics.at("succ_coverage") == 1.0);
    CHECK(r.metrics.at("combined_coverage") == 1.0);
    CHECK(r.metrics.at("n_variants_containing") == 1.0);
    CHECK(r.metrics.at("n_distinct_activities") == 3.0);
    CHECK(r.normalized_score == 1.0);
  }
  SUBCASE("configured sets measure the planted 80/20 split") {
    std::vector<std::vector<std::string>> seqs;
    for (int i = 0; i < 8; ++i) seqs.push_back({"X", "T", "Z"});
    for (int i = 0; i < 2; ++i) seqs.push_back({"Y", "T", "Z"});
    AssessmentConfig cfg = config_for("T");
    cfg.valid_predecessors = std::set<std::string>{"X"};
    cfg.valid_successors = std::set<std::string>{"Z"};
    const CriterionResult r = eval_standardization(seq_log(seqs), cfg);
    CHECK(r.metrics.at("pred_coverage") == doctest::Approx(0.8));
    CHECK(r.metrics.at("succ_coverage") == 1.0);
    CHECK(r.metrics.at("combined_coverage") == doctest::Approx(0.9));
    CHECK(r.metrics.at("n_variants_containing") == 2.0);
  }
}

TEST_CASE("maturity separates compliant from deviating variants") {
  const EventLog log = seq_log({{"A", "T", "B"},
                                {"A", "T", "B", "C"},
                                {"C", "A", "T", "B"},
                                {"A", "T", "B", "D"},
                                {"A", "T", "T", "B"},
                                {"E", "T", "B"}});
  AssessmentConfig cfg = config_for("T");
  cfg.valid_predecessors = std::set<std::string>{"A"};
  cfg.valid_successors = std::set<std::string>{"B"};

  const Analysis analysis = prepare_analysis(log, cfg);
  const CriterionResult r = eval_maturity(log, cfg, BucketUnit::Month, analysis);
  CHECK(r.metrics.at("n_variants_containing") == 6.0);
  CHECK(r.metrics.at("n_compliant_variants") == 4.0);
  CHECK(r.metrics.at("n_incompliant_variants") == 2.0);
  CHECK(r.metrics.at("compliant_share") == doctest::Approx(4.0 / 6.0));
  // the six cases start within one month, so every variant lands in one window
  CHECK(r.metrics.at("new_variants_per_window_mean") == 6.0);
  CHECK(r.normalized_score == doctest::Approx(4.0 / 6.0));

  SUBCASE("a variant ending in a failure terminal is not compliant") {
    AssessmentConfig strict = cfg;
    strict.failure_terminal_activities = {"B"};
    // only the two variants not ending in B stay compliant
    const CriterionResult rs = eval_maturity(log, strict, BucketUnit::Month, analysis);
    CHECK(rs.metrics.at("n_compliant_variants") == 2.0);
    CHECK(rs.metrics.at("n_incompliant_variants") == 4.0);
  }
  SUBCASE("one variant in one window") {
    const CriterionResult r1 = eval_maturity(seq_log({{"A", "T", "B"}}), cfg);
    CHECK(r1.metrics.at("n_variants_containing") == 1.0);
    CHECK(r1.metrics.at("new_variants_per_window_mean") == 1.0);
  }
}

TEST_CASE("failure rate combines rework and failure-terminal endings") {
  std::vector<std::vector<std::string>> seqs;
  for (int i = 0; i < 93; ++i) seqs.push_back({"A", "T", "B"});
  for (int i = 0; i < 5; ++i) seqs.push_back({"A", "T", "T", "B"});
  for (int i = 0; i < 2; ++i) seqs.push_back({"A", "T", "Escalate"});
  const EventLog log = seq_log(seqs);
  AssessmentConfig cfg = config_for("T");
  cfg.failure_terminal_activities = {"Escalate"};

  const CriterionResult r = eval_failure_rate(log, cfg);
  CHECK(r.metrics.at("rework_ratio") == 0.05);
  CHECK(r.metrics.at("terminal_failure_ratio") == 0.02);
  CHECK(r.metrics.at("failure_rate") == 0.07);
  CHECK(r.metrics.at("n_cases_with_target") == 100.0);
  CHECK(r.normalized_score == doctest::Approx(0.65));

  SUBCASE("rework can be configured as acceptable") {
    cfg.rework_counts_as_failure = false;
    CHECK(eval_failure_rate(log, cfg).metrics.at("failure_rate") == 0.02);
  }
  SUBCASE("a clean log has no failures and a perfect score") {
    const CriterionResult clean = eval_failure_rate(seq_log({{"A", "T", "B"}}), cfg);
    CHECK(clean.metrics.at("failure_rate") == 0.0);
    CHECK(clean.normalized_score == 1.0);
  }
  SUBCASE("overlapping rework and terminal cases are counted once") {
    const EventLog both = seq_log({{"A", "T", "T", "Escalate"}, {"A", "T", "B"}});
    const CriterionResult r2 = eval_failure_rate(both, cfg);
    CHECK(r2.metrics.at("rework_ratio") == 0.5);
    CHECK(r2.metrics.at("terminal_failure_ratio") == 0.5);
    CHECK(r2.metrics.at("failure_rate") == 0.5);
  }
}

TEST_CASE("frequency is measured per calendar bucket including empty ones") {
  SUBCASE("a steady seven-per-day plant") {
    std::vector<Case> cases;
    int id = 0;
    for (int day = 0; day < 30; ++day)
      for (int i = 0; i < 7; ++i)
        cases.push_back(make_case("c" + std::to_string(++id), {"T"},
                                  {kMondayMorning + day * 24 * kHourMs + i * kHourMs}));
    const CriterionResult r = eval_frequency(finalize_log(std::move(cases)), config_for("T"));
    CHECK(r.metrics.at("total_occurrences") == 210.0);
    CHECK(r.metrics.at("n_buckets") == 30.0);
    CHECK(r.metrics.at("mean_per_bucket") == 7.0);
    CHECK(r.metrics.at("min_per_bucket") == 7.0);
    CHECK(r.metrics.at("max_per_bucket") == 7.0);
    CHECK(r.normalized_score == doctest::Approx(7.0 / 30.0));
  }
  SUBCASE("gaps in the span count as zero-occurrence buckets") {
    std::vector<Case> cases;
    cases.push_back(make_case("c1", {"T"}, {kMondayMorning}));
    cases.push_back(make_case("c2", {"T"}, {kMondayMorning + 4 * 24 * kHourMs}));
    const CriterionResult r = eval_frequency(finalize_log(std::move(cases)), config_for("T"));
    CHECK(r.metrics.at("n_buckets") == 5.0);
    CHECK(r.metrics.at("min_per_bucket") == 0.0);
    CHECK(r.metrics.at("max_per_bucket") == 1.0);
    CHECK(r.metrics.at("mean_per_bucket") == doctest::Approx(0.4));
  }
  SUBCASE("weekly buckets honor the configured unit") {
    std::vector<Case> cases;
    cases.push_back(make_case("c1", {"T"}, {kMondayMorning}));
    cases.push_back(make_case("c2", {"T"}, {kMondayMorning + 13 * 24 * kHourMs}));
    AssessmentConfig cfg = config_for("T");
    cfg.frequency_bucket = BucketUnit::Week;
    const CriterionResult r = eval_frequency(finalize_log(std::move(cases)), cfg);
    CHECK(r.metrics.at("n_buckets") == 2.0);
    CHECK(r.metrics.at("mean_per_bucket") == 1.0);
  }
}

TEST_CASE("duration compares case throughput with and without the activity") {
  std::vector<Case> cases;
  const std::int64_t two_days = 48 * kHourMs;
  cases.push_back(make_case("c1", {"A", "T", "B", "C", "D", "E"}, {kMondayMorning}, two_days));
  cases.push_back(make_case("c2", {"A", "B", "C"}, {kMondayMorning}, two_days));
  cases.push_back(make_case("c3", {"A", "B", "C"}, {kMondayMorning}, two_days));
  const CriterionResult r = eval_duration(finalize_log(std::move(cases)), config_for("T"));
  CHECK(r.metrics.at("mean_throughput_with") == 10.0);
  CHECK(r.metrics.at("mean_throughput_without") == 4.0);
  CHECK(r.metrics.at("delta") == 6.0);
  CHECK(r.metrics.at("n_cases_with") == 1.0);
  CHECK(r.metrics.at("n_cases_without") == 2.0);
  CHECK(r.normalized_score == doctest::Approx(0.2));

  SUBCASE("no comparison group leaves the delta and score out") {
    const CriterionResult all = eval_duration(seq_log({{"A", "T"}, {"T", "B"}}), config_for("T"));
    CHECK(all.status == ResultStatus::Computed);
    CHECK_FALSE(all.metrics.contains("delta"));
    CHECK_FALSE(all.metrics.contains("mean_throughput_without"));
    CHECK_FALSE(all.normalized_score.has_value());
  }
}

TEST_CASE("urgency is the out-of-hours execution share") {
  const std::int64_t tuesday_ten = kMondayMorning + 24 * kHourMs + 2 * kHourMs;
  const std::int64_t sunday_three = kMondayMorning - 29 * kHourMs;
  std::vector<Case> cases;
  for (int i = 0; i < 7; ++i)
    cases.push_back(make_case("c" + std::to_string(i + 1), {"T"}, {tuesday_ten + i * 60000}));
  for (int i = 0; i < 3; ++i)
    cases.push_back(make_case("n" + std::to_string(i + 1), {"T"}, {sunday_three + i * 60000}));
  const CriterionResult r = eval_urgency(finalize_log(std::move(cases)), config_for("T"));
  CHECK(r.metrics.at("out_of_hours_ratio") == 0.3);
  CHECK(r.metrics.at("out_of_hours_count") == 3.0);
  CHECK(r.metrics.at("n_target_events") == 10.0);
  CHECK(r.normalized_score == 1.0);  // 30% saturates the default 25% breakpoint

  SUBCASE("all business-hours executions score zero") {
    const CriterionResult inside =
        eval_urgency(seq_log({{"T", "A"}, {"T", "A"}}), config_for("T"));
    CHECK(inside.metrics.at("out_of_hours_ratio") == 0.0);
    CHECK(inside.normalized_score == 0.0);
  }
}

TEST_CASE("resources count distinct executing users") {
  SUBCASE("a twelve-user rotation") {
    std::vector<Case> cases;
    for (int i = 0; i < 24; ++i) {
      Case c = make_case("c" + std::to_string(i + 1), {"T"},
                         {kMondayMorning + i * kHourMs});
      c.events[0].resource = "user_" + std::to_string(i % 12 + 1);
      cases.push_back(std::move(c));
    }
    const CriterionResult r = eval_resources(finalize_log(std::move(cases)), config_for("T"));
    CHECK(r.metrics.at("n_distinct_users_on_activity") == 12.0);
    CHECK(r.metrics.at("mean_users_per_case") == 1.0);
    CHECK(r.metrics.at("missing_resource_ratio") == 0.0);
    CHECK(r.normalized_score == doctest::Approx(0.12));
  }
  SUBCASE("unattributed executions are reported, fully missing is not evaluable") {
    std::vector<Case> cases;
    for (int i = 0; i < 4; ++i)
      cases.push_back(make_case("c" + std::to_string(i + 1), {"T"},
                                {kMondayMorning + i * kHourMs}));
    cases[0].events[0].resource = "alice";
    cases[1].events[0].resource = "alice";
    const EventLog half = finalize_log({cases.begin(), cases.end()});
    const CriterionResult r = eval_resources(half, config_for("T"));
    CHECK(r.metrics.at("n_distinct_users_on_activity") == 1.0);
    CHECK(r.metrics.at("missing_resource_ratio") == 0.5);
    CHECK(r.metrics.at("mean_users_per_case") == 0.5);

    const CriterionResult blank = eval_resources(seq_log({{"T"}}), config_for("T"));
    CHECK(blank.status == ResultStatus::NotEvaluable);
    CHECK(blank.not_evaluable_reason == "no resource attribute");
    CHECK_FALSE(blank.normalized_score.has_value());
  }
}

TEST_CASE("human error attributes the failure rate to human executions") {
  std::vector<Case> cases;
  for (int i = 0; i < 100; ++i) {
    const bool fails = i < 10;
    Case c = make_case("c" + std::to_string(i + 1),
                       {"A", "T", fails ? "Escalate" : "B"},
                       {kMondayMorning + i * kHourMs});
    c.events[1].resource = i < 50 ? "robot_batch_3" : "alice";
    cases.push_back(std::move(c));
  }
  AssessmentConfig cfg = config_for("T");
  cfg.failure_terminal_activities = {"Escalate"};
  cfg.robot_resource_patterns = {"robot_"};
  const CriterionResult r = eval_human_error_proneness(finalize_log(std::move(cases)), cfg);
  CHECK(r.metrics.at("human_share") == 0.5);
  CHECK(r.metrics.at("human_error_rate") == doctest::Approx(0.05));
  CHECK(r.normalized_score == doctest::Approx(0.25));

  SUBCASE("unattributed executions are presumed human") {
    std::vector<Case> two;
    two.push_back(make_case("c1", {"T"}, {kMondayMorning}));
    two.push_back(make_case("c2", {"T"}, {kMondayMorning + kHourMs}));
    two[0].events[0].resource = "bot_x";
    AssessmentConfig c2 = config_for("T");
    c2.robot_resource_patterns = {"bot"};
    const CriterionResult rr = eval_human_error_proneness(finalize_log(std::move(two)), c2);
    CHECK(rr.metrics.at("human_share") == 0.5);
    CHECK(rr.metrics.at("human_error_rate") == 0.0);
  }
}

TEST_CASE("number of systems counts distinct sources on containing cases") {
  std::vector<Case> cases;
  const std::vector<std::string> systems{"SAP_NA", "SAP_EU", "Legacy"};
  for (int i = 0; i < 6; ++i) {
    Case c = make_case("c" + std::to_string(i + 1), {"A", "T"},
                       {kMondayMorning + i * kHourMs});
    c.case_attributes["Source"] = systems[i % 3];
    cases.push_back(std::move(c));
  }
  Case other = make_case("c7", {"A", "B"}, {kMondayMorning + 7 * kHourMs});
  other.case_attributes["Source"] = std::string("Mainframe");  // no target: not counted
  cases.push_back(std::move(other));

  const CriterionResult r =
      eval_number_of_systems(finalize_log(std::move(cases)), config_for("T"));
  CHECK(r.metrics.at("n_distinct_systems") == 3.0);
  CHECK(r.normalized_score == doctest::Approx(0.5));

  SUBCASE("event-level attributes work as a fallback") {
    std::vector<Case> ev;
    ev.push_back(make_case("c1", {"T"}, {kMondayMorning}));
    ev[0].events[0].attributes["Source"] = std::string("SAP_NA");
    const CriterionResult re =
        eval_number_of_systems(finalize_log(std::move(ev)), config_for("T"));
    CHECK(re.metrics.at("n_distinct_systems") == 1.0);
  }
  SUBCASE("a log without the attribute is not evaluable") {
    const CriterionResult rn = eval_number_of_systems(seq_log({{"T"}}), config_for("T"));
    CHECK(rn.status == ResultStatus::NotEvaluable);
    CHECK(rn.not_evaluable_reason == "no system attribute in log");
  }
}

TEST_CASE("log-opaque criteria carry external evidence or say why not") {
  AssessmentConfig cfg = config_for("T");

  SUBCASE("without evidence each names its missing data") {
    const CriterionResult d = eval_external(Criterion::Determinism, cfg);
    CHECK(d.status == ResultStatus::NotEvaluable);
    CHECK(d.not_evaluable_reason == "requires user-interface interaction data");
    CHECK(eval_external(Criterion::Structuredness, cfg).not_evaluable_reason ==
          "requires information about the processed data objects");
    CHECK(eval_external(Criterion::Interfaces, cfg).not_evaluable_reason ==
          "requires information about interface interactions");
    CHECK(eval_external(Criterion::Stability, cfg).not_evaluable_reason ==
          "requires exception and incident data");
  }
  SUBCASE("supplied evidence becomes the score") {
    cfg.external_evidence[Criterion::Stability] = {0.8, "two incidents per year"};
    const CriterionResult r = eval_external(Criterion::Stability, cfg);
    CHECK(r.status == ResultStatus::External);
    CHECK(r.metrics.at("external_value") == 0.8);
    CHECK(r.normalized_score == 0.8);
    CHECK(r.narrative.find("two incidents per year") != std::string::npos);
  }
  SUBCASE("computed criteria reject the evidence slot") {
    CHECK_THROWS_AS(eval_external(Criterion::Frequency, cfg), UnknownCriterionError);
  }
}

TEST_CASE("a full evaluation yields all thirteen criteria in report order") {
  std::vector<Case> cases;
  for (int i = 0; i < 10; ++i) {
    Case c = make_case("c" + std::to_string(i + 1), {"A", "T", "B"},
                       {kMondayMorning + i * 24 * kHourMs});
    c.events[1].resource = "user_" + std::to_string(i % 3 + 1);
    c.case_attributes["Source"] = std::string(i % 2 == 0 ? "SAP_1" : "SAP_2");
    cases.push_back(std::move(c));
  }
  cases.push_back(make_case("c11", {"A", "B"}, {kMondayMorning}));
  const EventLog log = finalize_log(std::move(cases));

  AssessmentConfig cfg = config_for("T");
  const std::vector<CriterionResult> results = evaluate_all(log, cfg);
  REQUIRE(results.size() == kCriterionCount);
  for (std::size_t i = 0; i < results.size(); ++i)
    CHECK(results[i].criterion == all_criteria()[i]);

  for (Criterion c : all_criteria()) {
    const CriterionResult& r = result_for(results, c);
    if (is_external_criterion(c)) {
      CHECK(r.status == ResultStatus::NotEvaluable);
      CHECK_FALSE(r.not_evaluable_reason.empty());
      CHECK(r.metrics.empty());
    } else {
      CHECK(r.status == ResultStatus::Computed);
      CHECK_FALSE(r.metrics.empty());
      CHECK_FALSE(r.narrative.empty());
    }
  }

  SUBCASE("evidence flips an external slot without touching the rest") {
    cfg.external_evidence[Criterion::Determinism] = {0.9, "scripted UI flow"};
    const auto with = evaluate_all(log, cfg);
    CHECK(result_for(with, Criterion::Determinism).status == ResultStatus::External);
    CHECK(result_for(with, Criterion::Determinism).normalized_score == 0.9);
    CHECK(result_for(with, Criterion::Stability).status == ResultStatus::NotEvaluable);
    CHECK(result_for(with, Criterion::Frequency) == result_for(results, Criterion::Frequency));
  }
}
