// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rpafit/context.hpp"
#include "rpafit/event_log.hpp"
#include "rpafit/variants.hpp"

namespace rpafit {

/// The thirteen assessment criteria, in report order (perspective-major).
enum class Criterion {
  Standardization,
  Maturity,
  Determinism,
  FailureRate,
  Frequency,
  Duration,
  Urgency,
  Structuredness,
  Interfaces,
  Stability,
  NumberOfSystems,
  Resources,
  HumanErrorProneness,
};

constexpr std::size_t kCriterionCount = 13;

/// All criteria in canonical report order.
const std::vector<Criterion>& all_criteria();

enum class Perspective { Task, Time, Data, System, Human };

Perspective perspective_of(Criterion c);
std::string_view criterion_id(Criterion c);
std::string_view to_string(Perspective p);
std::optional<Criterion> criterion_from_id(std::string_view id);

/// The four criteria that event logs cannot answer; they only carry
/// externally supplied evidence.
bool is_external_criterion(Criterion c);

enum class ResultStatus { Computed, External, NotEvaluable };

std::string_view to_string(ResultStatus s);

struct CriterionResult {
  Criterion criterion = Criterion::Standardization;
  ResultStatus status = ResultStatus::NotEvaluable;
  std::string not_evaluable_reason;           // set iff status == NotEvaluable
  std::map<std::string, double> metrics;      // empty iff status == NotEvaluable
  std::optional<double> normalized_score;     // in [0,1]; absent when NotEvaluable
  std::string narrative;

  Perspective perspective() const { return perspective_of(criterion); }

  friend bool operator==(const CriterionResult&, const CriterionResult&) = default;
};

/// Manually supplied judgement for a criterion the log cannot answer.
struct ExternalEvidence {
  double value = 0.0;  // normalized score in [0,1]
  std::string note;
};

/// Monotone-friendly score map: linear between sorted breakpoints, clamped
/// outside. points must be non-empty and sorted by x.
struct PiecewiseLinear {
  std::vector<std::pair<double, double>> points;

  double operator()(double x) const;
};

struct AssessmentConfig {
  std::string target_activity;

  // Compliant transition sets; auto-derived as the top-k context labels by
  // share when absent.
  std::optional<std::set<std::string>> valid_predecessors;
  std::optional<std::set<std::string>> valid_successors;
  std::size_t auto_predecessor_count = 5;
  std::size_t auto_successor_count = 2;

  std::set<std::string> failure_terminal_activities;
  bool rework_counts_as_failure = true;

  BusinessHours business_hours;
  BucketUnit frequency_bucket = BucketUnit::Day;

  // Substring patterns marking non-human accounts in the resource field.
  std::vector<std::string> robot_resource_patterns;

  // Case attribute naming the originating system.
  std::string system_attribute = "Source";

  std::map<Criterion, ExternalEvidence> external_evidence;
  std::map<Criterion, double> weights;  // missing entries weigh 1.0

  // Per-criterion score maps; entries here override the built-in defaults.
  std::map<Criterion, PiecewiseLinear> normalization;

  /// Score map for a criterion: the configured override or the default.
  const PiecewiseLinear& score_map(Criterion c) const;
};

/// Built-in normalization breakpoints (documented in the README).
const std::map<Criterion, PiecewiseLinear>& default_normalization();

/// Precomputed per-log analysis shared by the evaluators: variant table,
/// directly-follows graph, target context and resolved compliant sets.
struct Analysis {
  VariantTable variants;
  Dfg dfg;
  ActivityContext target_context;
  std::set<std::string> valid_predecessors;
  std::set<std::string> valid_successors;
};

/// Throws EmptyLogError / UnknownActivityError.
Analysis prepare_analysis(const EventLog& log, const AssessmentConfig& config);

CriterionResult eval_standardization(const EventLog& log, const AssessmentConfig& config,
                                     const Analysis& analysis);
CriterionResult eval_maturity(const EventLog& log, const AssessmentConfig& config,
                              BucketUnit window, const Analysis& analysis);
CriterionResult eval_maturity(const EventLog& log, const AssessmentConfig& config,
                              const Analysis& analysis);
CriterionResult eval_failure_rate(const EventLog& log, const AssessmentConfig& config);
CriterionResult eval_frequency(const EventLog& log, const AssessmentConfig& config);
CriterionResult eval_duration(const EventLog& log, const AssessmentConfig& config);
CriterionResult eval_urgency(const EventLog& log, const AssessmentConfig& config);
CriterionResult eval_resources(const EventLog& log, const AssessmentConfig& config);
CriterionResult eval_human_error_proneness(const EventLog& log, const AssessmentConfig& config);
CriterionResult eval_number_of_systems(const EventLog& log, const AssessmentConfig& config);
CriterionResult eval_number_of_systems(const EventLog& log, const AssessmentConfig& config,
                                       const std::string& system_attribute);

/// Evidence slot for the four log-opaque criteria (determinism,
/// structuredness, interfaces, stability). Throws UnknownCriterionError for
/// any other id.
CriterionResult eval_external(Criterion c, const AssessmentConfig& config);

/// Convenience overloads that build the shared analysis themselves.
CriterionResult eval_standardization(const EventLog& log, const AssessmentConfig& config);
CriterionResult eval_maturity(const EventLog& log, const AssessmentConfig& config);

/// All thirteen results in canonical order. Throws UnknownActivityError when
/// the target does not occur, EmptyLogError on an empty log.
std::vector<CriterionResult> evaluate_all(const EventLog& log, const AssessmentConfig& config);

}  // namespace rpafit
