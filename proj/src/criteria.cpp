// SPDX-License-Identifier: Apache-2.0
#include "rpafit/criteria.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdint>
#include <set>
#include <sstream>

#include "rpafit/errors.hpp"
#include "rpafit/filter.hpp"
#include "rpafit/time.hpp"

namespace rpafit {

namespace {

struct CriterionInfo {
  Criterion criterion;
  Perspective perspective;
  std::string_view id;
};

// Canonical report order: perspective-major, then criterion.
constexpr std::array<CriterionInfo, kCriterionCount> kTable = {{
    {Criterion::Standardization, Perspective::Task, "standardization"},
    {Criterion::Maturity, Perspective::Task, "maturity"},
    {Criterion::Determinism, Perspective::Task, "determinism"},
    {Criterion::FailureRate, Perspective::Task, "failure_rate"},
    {Criterion::Frequency, Perspective::Time, "frequency"},
    {Criterion::Duration, Perspective::Time, "duration"},
    {Criterion::Urgency, Perspective::Time, "urgency"},
    {Criterion::Structuredness, Perspective::Data, "structuredness"},
    {Criterion::Interfaces, Perspective::System, "interfaces"},
    {Criterion::Stability, Perspective::System, "stability"},
    {Criterion::NumberOfSystems, Perspective::System, "number_of_systems"},
    {Criterion::Resources, Perspective::Human, "resources"},
    {Criterion::HumanErrorProneness, Perspective::Human, "human_error_proneness"},
}};

const CriterionInfo& info(Criterion c) {
  for (const CriterionInfo& i : kTable)
    if (i.criterion == c) return i;
  throw UnknownCriterionError("criterion enum out of range");
}

std::string fmt(double v, int decimals = 2) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

std::string fmt_pct(double ratio) { return fmt(ratio * 100.0) + "%"; }

void validate_config(const AssessmentConfig& config) {
  if (config.target_activity.empty()) throw ConfigError("target_activity must not be empty");
  if (is_reserved_label(config.target_activity))
    throw ConfigError("target_activity must not be the reserved " +
                      std::string(config.target_activity) + " token");
  if (config.business_hours.start_minute >= config.business_hours.end_minute)
    throw ConfigError("business_hours start must precede end");
  if (config.auto_predecessor_count == 0 || config.auto_successor_count == 0)
    throw ConfigError("auto-derived context set sizes must be at least 1");
  for (const auto& [criterion, evidence] : config.external_evidence) {
    if (evidence.value < 0.0 || evidence.value > 1.0)
      throw ConfigError("external evidence for " + std::string(criterion_id(criterion)) +
                        " outside [0, 1]");
    if (!is_external_criterion(criterion))
      throw ConfigError(std::string(criterion_id(criterion)) +
                        " is computed from the log and cannot carry external evidence");
  }
}

// Cases whose trace contains the target at least once (pointers into log).
std::vector<const Case*> cases_with_target(const EventLog& log, const std::string& target) {
  std::vector<const Case*> out;
  for (const Case& c : log.cases)
    if (c.contains_activity(target)) out.push_back(&c);
  return out;
}

std::optional<double> score_of(const AssessmentConfig& config, Criterion c, double input) {
  return config.score_map(c)(input);
}

CriterionResult computed(Criterion c, std::map<std::string, double> metrics,
                         std::optional<double> score, std::string narrative) {
  CriterionResult r;
  r.criterion = c;
  r.status = ResultStatus::Computed;
  r.metrics = std::move(metrics);
  r.normalized_score = score;
  r.narrative = std::move(narrative);
  return r;
}

CriterionResult not_evaluable(Criterion c, std::string reason) {
  CriterionResult r;
  r.criterion = c;
  r.status = ResultStatus::NotEvaluable;
  r.not_evaluable_reason = std::move(reason);
  r.narrative = "Not evaluable: " + r.not_evaluable_reason + ".";
  return r;
}

}  // namespace

const std::vector<Criterion>& all_criteria() {
  static const std::vector<Criterion> order = [] {
    std::vector<Criterion> v;
    for (const CriterionInfo& i : kTable) v.push_back(i.criterion);
    return v;
  }();
  return order;
}

Perspective perspective_of(Criterion c) { return info(c).perspective; }

std::string_view criterion_id(Criterion c) { return info(c).id; }

std::string_view to_string(Perspective p) {
  switch (p) {
    case Perspective::Task: return "task";
    case Perspective::Time: return "time";
    case Perspective::Data: return "data";
    case Perspective::System: return "system";
    case Perspective::Human: return "human";
  }
  return "task";
}

std::optional<Criterion> criterion_from_id(std::string_view id) {
  for (const CriterionInfo& i : kTable)
    if (i.id == id) return i.criterion;
  return std::nullopt;
}

bool is_external_criterion(Criterion c) {
  return c == Criterion::Determinism || c == Criterion::Structuredness ||
         c == Criterion::Interfaces || c == Criterion::Stability;
}

std::string_view to_string(ResultStatus s) {
  switch (s) {
    case ResultStatus::Computed: return "computed";
    case ResultStatus::External: return "external";
    case ResultStatus::NotEvaluable: return "not_evaluable";
  }
  return "not_evaluable";
}

double PiecewiseLinear::operator()(double x) const {
  if (points.empty()) return std::clamp(x, 0.0, 1.0);
  if (x <= points.front().first) return points.front().second;
  if (x >= points.back().first) return points.back().second;
  for (std::size_t i = 1; i < points.size(); ++i) {
    const auto& [x0, y0] = points[i - 1];
    const auto& [x1, y1] = points[i];
    if (x <= x1) {
      if (x1 == x0) return y1;
      return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
    }
  }
  return points.back().second;
}

const std::map<Criterion, PiecewiseLinear>& default_normalization() {
  static const std::map<Criterion, PiecewiseLinear> maps = {
      {Criterion::Standardization, {{{0.0, 0.0}, {1.0, 1.0}}}},
      {Criterion::Maturity, {{{0.0, 0.0}, {1.0, 1.0}}}},
      {Criterion::Determinism, {{{0.0, 0.0}, {1.0, 1.0}}}},
      {Criterion::FailureRate, {{{0.0, 1.0}, {0.2, 0.0}}}},
      {Criterion::Frequency, {{{0.0, 0.0}, {30.0, 1.0}}}},
      {Criterion::Duration, {{{0.0, 0.0}, {30.0, 1.0}}}},
      {Criterion::Urgency, {{{0.0, 0.0}, {0.25, 1.0}}}},
      {Criterion::Structuredness, {{{0.0, 0.0}, {1.0, 1.0}}}},
      {Criterion::Interfaces, {{{0.0, 0.0}, {1.0, 1.0}}}},
      {Criterion::Stability, {{{0.0, 0.0}, {1.0, 1.0}}}},
      {Criterion::NumberOfSystems, {{{1.0, 0.0}, {5.0, 1.0}}}},
      {Criterion::Resources, {{{0.0, 0.0}, {100.0, 1.0}}}},
      {Criterion::HumanErrorProneness, {{{0.0, 0.0}, {0.2, 1.0}}}},
  };
  return maps;
}

const PiecewiseLinear& AssessmentConfig::score_map(Criterion c) const {
  if (auto it = normalization.find(c); it != normalization.end()) return it->second;
  return default_normalization().at(c);
}

Analysis prepare_analysis(const EventLog& log, const AssessmentConfig& config) {
  validate_config(config);
  if (log.empty()) throw EmptyLogError();
  Analysis a;
  a.variants = build_variant_table(log);
  a.dfg = build_dfg(log);
  a.target_context = activity_context(a.dfg, config.target_activity);
  a.valid_predecessors = config.valid_predecessors
                             ? *config.valid_predecessors
                             : top_labels(a.target_context.predecessors,
                                          config.auto_predecessor_count);
  a.valid_successors = config.valid_successors
                           ? *config.valid_successors
                           : top_labels(a.target_context.successors,
                                        config.auto_successor_count);
  return a;
}

CriterionResult eval_standardization(const EventLog& log, const AssessmentConfig& config,
                                     const Analysis& analysis) {
  const double pred_cov = coverage(analysis.target_context, analysis.valid_predecessors,
                                   Direction::In);
  const double succ_cov = coverage(analysis.target_context, analysis.valid_successors,
                                   Direction::Out);
  const double combined = (pred_cov + succ_cov) / 2.0;
  const auto containing = variants_containing(analysis.variants, config.target_activity);

  std::map<std::string, double> metrics{
      {"n_variants_containing", static_cast<double>(containing.size())},
      {"pred_coverage", pred_cov},
      {"succ_coverage", succ_cov},
      {"combined_coverage", combined},
      {"n_distinct_activities", static_cast<double>(log.activity_alphabet.size())},
  };
  std::ostringstream n;
  n << (config.valid_predecessors ? "Configured" : "Auto-derived") << " "
    << analysis.valid_predecessors.size() << " valid predecessors cover " << fmt_pct(pred_cov)
    << " of incoming paths; " << analysis.valid_successors.size() << " valid successors cover "
    << fmt_pct(succ_cov) << " of outgoing paths. " << containing.size() << " of "
    << analysis.variants.variants.size() << " trace variants contain \""
    << config.target_activity << "\"; the log has " << log.activity_alphabet.size()
    << " distinct activities.";
  return computed(Criterion::Standardization, std::move(metrics),
                  score_of(config, Criterion::Standardization, combined), n.str());
}

CriterionResult eval_maturity(const EventLog& log, const AssessmentConfig& config,
                              BucketUnit window, const Analysis& analysis) {
  const std::string& target = config.target_activity;
  const auto containing = variants_containing(analysis.variants, target);
  if (containing.empty()) throw UnknownActivityError(target);

  std::uint64_t compliant = 0;
  for (const Variant& v : containing) {
    const auto& seq = v.sequence;
    std::size_t occurrences = 0;
    bool transitions_ok = true;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (seq[i] != target) continue;
      ++occurrences;
      const std::string pred = i == 0 ? std::string(kStartToken) : seq[i - 1];
      const std::string succ = i + 1 == seq.size() ? std::string(kEndToken) : seq[i + 1];
      if (!analysis.valid_predecessors.contains(pred) ||
          !analysis.valid_successors.contains(succ))
        transitions_ok = false;
    }
    const bool failed_end = config.failure_terminal_activities.contains(seq.back());
    if (transitions_ok && occurrences == 1 && !failed_end) ++compliant;
  }
  const std::uint64_t n_containing = containing.size();
  const std::uint64_t incompliant = n_containing - compliant;
  const double share = static_cast<double>(compliant) / static_cast<double>(n_containing);

  const auto& span = *log.time_span;
  const std::int64_t windows =
      buckets_in_span(span.first, span.second, window, config.business_hours.utc_offset_minutes);
  const double new_per_window =
      static_cast<double>(n_containing) / static_cast<double>(windows);

  std::map<std::string, double> metrics{
      {"n_variants_containing", static_cast<double>(n_containing)},
      {"n_compliant_variants", static_cast<double>(compliant)},
      {"n_incompliant_variants", static_cast<double>(incompliant)},
      {"compliant_share", share},
      {"new_variants_per_window_mean", new_per_window},
  };
  std::ostringstream n;
  n << compliant << " of " << n_containing << " variants containing \"" << target
    << "\" are compliant (" << fmt_pct(share) << "), " << incompliant
    << " deviate through repeated execution, unexpected context, or a failure-terminal end. "
    << "Averaged over " << windows << " " << to_string(window) << " window(s), "
    << fmt(new_per_window) << " new variant(s) appear per window.";
  return computed(Criterion::Maturity, std::move(metrics),
                  score_of(config, Criterion::Maturity, share), n.str());
}

CriterionResult eval_maturity(const EventLog& log, const AssessmentConfig& config,
                              const Analysis& analysis) {
  return eval_maturity(log, config, config.frequency_bucket, analysis);
}

CriterionResult eval_failure_rate(const EventLog& log, const AssessmentConfig& config) {
  validate_config(config);
  if (log.empty()) throw EmptyLogError();
  const std::string& target = config.target_activity;
  const auto containing = cases_with_target(log, target);
  if (containing.empty()) throw UnknownActivityError(target);

  std::uint64_t rework = 0, terminal = 0, overlap = 0, failed = 0;
  for (const Case* c : containing) {
    const bool is_rework = c->count_activity(target) >= 2;
    const bool is_terminal =
        config.failure_terminal_activities.contains(c->events.back().activity);
    if (is_rework) ++rework;
    if (is_terminal) ++terminal;
    if (is_rework && is_terminal) ++overlap;
    if (is_terminal || (is_rework && config.rework_counts_as_failure)) ++failed;
  }
  const double total = static_cast<double>(containing.size());
  const double rework_ratio = static_cast<double>(rework) / total;
  const double terminal_ratio = static_cast<double>(terminal) / total;
  const double failure = static_cast<double>(failed) / total;

  std::map<std::string, double> metrics{
      {"rework_ratio", rework_ratio},
      {"terminal_failure_ratio", terminal_ratio},
      {"failure_rate", failure},
      {"n_cases_with_target", total},
  };
  std::ostringstream n;
  n << "Of " << containing.size() << " cases containing \"" << target << "\", " << rework
    << " rework it (" << fmt_pct(rework_ratio) << ") and " << terminal
    << " end in a failure-terminal activity (" << fmt_pct(terminal_ratio) << "). ";
  if (!config.rework_counts_as_failure)
    n << "Rework is configured not to count as failure. ";
  if (overlap == 0)
    n << "The two sets are disjoint, so their union (" << fmt_pct(failure)
      << ") equals the component sum.";
  else
    n << "The two sets overlap in " << overlap << " case(s); the component sum "
      << fmt_pct(rework_ratio + terminal_ratio) << " exceeds the union " << fmt_pct(failure)
      << ".";
  return computed(Criterion::FailureRate, std::move(metrics),
                  score_of(config, Criterion::FailureRate, failure), n.str());
}

CriterionResult eval_frequency(const EventLog& log, const AssessmentConfig& config) {
  validate_config(config);
  if (log.empty()) throw EmptyLogError();
  const std::string& target = config.target_activity;
  const int offset = config.business_hours.utc_offset_minutes;
  const BucketUnit unit = config.frequency_bucket;

  std::map<std::int64_t, std::uint64_t> per_bucket;
  std::uint64_t total = 0;
  for (const Case& c : log.cases)
    for (const Event& e : c.events)
      if (e.activity == target) {
        ++per_bucket[bucket_index(e.timestamp, unit, offset)];
        ++total;
      }
  if (total == 0) throw UnknownActivityError(target);

  const auto& span = *log.time_span;
  const std::int64_t first = bucket_index(span.first, unit, offset);
  const std::int64_t last = bucket_index(span.second, unit, offset);
  const std::int64_t n_buckets = last - first + 1;

  std::uint64_t min_count = UINT64_MAX, max_count = 0;
  for (std::int64_t b = first; b <= last; ++b) {
    const auto it = per_bucket.find(b);
    const std::uint64_t count = it == per_bucket.end() ? 0 : it->second;
    min_count = std::min(min_count, count);
    max_count = std::max(max_count, count);
  }
  const double mean = static_cast<double>(total) / static_cast<double>(n_buckets);

  std::map<std::string, double> metrics{
      {"total_occurrences", static_cast<double>(total)},
      {"mean_per_bucket", mean},
      {"min_per_bucket", static_cast<double>(min_count)},
      {"max_per_bucket", static_cast<double>(max_count)},
      {"n_buckets", static_cast<double>(n_buckets)},
  };
  std::ostringstream n;
  n << "\"" << target << "\" occurs " << total << " times over " << n_buckets << " "
    << to_string(unit) << " bucket(s) spanned by the log: mean " << fmt(mean)
    << ", minimum " << min_count << ", maximum " << max_count
    << " per bucket (empty buckets count as zero).";
  return computed(Criterion::Frequency, std::move(metrics),
                  score_of(config, Criterion::Frequency, mean), n.str());
}

CriterionResult eval_duration(const EventLog& log, const AssessmentConfig& config) {
  validate_config(config);
  if (log.empty()) throw EmptyLogError();
  const std::string& target = config.target_activity;

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
  if (with_n == 0) throw UnknownActivityError(target);

  const double ms_per_day = static_cast<double>(kMillisPerDay);
  const double mean_with =
      static_cast<double>(with_sum) / static_cast<double>(with_n) / ms_per_day;

  std::map<std::string, double> metrics{
      {"mean_throughput_with", mean_with},
      {"n_cases_with", static_cast<double>(with_n)},
      {"n_cases_without", static_cast<double>(without_n)},
  };
  std::ostringstream n;
  n << with_n << " case(s) containing \"" << target << "\" average " << fmt(mean_with)
    << " days of throughput";
  std::optional<double> score;
  if (without_n > 0) {
    const double mean_without =
        static_cast<double>(without_sum) / static_cast<double>(without_n) / ms_per_day;
    const double delta = mean_with - mean_without;
    metrics["mean_throughput_without"] = mean_without;
    metrics["delta"] = delta;
    score = score_of(config, Criterion::Duration, delta);
    n << "; " << without_n << " case(s) without it average " << fmt(mean_without)
      << " days (delta " << fmt(delta) << " days).";
  } else {
    n << "; every case contains it, so no throughput delta can be computed.";
  }
  n << " The log carries completion instants only, so the activity's own execution time"
       " stays unknown.";
  return computed(Criterion::Duration, std::move(metrics), score, n.str());
}

CriterionResult eval_urgency(const EventLog& log, const AssessmentConfig& config) {
  validate_config(config);
  if (log.empty()) throw EmptyLogError();
  const std::string& target = config.target_activity;

  std::uint64_t total = 0, outside = 0;
  for (const Case& c : log.cases)
    for (const Event& e : c.events)
      if (e.activity == target) {
        ++total;
        if (!config.business_hours.contains(e.timestamp)) ++outside;
      }
  if (total == 0) throw UnknownActivityError(target);
  const double ratio = static_cast<double>(outside) / static_cast<double>(total);

  std::map<std::string, double> metrics{
      {"out_of_hours_ratio", ratio},
      {"out_of_hours_count", static_cast<double>(outside)},
      {"n_target_events", static_cast<double>(total)},
  };
  std::ostringstream n;
  n << outside << " of " << total << " executions of \"" << target << "\" ("
    << fmt_pct(ratio) << ") fall outside the configured business hours;"
    << " off-hours demand favors software robots that run around the clock.";
  return computed(Criterion::Urgency, std::move(metrics),
                  score_of(config, Criterion::Urgency, ratio), n.str());
}

CriterionResult eval_resources(const EventLog& log, const AssessmentConfig& config) {
  validate_config(config);
  if (log.empty()) throw EmptyLogError();
  const std::string& target = config.target_activity;

  std::set<std::string> users;
  std::uint64_t total = 0, missing = 0;
  std::uint64_t per_case_sum = 0, n_cases = 0;
  for (const Case& c : log.cases) {
    std::set<std::string> case_users;
    bool contains = false;
    for (const Event& e : c.events) {
      if (e.activity != target) continue;
      contains = true;
      ++total;
      if (e.resource && !e.resource->empty()) {
        users.insert(*e.resource);
        case_users.insert(*e.resource);
      } else {
        ++missing;
      }
    }
    if (contains) {
      ++n_cases;
      per_case_sum += case_users.size();
    }
  }
  if (total == 0) throw UnknownActivityError(target);
  if (missing == total)
    return not_evaluable(Criterion::Resources, "no resource attribute");

  const double missing_ratio = static_cast<double>(missing) / static_cast<double>(total);
  const double mean_per_case =
      static_cast<double>(per_case_sum) / static_cast<double>(n_cases);
  const double distinct = static_cast<double>(users.size());

  std::map<std::string, double> metrics{
      {"n_distinct_users_on_activity", distinct},
      {"mean_users_per_case", mean_per_case},
      {"missing_resource_ratio", missing_ratio},
  };
  std::ostringstream n;
  n << users.size() << " distinct user(s) execute \"" << target << "\" across " << n_cases
    << " case(s), " << fmt(mean_per_case) << " distinct user(s) per case on average.";
  if (missing > 0)
    n << " " << missing << " execution(s) (" << fmt_pct(missing_ratio)
      << ") carry no resource and are excluded from the distinct count.";
  return computed(Criterion::Resources, std::move(metrics),
                  score_of(config, Criterion::Resources, distinct), n.str());
}

CriterionResult eval_human_error_proneness(const EventLog& log,
                                           const AssessmentConfig& config) {
  const CriterionResult failure = eval_failure_rate(log, config);
  const double failure_rate = failure.metrics.at("failure_rate");
  const std::string& target = config.target_activity;

  std::uint64_t total = 0, human = 0;
  for (const Case& c : log.cases)
    for (const Event& e : c.events) {
      if (e.activity != target) continue;
      ++total;
      bool robot = false;
      if (e.resource)
        for (const std::string& pattern : config.robot_resource_patterns)
          if (!pattern.empty() && e.resource->find(pattern) != std::string::npos) {
            robot = true;
            break;
          }
      if (!robot) ++human;  // unattributed executions are presumed human
    }
  const double human_share = static_cast<double>(human) / static_cast<double>(total);
  const double rate = failure_rate * human_share;

  std::map<std::string, double> metrics{
      {"human_error_rate", rate},
      {"human_share", human_share},
  };
  std::ostringstream n;
  n << fmt_pct(human_share) << " of \"" << target
    << "\" executions come from human accounts; attributing the " << fmt_pct(failure_rate)
    << " failure rate to them gives a human error rate of " << fmt_pct(rate) << ".";
  if (human == total) n << " No robot account pattern matched, so all failures read as human.";
  return computed(Criterion::HumanErrorProneness, std::move(metrics),
                  score_of(config, Criterion::HumanErrorProneness, rate), n.str());
}

CriterionResult eval_number_of_systems(const EventLog& log, const AssessmentConfig& config,
                                       const std::string& system_attribute) {
  validate_config(config);
  if (log.empty()) throw EmptyLogError();
  const std::string& target = config.target_activity;

  std::set<std::string> systems;
  bool attribute_seen = false;
  for (const Case& c : log.cases) {
    if (!c.contains_activity(target)) continue;
    if (auto it = c.case_attributes.find(system_attribute); it != c.case_attributes.end()) {
      attribute_seen = true;
      systems.insert(attribute_text(it->second));
      continue;
    }
    for (const Event& e : c.events)
      if (auto it = e.attributes.find(system_attribute); it != e.attributes.end()) {
        attribute_seen = true;
        systems.insert(attribute_text(it->second));
      }
  }
  if (!attribute_seen)
    return not_evaluable(Criterion::NumberOfSystems, "no system attribute in log");

  const double distinct = static_cast<double>(systems.size());
  std::map<std::string, double> metrics{{"n_distinct_systems", distinct}};
  std::ostringstream n;
  n << systems.size() << " distinct value(s) of \"" << system_attribute
    << "\" appear on cases containing \"" << target
    << "\". A recorded system may be a roofing system hiding further subsystems, so this"
       " count is a lower bound.";
  return computed(Criterion::NumberOfSystems, std::move(metrics),
                  score_of(config, Criterion::NumberOfSystems, distinct), n.str());
}

CriterionResult eval_number_of_systems(const EventLog& log, const AssessmentConfig& config) {
  return eval_number_of_systems(log, config, config.system_attribute);
}

CriterionResult eval_external(Criterion c, const AssessmentConfig& config) {
  if (!is_external_criterion(c)) throw UnknownCriterionError(std::string(criterion_id(c)));
  if (auto it = config.external_evidence.find(c); it != config.external_evidence.end()) {
    CriterionResult r;
    r.criterion = c;
    r.status = ResultStatus::External;
    r.metrics = {{"external_value", it->second.value}};
    r.normalized_score = it->second.value;
    r.narrative = "External evidence: " +
                  (it->second.note.empty() ? std::string("(no note)") : it->second.note);
    return r;
  }
  switch (c) {
    case Criterion::Determinism:
      return not_evaluable(c, "requires user-interface interaction data");
    case Criterion::Structuredness:
      return not_evaluable(c, "requires information about the processed data objects");
    case Criterion::Interfaces:
      return not_evaluable(c, "requires information about interface interactions");
    default:
      return not_evaluable(c, "requires exception and incident data");
  }
}

CriterionResult eval_standardization(const EventLog& log, const AssessmentConfig& config) {
  return eval_standardization(log, config, prepare_analysis(log, config));
}

CriterionResult eval_maturity(const EventLog& log, const AssessmentConfig& config) {
  return eval_maturity(log, config, prepare_analysis(log, config));
}

std::vector<CriterionResult> evaluate_all(const EventLog& log, const AssessmentConfig& config) {
  const Analysis analysis = prepare_analysis(log, config);
  std::vector<CriterionResult> results;
  results.reserve(kCriterionCount);
  for (Criterion c : all_criteria()) {
    switch (c) {
      case Criterion::Standardization:
        results.push_back(eval_standardization(log, config, analysis));
        break;
      case Criterion::Maturity:
        results.push_back(eval_maturity(log, config, analysis));
        break;
      case Criterion::FailureRate:
        results.push_back(eval_failure_rate(log, config));
        break;
      case Criterion::Frequency:
        results.push_back(eval_frequency(log, config));
        break;
      case Criterion::Duration:
        results.push_back(eval_duration(log, config));
        break;
      case Criterion::Urgency:
        results.push_back(eval_urgency(log, config));
        break;
      case Criterion::Resources:
        results.push_back(eval_resources(log, config));
        break;
      case Criterion::HumanErrorProneness:
        results.push_back(eval_human_error_proneness(log, config));
        break;
      case Criterion::NumberOfSystems:
        results.push_back(eval_number_of_systems(log, config));
        break;
      default:
        results.push_back(eval_external(c, config));
        break;
    }
  }
  return results;
}

}  // namespace rpafit
