// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rpafit/criteria.hpp"
#include "rpafit/time.hpp"

namespace rpafit {

/// Per-activity assessment: the thirteen criterion results in canonical
/// report order plus the weight-normalized aggregate over scored results.
struct Scorecard {
  std::string activity;
  std::vector<CriterionResult> results;
  std::optional<double> aggregate;
  std::size_t evaluable_count = 0;  // results whose status is not NotEvaluable
  Timestamp generated_at{0};
  std::string log_fingerprint;

  friend bool operator==(const Scorecard&, const Scorecard&) = default;
};

/// Orders the results canonically and aggregates Σ(w·s)/Σw over results that
/// carry a normalized score; missing weights default to 1. Throws
/// IncompleteResultsError (missing/duplicate criterion), AllWeightsZeroError
/// (scored results exist but their weights sum to zero), ConfigError
/// (negative weight).
Scorecard build_scorecard(std::vector<CriterionResult> results,
                          const std::map<Criterion, double>& weights,
                          const std::string& activity, Timestamp generated_at,
                          const std::string& log_fingerprint);

/// JSON report with stable key order; schema documented by
/// report_json_schema(). A trailing newline is included.
std::string render_json(const Scorecard& card);

/// Markdown report grouping the criteria under the five perspective headings.
std::string render_markdown(const Scorecard& card);

/// The published JSON report schema (JSON Schema draft-07 text).
std::string report_json_schema();

/// Inverse of render_json, used for round-trip checks and downstream tooling.
/// Throws Error on malformed or schema-violating input.
Scorecard parse_scorecard_json(const std::string& text);

}  // namespace rpafit
