// SPDX-License-Identifier: Apache-2.0
#include "rpafit/scorecard.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "rpafit/errors.hpp"

namespace rpafit {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt_score(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

// Shortest round-trip decimal, matching the JSON rendering.
std::string fmt_metric(double v) { return ordered_json(v).dump(); }

}  // namespace

Scorecard build_scorecard(std::vector<CriterionResult> results,
                          const std::map<Criterion, double>& weights,
                          const std::string& activity, Timestamp generated_at,
                          const std::string& log_fingerprint) {
  for (const auto& [criterion, weight] : weights)
    if (weight < 0.0)
      throw ConfigError("weight for " + std::string(criterion_id(criterion)) +
                        " must be non-negative");

  std::vector<CriterionResult> ordered;
  ordered.reserve(kCriterionCount);
  for (Criterion c : all_criteria()) {
    std::size_t found = 0;
    for (const CriterionResult& r : results)
      if (r.criterion == c) {
        if (found == 0) ordered.push_back(r);
        ++found;
      }
    if (found == 0)
      throw IncompleteResultsError("missing result for criterion " +
                                   std::string(criterion_id(c)));
    if (found > 1)
      throw IncompleteResultsError("duplicate result for criterion " +
                                   std::string(criterion_id(c)));
  }
  if (results.size() != kCriterionCount)
    throw IncompleteResultsError("expected 13 results, got " +
                                 std::to_string(results.size()));

  Scorecard card;
  card.activity = activity;
  card.results = std::move(ordered);
  card.generated_at = generated_at;
  card.log_fingerprint = log_fingerprint;

  double weight_sum = 0.0, weighted = 0.0;
  std::size_t scored = 0;
  for (const CriterionResult& r : card.results) {
    if (r.status != ResultStatus::NotEvaluable) ++card.evaluable_count;
    if (!r.normalized_score) continue;
    ++scored;
    const auto it = weights.find(r.criterion);
    const double w = it == weights.end() ? 1.0 : it->second;
    weight_sum += w;
    weighted += w * *r.normalized_score;
  }
  if (scored > 0) {
    if (weight_sum == 0.0) throw AllWeightsZeroError();
    card.aggregate = weighted / weight_sum;
  }
  return card;
}

std::string render_json(const Scorecard& card) {
  ordered_json root;
  root["schema_version"] = "1";
  root["activity"] = card.activity;
  root["generated_at"] = format_iso8601(card.generated_at);
  root["log_fingerprint"] = card.log_fingerprint;
  if (card.aggregate)
    root["aggregate"] = *card.aggregate;
  else
    root["aggregate"] = nullptr;
  root["evaluable_count"] = card.evaluable_count;

  ordered_json results = ordered_json::array();
  for (const CriterionResult& r : card.results) {
    ordered_json entry;
    entry["criterion"] = std::string(criterion_id(r.criterion));
    entry["perspective"] = std::string(to_string(r.perspective()));
    entry["status"] = std::string(to_string(r.status));
    if (r.status == ResultStatus::NotEvaluable)
      entry["not_evaluable_reason"] = r.not_evaluable_reason;
    ordered_json metrics = ordered_json::object();
    for (const auto& [key, value] : r.metrics) metrics[key] = value;
    entry["metrics"] = metrics;
    if (r.normalized_score)
      entry["normalized_score"] = *r.normalized_score;
    else
      entry["normalized_score"] = nullptr;
    entry["narrative"] = r.narrative;
    results.push_back(entry);
  }
  root["results"] = results;
  return root.dump(2) + "\n";
}

std::string render_markdown(const Scorecard& card) {
  std::ostringstream out;
  out << "# RPA viability scorecard: " << card.activity << "\n\n";
  out << "- Generated: " << format_iso8601(card.generated_at) << "\n";
  out << "- Log fingerprint: " << card.log_fingerprint << "\n";
  out << "- Evaluable criteria: " << card.evaluable_count << " of " << kCriterionCount << "\n";
  if (card.aggregate)
    out << "- Aggregate score: " << fmt_score(*card.aggregate) << "\n";
  else
    out << "- Aggregate score: not available (no scored criteria)\n";

  Perspective current = Perspective::Task;
  bool first = true;
  for (const CriterionResult& r : card.results) {
    if (first || r.perspective() != current) {
      current = r.perspective();
      first = false;
      std::string name(to_string(current));
      name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
      out << "\n## " << name << " perspective\n";
    }
    out << "\n### " << criterion_id(r.criterion) << "\n\n";
    out << "- Status: " << to_string(r.status) << "\n";
    if (r.status == ResultStatus::NotEvaluable)
      out << "- Reason: " << r.not_evaluable_reason << "\n";
    if (r.normalized_score) out << "- Score: " << fmt_score(*r.normalized_score) << "\n";
    for (const auto& [key, value] : r.metrics)
      out << "- " << key << ": " << fmt_metric(value) << "\n";
    out << "\n" << r.narrative << "\n";
  }
  return out.str();
}

std::string report_json_schema() {
  static const char* schema = R"({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "RPA viability scorecard",
  "type": "object",
  "required": ["schema_version", "activity", "generated_at", "log_fingerprint",
               "aggregate", "evaluable_count", "results"],
  "properties": {
    "schema_version": {"const": "1"},
    "activity": {"type": "string"},
    "generated_at": {"type": "string", "format": "date-time"},
    "log_fingerprint": {"type": "string", "pattern": "^fnv1a64:[0-9a-f]{16}$"},
    "aggregate": {"type": ["number", "null"], "minimum": 0, "maximum": 1},
    "evaluable_count": {"type": "integer", "minimum": 0, "maximum": 13},
    "results": {
      "type": "array",
      "minItems": 13,
      "maxItems": 13,
      "items": {
        "type": "object",
        "required": ["criterion", "perspective", "status", "metrics",
                     "normalized_score", "narrative"],
        "properties": {
          "criterion": {"enum": ["standardization", "maturity", "determinism",
                                 "failure_rate", "frequency", "duration", "urgency",
                                 "structuredness", "interfaces", "stability",
                                 "number_of_systems", "resources",
                                 "human_error_proneness"]},
          "perspective": {"enum": ["task", "time", "data", "system", "human"]},
          "status": {"enum": ["computed", "external", "not_evaluable"]},
          "not_evaluable_reason": {"type": "string"},
          "metrics": {"type": "object", "additionalProperties": {"type": "number"}},
          "normalized_score": {"type": ["number", "null"], "minimum": 0, "maximum": 1},
          "narrative": {"type": "string"}
        }
      }
    }
  }
}
)";
  return schema;
}

Scorecard parse_scorecard_json(const std::string& text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed scorecard JSON: ") + e.what());
  }
  try {
    if (root.at("schema_version").get<std::string>() != "1")
      throw Error("unsupported scorecard schema_version");
    Scorecard card;
    card.activity = root.at("activity").get<std::string>();
    card.generated_at = parse_iso8601(root.at("generated_at").get<std::string>());
    card.log_fingerprint = root.at("log_fingerprint").get<std::string>();
    if (!root.at("aggregate").is_null()) card.aggregate = root["aggregate"].get<double>();
    card.evaluable_count = root.at("evaluable_count").get<std::size_t>();
    for (const auto& entry : root.at("results")) {
      CriterionResult r;
      const auto id = entry.at("criterion").get<std::string>();
      const auto criterion = criterion_from_id(id);
      if (!criterion) throw Error("unknown criterion id \"" + id + "\"");
      r.criterion = *criterion;
      const auto perspective = entry.at("perspective").get<std::string>();
      if (perspective != to_string(r.perspective()))
        throw Error("perspective \"" + perspective + "\" does not match criterion \"" + id +
                    "\"");
      const auto status = entry.at("status").get<std::string>();
      if (status == "computed")
        r.status = ResultStatus::Computed;
      else if (status == "external")
        r.status = ResultStatus::External;
      else if (status == "not_evaluable")
        r.status = ResultStatus::NotEvaluable;
      else
        throw Error("unknown result status \"" + status + "\"");
      if (entry.contains("not_evaluable_reason"))
        r.not_evaluable_reason = entry["not_evaluable_reason"].get<std::string>();
      for (const auto& [key, value] : entry.at("metrics").items())
        r.metrics[key] = value.get<double>();
      if (!entry.at("normalized_score").is_null())
        r.normalized_score = entry["normalized_score"].get<double>();
      r.narrative = entry.at("narrative").get<std::string>();
      card.results.push_back(std::move(r));
    }
    if (card.results.size() != kCriterionCount)
      throw IncompleteResultsError("scorecard JSON carries " +
                                   std::to_string(card.results.size()) + " results");
    return card;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("scorecard JSON violates the schema: ") + e.what());
  }
}

}  // namespace rpafit
