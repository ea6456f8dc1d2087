// SPDX-License-Identifier: Apache-2.0
#include "rpafit/config_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rpafit/errors.hpp"

namespace rpafit {

namespace {

using nlohmann::json;

json parse_root(const std::string& text, const char* what) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed ") + what + " JSON: " + e.what());
  }
  if (!root.is_object()) throw ConfigError(std::string(what) + " must be a JSON object");
  return root;
}

void reject_unknown_keys(const json& root, const std::set<std::string>& known,
                         const char* what) {
  for (const auto& [key, value] : root.items())
    if (!known.contains(key))
      throw ConfigError(std::string("unknown ") + what + " key \"" + key + "\"");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFoundError(path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

template <typename T>
T get_as(const json& value, const char* where) {
  try {
    return value.get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("bad value for ") + where);
  }
}

int parse_clock_minutes(const std::string& text, const char* where) {
  int h = 0, m = 0;
  char colon = 0;
  std::istringstream in(text);
  if (!(in >> h >> colon >> m) || colon != ':' || !in.eof() || h < 0 || h > 24 || m < 0 ||
      m > 59 || (h == 24 && m != 0))
    throw ConfigError(std::string(where) + ": expected a clock time \"HH:MM\", got \"" + text +
                      "\"");
  return h * 60 + m;
}

int weekday_from_name(const std::string& name) {
  static const std::map<std::string, int> days = {{"mon", 0}, {"tue", 1}, {"wed", 2},
                                                  {"thu", 3}, {"fri", 4}, {"sat", 5},
                                                  {"sun", 6}};
  const auto it = days.find(name);
  if (it == days.end())
    throw ConfigError("unknown weekday \"" + name + "\" (use mon..sun)");
  return it->second;
}

BusinessHours parse_business_hours(const json& node) {
  if (!node.is_object()) throw ConfigError("business_hours must be an object");
  reject_unknown_keys(node, {"weekdays", "start", "end", "utc_offset_minutes"},
                      "business_hours");
  BusinessHours hours;
  if (node.contains("weekdays")) {
    hours.weekdays.fill(false);
    for (const auto& day : node["weekdays"])
      hours.weekdays[static_cast<std::size_t>(
          weekday_from_name(get_as<std::string>(day, "business_hours.weekdays")))] = true;
  }
  if (node.contains("start"))
    hours.start_minute =
        parse_clock_minutes(get_as<std::string>(node["start"], "business_hours.start"),
                            "business_hours.start");
  if (node.contains("end"))
    hours.end_minute = parse_clock_minutes(
        get_as<std::string>(node["end"], "business_hours.end"), "business_hours.end");
  if (node.contains("utc_offset_minutes"))
    hours.utc_offset_minutes =
        get_as<int>(node["utc_offset_minutes"], "business_hours.utc_offset_minutes");
  if (hours.start_minute >= hours.end_minute)
    throw ConfigError("business_hours start must precede end");
  return hours;
}

Criterion parse_criterion(const std::string& id) {
  const auto c = criterion_from_id(id);
  if (!c) throw ConfigError("unknown criterion id \"" + id + "\"");
  return *c;
}

PiecewiseLinear parse_breakpoints(const json& node, const std::string& where) {
  if (!node.is_array() || node.empty())
    throw ConfigError(where + ": expected a non-empty array of [input, score] pairs");
  PiecewiseLinear map;
  for (const auto& pair : node) {
    if (!pair.is_array() || pair.size() != 2)
      throw ConfigError(where + ": each breakpoint must be an [input, score] pair");
    map.points.emplace_back(get_as<double>(pair[0], where.c_str()),
                            get_as<double>(pair[1], where.c_str()));
  }
  for (std::size_t i = 1; i < map.points.size(); ++i)
    if (map.points[i].first <= map.points[i - 1].first)
      throw ConfigError(where + ": breakpoint inputs must be strictly increasing");
  for (const auto& [x, y] : map.points)
    if (y < 0.0 || y > 1.0) throw ConfigError(where + ": scores must lie in [0, 1]");
  return map;
}

}  // namespace

AssessmentConfig parse_assessment_config(const std::string& json_text) {
  const json root = parse_root(json_text, "assessment config");
  reject_unknown_keys(root,
                      {"target_activity", "valid_predecessors", "valid_successors",
                       "auto_predecessor_count", "auto_successor_count",
                       "failure_terminal_activities", "rework_counts_as_failure",
                       "business_hours", "frequency_bucket", "robot_resource_patterns",
                       "system_attribute", "external_evidence", "weights", "normalization"},
                      "assessment config");
  AssessmentConfig config;
  if (root.contains("target_activity"))
    config.target_activity = get_as<std::string>(root["target_activity"], "target_activity");
  if (root.contains("valid_predecessors"))
    config.valid_predecessors =
        get_as<std::set<std::string>>(root["valid_predecessors"], "valid_predecessors");
  if (root.contains("valid_successors"))
    config.valid_successors =
        get_as<std::set<std::string>>(root["valid_successors"], "valid_successors");
  if (root.contains("auto_predecessor_count"))
    config.auto_predecessor_count =
        get_as<std::size_t>(root["auto_predecessor_count"], "auto_predecessor_count");
  if (root.contains("auto_successor_count"))
    config.auto_successor_count =
        get_as<std::size_t>(root["auto_successor_count"], "auto_successor_count");
  if (root.contains("failure_terminal_activities"))
    config.failure_terminal_activities = get_as<std::set<std::string>>(
        root["failure_terminal_activities"], "failure_terminal_activities");
  if (root.contains("rework_counts_as_failure"))
    config.rework_counts_as_failure =
        get_as<bool>(root["rework_counts_as_failure"], "rework_counts_as_failure");
  if (root.contains("business_hours"))
    config.business_hours = parse_business_hours(root["business_hours"]);
  if (root.contains("frequency_bucket")) {
    const auto text = get_as<std::string>(root["frequency_bucket"], "frequency_bucket");
    const auto unit = bucket_unit_from_string(text);
    if (!unit)
      throw ConfigError("frequency_bucket must be day, week, or month, got \"" + text + "\"");
    config.frequency_bucket = *unit;
  }
  if (root.contains("robot_resource_patterns"))
    config.robot_resource_patterns = get_as<std::vector<std::string>>(
        root["robot_resource_patterns"], "robot_resource_patterns");
  if (root.contains("system_attribute"))
    config.system_attribute = get_as<std::string>(root["system_attribute"], "system_attribute");
  if (root.contains("external_evidence")) {
    for (const auto& [id, node] : root["external_evidence"].items()) {
      reject_unknown_keys(node, {"value", "note"}, "external_evidence entry");
      ExternalEvidence evidence;
      evidence.value = get_as<double>(node.at("value"), "external_evidence value");
      if (node.contains("note"))
        evidence.note = get_as<std::string>(node["note"], "external_evidence note");
      config.external_evidence[parse_criterion(id)] = evidence;
    }
  }
  if (root.contains("weights"))
    for (const auto& [id, node] : root["weights"].items())
      config.weights[parse_criterion(id)] = get_as<double>(node, "weight");
  if (root.contains("normalization"))
    for (const auto& [id, node] : root["normalization"].items())
      config.normalization[parse_criterion(id)] =
          parse_breakpoints(node, "normalization." + id);
  return config;
}

AssessmentConfig load_assessment_config(const std::filesystem::path& path) {
  return parse_assessment_config(read_file(path));
}

ColumnMapping parse_column_mapping(const std::string& json_text) {
  const json root = parse_root(json_text, "column mapping");
  reject_unknown_keys(root,
                      {"case_id_column", "activity_column", "timestamp_column",
                       "timestamp_pattern", "resource_column", "case_attribute_columns",
                       "event_attribute_columns", "delimiter", "has_header",
                       "utc_offset_minutes"},
                      "column mapping");
  ColumnMapping mapping;
  if (root.contains("case_id_column"))
    mapping.case_id_column = get_as<std::string>(root["case_id_column"], "case_id_column");
  if (root.contains("activity_column"))
    mapping.activity_column = get_as<std::string>(root["activity_column"], "activity_column");
  if (root.contains("timestamp_column"))
    mapping.timestamp_column =
        get_as<std::string>(root["timestamp_column"], "timestamp_column");
  if (root.contains("timestamp_pattern"))
    mapping.timestamp_pattern =
        get_as<std::string>(root["timestamp_pattern"], "timestamp_pattern");
  if (root.contains("resource_column")) {
    if (root["resource_column"].is_null())
      mapping.resource_column.reset();
    else
      mapping.resource_column =
          get_as<std::string>(root["resource_column"], "resource_column");
  }
  if (root.contains("case_attribute_columns"))
    mapping.case_attribute_columns = get_as<std::vector<std::string>>(
        root["case_attribute_columns"], "case_attribute_columns");
  if (root.contains("event_attribute_columns"))
    mapping.event_attribute_columns = get_as<std::vector<std::string>>(
        root["event_attribute_columns"], "event_attribute_columns");
  if (root.contains("delimiter")) {
    const auto text = get_as<std::string>(root["delimiter"], "delimiter");
    if (text.size() != 1)
      throw ConfigError("delimiter must be a single character, got \"" + text + "\"");
    mapping.delimiter = text[0];
  }
  if (root.contains("has_header"))
    mapping.has_header = get_as<bool>(root["has_header"], "has_header");
  if (root.contains("utc_offset_minutes"))
    mapping.utc_offset_minutes =
        get_as<int>(root["utc_offset_minutes"], "utc_offset_minutes");
  return mapping;
}

ColumnMapping load_column_mapping(const std::filesystem::path& path) {
  return parse_column_mapping(read_file(path));
}

SynthSpec parse_synth_spec(const std::string& json_text) {
  const json root = parse_root(json_text, "generator spec");
  reject_unknown_keys(root,
                      {"n_cases", "variant_templates", "target_activity", "rework_probability",
                       "terminal_failure_probability", "failure_terminal_activity", "user_pool",
                       "robot_user_pool", "robot_user_share", "out_of_hours_share",
                       "business_hours", "inter_event_gap", "start_window", "start_stride_ms",
                       "system_pool", "system_attribute_key", "seed"},
                      "generator spec");
  SynthSpec spec;
  if (root.contains("n_cases"))
    spec.n_cases = get_as<std::uint64_t>(root["n_cases"], "n_cases");
  if (root.contains("variant_templates")) {
    spec.variant_templates.clear();
    for (const auto& node : root["variant_templates"]) {
      reject_unknown_keys(node, {"sequence", "probability"}, "variant template");
      VariantTemplate t;
      t.sequence = get_as<std::vector<std::string>>(node.at("sequence"), "template sequence");
      t.probability = get_as<double>(node.at("probability"), "template probability");
      spec.variant_templates.push_back(std::move(t));
    }
  }
  if (root.contains("target_activity"))
    spec.target_activity = get_as<std::string>(root["target_activity"], "target_activity");
  if (root.contains("rework_probability"))
    spec.rework_probability = get_as<double>(root["rework_probability"], "rework_probability");
  if (root.contains("terminal_failure_probability"))
    spec.terminal_failure_probability = get_as<double>(root["terminal_failure_probability"],
                                                       "terminal_failure_probability");
  if (root.contains("failure_terminal_activity"))
    spec.failure_terminal_activity =
        get_as<std::string>(root["failure_terminal_activity"], "failure_terminal_activity");
  if (root.contains("user_pool"))
    spec.user_pool = get_as<std::vector<std::string>>(root["user_pool"], "user_pool");
  if (root.contains("robot_user_pool"))
    spec.robot_user_pool =
        get_as<std::vector<std::string>>(root["robot_user_pool"], "robot_user_pool");
  if (root.contains("robot_user_share"))
    spec.robot_user_share = get_as<double>(root["robot_user_share"], "robot_user_share");
  if (root.contains("out_of_hours_share") && !root["out_of_hours_share"].is_null())
    spec.out_of_hours_share = get_as<double>(root["out_of_hours_share"], "out_of_hours_share");
  if (root.contains("business_hours"))
    spec.business_hours = parse_business_hours(root["business_hours"]);
  if (root.contains("inter_event_gap")) {
    const json& node = root["inter_event_gap"];
    if (node.is_number()) {
      spec.inter_event_gap.min_ms = spec.inter_event_gap.max_ms =
          get_as<std::int64_t>(node, "inter_event_gap");
    } else {
      reject_unknown_keys(node, {"min_ms", "max_ms"}, "inter_event_gap");
      spec.inter_event_gap.min_ms = get_as<std::int64_t>(node.at("min_ms"), "min_ms");
      spec.inter_event_gap.max_ms = get_as<std::int64_t>(node.at("max_ms"), "max_ms");
    }
  }
  if (root.contains("start_window")) {
    const json& node = root["start_window"];
    if (!node.is_array() || node.size() != 2)
      throw ConfigError("start_window must be a pair of ISO 8601 instants");
    const std::string begin = get_as<std::string>(node[0], "start_window begin");
    const std::string end = get_as<std::string>(node[1], "start_window end");
    try {
      spec.start_window.first = parse_iso8601(begin);
      spec.start_window.second = parse_iso8601(end);
    } catch (const std::exception& e) {
      throw ConfigError(std::string("start_window: ") + e.what());
    }
  }
  if (root.contains("start_stride_ms"))
    spec.start_stride_ms = get_as<std::int64_t>(root["start_stride_ms"], "start_stride_ms");
  if (root.contains("system_pool"))
    spec.system_pool = get_as<std::vector<std::string>>(root["system_pool"], "system_pool");
  if (root.contains("system_attribute_key"))
    spec.system_attribute_key =
        get_as<std::string>(root["system_attribute_key"], "system_attribute_key");
  if (root.contains("seed")) spec.seed = get_as<std::uint64_t>(root["seed"], "seed");
  return spec;
}

SynthSpec load_synth_spec(const std::filesystem::path& path) {
  return parse_synth_spec(read_file(path));
}

}  // namespace rpafit
