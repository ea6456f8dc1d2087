// SPDX-License-Identifier: Apache-2.0
//
// rpafit: assess how well a business-process activity suits robotic process
// automation, from an event log alone.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rpafit/config_io.hpp"
#include "rpafit/criteria.hpp"
#include "rpafit/csv.hpp"
#include "rpafit/errors.hpp"
#include "rpafit/filter.hpp"
#include "rpafit/fingerprint.hpp"
#include "rpafit/scorecard.hpp"
#include "rpafit/synth.hpp"
#include "rpafit/variants.hpp"
#include "rpafit/xes.hpp"

namespace {

using namespace rpafit;

struct CommonOptions {
  std::string log_path;
  std::string mapping_path;
  bool xes = false;
};

void add_input_flags(CLI::App* cmd, CommonOptions& options) {
  cmd->add_option("--log", options.log_path, "event log file (CSV, or XES with --xes/.xes)")
      ->required();
  cmd->add_option("--mapping", options.mapping_path, "column mapping JSON for CSV input");
  cmd->add_flag("--xes", options.xes, "read the log as XES XML");
}

EventLog read_log(const CommonOptions& options) {
  const std::filesystem::path path = options.log_path;
  EventLog log;
  if (options.xes || path.extension() == ".xes") {
    log = parse_xes(path);
  } else {
    const ColumnMapping mapping = options.mapping_path.empty()
                                      ? ColumnMapping{}
                                      : load_column_mapping(options.mapping_path);
    log = parse_csv(path, mapping);
  }
  for (const std::string& warning : log.warnings)
    std::cerr << "warning: " << warning << "\n";
  return log;
}

std::pair<std::string, std::string> split_once(const std::string& text, char sep,
                                               const char* what) {
  const auto pos = text.find(sep);
  if (pos == std::string::npos)
    throw ConfigError(std::string(what) + ": expected \"" + sep + std::string("\" in \"") +
                      text + "\"");
  return {text.substr(0, pos), text.substr(pos + 1)};
}

double parse_double(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(std::string(what) + ": \"" + text + "\" is not a number");
  }
}

void write_output(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot write output file: " + out_path);
  out << content;
}

std::string format_share(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string join_sequence(const std::vector<std::string>& sequence) {
  std::string out;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (i > 0) out += " -> ";
    out += sequence[i];
  }
  return out;
}

Timestamp now_utc() {
  return Timestamp{std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::system_clock::now().time_since_epoch())
                       .count()};
}

int run_analyze(const CommonOptions& input, const std::string& config_path,
                const std::string& activity, const std::vector<std::string>& filters,
                const std::string& from, const std::string& to, double coverage,
                const std::string& format, const std::string& out_path,
                const std::vector<std::string>& preds, const std::vector<std::string>& succs,
                std::size_t pred_k, std::size_t succ_k, bool pred_k_set, bool succ_k_set,
                const std::vector<std::string>& failure_terminals, bool no_rework_failure,
                const std::string& business_days, const std::string& business_start,
                const std::string& business_end, int utc_offset, bool utc_offset_set,
                const std::string& bucket, const std::vector<std::string>& robot_patterns,
                const std::string& system_attribute,
                const std::vector<std::string>& externals,
                const std::vector<std::string>& weight_flags,
                const std::vector<std::string>& norm_flags) {
  AssessmentConfig config;
  std::string effective_config = config_path;
  if (effective_config.empty()) {
    if (const char* env = std::getenv("RPAFIT_CONFIG"); env && *env) effective_config = env;
  }
  if (!effective_config.empty()) config = load_assessment_config(effective_config);

  if (!activity.empty()) config.target_activity = activity;
  if (config.target_activity.empty())
    throw ConfigError("no target activity: pass --activity or set it in the config file");
  if (!preds.empty()) config.valid_predecessors = std::set<std::string>(preds.begin(), preds.end());
  if (!succs.empty()) config.valid_successors = std::set<std::string>(succs.begin(), succs.end());
  if (pred_k_set) config.auto_predecessor_count = pred_k;
  if (succ_k_set) config.auto_successor_count = succ_k;
  if (!failure_terminals.empty())
    config.failure_terminal_activities =
        std::set<std::string>(failure_terminals.begin(), failure_terminals.end());
  if (no_rework_failure) config.rework_counts_as_failure = false;
  if (!business_days.empty()) {
    std::ostringstream json;
    json << "{\"business_hours\":{\"weekdays\":[";
    std::istringstream in(business_days);
    std::string day;
    bool first = true;
    while (std::getline(in, day, ',')) {
      if (!first) json << ',';
      json << '"' << day << '"';
      first = false;
    }
    json << "]}}";
    config.business_hours.weekdays =
        parse_assessment_config(json.str()).business_hours.weekdays;
  }
  if (!business_start.empty() || !business_end.empty()) {
    std::ostringstream json;
    json << "{\"business_hours\":{";
    bool first = true;
    if (!business_start.empty()) {
      json << "\"start\":\"" << business_start << '"';
      first = false;
    }
    if (!business_end.empty()) {
      if (!first) json << ',';
      json << "\"end\":\"" << business_end << '"';
    }
    json << "}}";
    const BusinessHours parsed = parse_assessment_config(json.str()).business_hours;
    if (!business_start.empty()) config.business_hours.start_minute = parsed.start_minute;
    if (!business_end.empty()) config.business_hours.end_minute = parsed.end_minute;
    if (config.business_hours.start_minute >= config.business_hours.end_minute)
      throw ConfigError("business hours start must precede end");
  }
  if (utc_offset_set) config.business_hours.utc_offset_minutes = utc_offset;
  if (!bucket.empty()) {
    const auto unit = bucket_unit_from_string(bucket);
    if (!unit) throw ConfigError("--bucket must be day, week, or month, got \"" + bucket + "\"");
    config.frequency_bucket = *unit;
  }
  if (!robot_patterns.empty()) config.robot_resource_patterns = robot_patterns;
  if (!system_attribute.empty()) config.system_attribute = system_attribute;
  for (const std::string& flag : externals) {
    // id=value or id=value:note
    auto [id, rest] = split_once(flag, '=', "--external");
    const auto criterion = criterion_from_id(id);
    if (!criterion) throw ConfigError("--external: unknown criterion id \"" + id + "\"");
    ExternalEvidence evidence;
    const auto colon = rest.find(':');
    if (colon == std::string::npos) {
      evidence.value = parse_double(rest, "--external");
    } else {
      evidence.value = parse_double(rest.substr(0, colon), "--external");
      evidence.note = rest.substr(colon + 1);
    }
    config.external_evidence[*criterion] = evidence;
  }
  for (const std::string& flag : weight_flags) {
    auto [id, value] = split_once(flag, '=', "--weight");
    const auto criterion = criterion_from_id(id);
    if (!criterion) throw ConfigError("--weight: unknown criterion id \"" + id + "\"");
    config.weights[*criterion] = parse_double(value, "--weight");
  }
  for (const std::string& flag : norm_flags) {
    // id=x:y,x:y,...
    auto [id, rest] = split_once(flag, '=', "--norm");
    const auto criterion = criterion_from_id(id);
    if (!criterion) throw ConfigError("--norm: unknown criterion id \"" + id + "\"");
    PiecewiseLinear map;
    std::istringstream in(rest);
    std::string pair;
    while (std::getline(in, pair, ',')) {
      auto [x, y] = split_once(pair, ':', "--norm");
      map.points.emplace_back(parse_double(x, "--norm"), parse_double(y, "--norm"));
    }
    if (map.points.empty()) throw ConfigError("--norm: no breakpoints given");
    for (std::size_t i = 1; i < map.points.size(); ++i)
      if (map.points[i].first <= map.points[i - 1].first)
        throw ConfigError("--norm: breakpoint inputs must be strictly increasing");
    config.normalization[*criterion] = std::move(map);
  }

  EventLog log = read_log(input);

  CaseFilter filter;
  for (const std::string& flag : filters) {
    auto [key, value] = split_once(flag, '=', "--filter");
    filter.attribute_equals.emplace_back(key, value);
  }
  if (!from.empty()) filter.window_begin = parse_iso8601(from);
  if (!to.empty()) filter.window_end = parse_iso8601(to);
  if (!filter.attribute_equals.empty() || filter.window_begin || filter.window_end) {
    log = filter_cases(log, filter);
    for (const std::string& warning : log.warnings) std::cerr << "warning: " << warning << "\n";
    if (log.empty()) throw EmptyLogError("no case survives the configured filters");
  }
  if (coverage != 1.0) {
    const VariantTable table = build_variant_table(log);
    log = coverage_filter(table, log, coverage);
  }

  const std::vector<CriterionResult> results = evaluate_all(log, config);
  const Scorecard card =
      build_scorecard(results, config.weights, config.target_activity, now_utc(),
                      fingerprint_file(input.log_path));
  write_output(format == "markdown" ? render_markdown(card) : render_json(card), out_path);
  return 0;
}

int run_variants(const CommonOptions& input, double coverage, std::size_t top) {
  EventLog log = read_log(input);
  if (coverage != 1.0) {
    const VariantTable full = build_variant_table(log);
    log = coverage_filter(full, log, coverage);
  }
  const VariantTable table = build_variant_table(log);
  std::cout << "cases: " << table.total_cases << "\nvariants: " << table.variants.size()
            << "\n";
  std::size_t shown = 0;
  for (const Variant& v : table.variants) {
    if (top > 0 && shown >= top) break;
    const double share =
        static_cast<double>(v.count) / static_cast<double>(table.total_cases);
    std::cout << v.count << "\t" << format_share(share) << "\t" << join_sequence(v.sequence)
              << "\n";
    ++shown;
  }
  return 0;
}

int run_context(const CommonOptions& input, const std::string& activity) {
  const EventLog log = read_log(input);
  const Dfg dfg = build_dfg(log);
  const ActivityContext context = activity_context(dfg, activity);
  std::cout << "activity: " << context.activity << "\noccurrences: " << context.total_in
            << "\npredecessors:\n";
  for (const auto& [label, count] : context.predecessors)
    std::cout << "  " << count << "\t"
              << format_share(static_cast<double>(count) /
                              static_cast<double>(context.total_in))
              << "\t" << label << "\n";
  std::cout << "successors:\n";
  for (const auto& [label, count] : context.successors)
    std::cout << "  " << count << "\t"
              << format_share(static_cast<double>(count) /
                              static_cast<double>(context.total_out))
              << "\t" << label << "\n";
  return 0;
}

int run_activities(const CommonOptions& input) {
  const EventLog log = read_log(input);
  for (const auto& [activity, count] : activity_occurrences(log))
    std::cout << count << "\t" << activity << "\n";
  return 0;
}

int run_generate(const std::string& spec_path, const std::string& out_dir) {
  const SynthSpec spec = load_synth_spec(spec_path);
  const auto [log, ledger] = generate(spec);
  std::filesystem::create_directories(out_dir);
  const std::filesystem::path dir = out_dir;

  ColumnMapping mapping;
  if (!spec.system_pool.empty()) mapping.case_attribute_columns = {spec.system_attribute_key};
  write_csv(log, dir / "log.csv", mapping);

  std::ofstream ledger_out(dir / "ledger.json", std::ios::binary);
  if (!ledger_out) throw Error("cannot write ledger file: " + (dir / "ledger.json").string());
  ledger_out << ledger_to_json(ledger);

  std::cerr << "wrote " << (dir / "log.csv").string() << " (" << log.cases.size()
            << " cases, " << log.total_events() << " events) and "
            << (dir / "ledger.json").string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Event-log analysis of RPA viability per process activity"};
  app.require_subcommand(1);

  CommonOptions analyze_input;
  std::string config_path, activity, from, to, format = "json", out_path;
  std::vector<std::string> filters, preds, succs, failure_terminals, robot_patterns, externals,
      weight_flags, norm_flags;
  double coverage = 1.0;
  std::size_t pred_k = 5, succ_k = 2;
  bool no_rework_failure = false;
  std::string business_days, business_start, business_end, bucket, system_attribute;
  int utc_offset = 0;

  CLI::App* analyze = app.add_subcommand("analyze", "evaluate all thirteen criteria");
  add_input_flags(analyze, analyze_input);
  analyze->add_option("--activity", activity, "target activity (overrides the config)");
  analyze->add_option("--config", config_path,
                      "assessment config JSON (default: $RPAFIT_CONFIG)");
  analyze->add_option("--filter", filters, "keep cases whose attribute equals value (key=value)");
  analyze->add_option("--from", from, "keep cases starting at or after this ISO 8601 instant");
  analyze->add_option("--to", to, "keep cases starting before this ISO 8601 instant");
  analyze->add_option("--coverage", coverage,
                      "keep the most frequent variants covering this case share (0,1]");
  analyze->add_option("--format", format, "json or markdown")
      ->check(CLI::IsMember({"json", "markdown"}));
  analyze->add_option("--out", out_path, "write the report here instead of stdout");
  analyze->add_option("--pred", preds, "valid predecessor (repeat; overrides auto-derivation)");
  analyze->add_option("--succ", succs, "valid successor (repeat; overrides auto-derivation)");
  auto* pred_k_opt = analyze->add_option("--pred-k", pred_k, "auto-derived predecessor count");
  auto* succ_k_opt = analyze->add_option("--succ-k", succ_k, "auto-derived successor count");
  analyze->add_option("--failure-terminal", failure_terminals,
                      "activity that marks a failed case end (repeat)");
  analyze->add_flag("--no-rework-failure", no_rework_failure,
                    "do not count rework as failure");
  analyze->add_option("--business-days", business_days, "comma list of mon..sun");
  analyze->add_option("--business-start", business_start, "daily window start, HH:MM");
  analyze->add_option("--business-end", business_end, "daily window end, HH:MM");
  auto* utc_offset_opt =
      analyze->add_option("--utc-offset", utc_offset, "local-time offset in minutes");
  analyze->add_option("--bucket", bucket, "frequency bucket: day, week, or month");
  analyze->add_option("--robot-pattern", robot_patterns,
                      "substring marking robot accounts (repeat)");
  analyze->add_option("--system-attribute", system_attribute,
                      "case attribute naming the originating system");
  analyze->add_option("--external", externals,
                      "external evidence: criterion=value or criterion=value:note (repeat)");
  analyze->add_option("--weight", weight_flags, "aggregate weight: criterion=number (repeat)");
  analyze->add_option("--norm", norm_flags,
                      "score map override: criterion=in:score,in:score,... (repeat)");

  CommonOptions variants_input;
  double variants_coverage = 1.0;
  std::size_t variants_top = 0;
  CLI::App* variants = app.add_subcommand("variants", "list trace variants by frequency");
  add_input_flags(variants, variants_input);
  variants->add_option("--coverage", variants_coverage,
                       "apply a coverage filter before listing");
  variants->add_option("--top", variants_top, "print only the first N variants");

  CommonOptions context_input;
  std::string context_activity;
  CLI::App* context = app.add_subcommand("context", "show an activity's neighbor counts");
  add_input_flags(context, context_input);
  context->add_option("activity", context_activity, "activity label")->required();

  CommonOptions activities_input;
  CLI::App* activities = app.add_subcommand("activities", "list activities and counts");
  add_input_flags(activities, activities_input);

  std::string spec_path, gen_out;
  CLI::App* generate_cmd =
      app.add_subcommand("generate", "emit a synthetic log with its ground-truth ledger");
  generate_cmd->add_option("--spec", spec_path, "generator spec JSON")->required();
  generate_cmd->add_option("--out", gen_out, "output directory")->required();

  CLI::App* schema = app.add_subcommand("report-schema", "print the JSON report schema");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (analyze->parsed())
      return run_analyze(analyze_input, config_path, activity, filters, from, to, coverage,
                         format, out_path, preds, succs, pred_k, succ_k,
                         pred_k_opt->count() > 0, succ_k_opt->count() > 0, failure_terminals,
                         no_rework_failure, business_days, business_start, business_end,
                         utc_offset, utc_offset_opt->count() > 0, bucket, robot_patterns,
                         system_attribute, externals, weight_flags, norm_flags);
    if (variants->parsed()) return run_variants(variants_input, variants_coverage, variants_top);
    if (context->parsed()) return run_context(context_input, context_activity);
    if (activities->parsed()) return run_activities(activities_input);
    if (generate_cmd->parsed()) return run_generate(spec_path, gen_out);
    if (schema->parsed()) {
      std::cout << report_json_schema();
      return 0;
    }
  } catch (const rpafit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
