// SPDX-License-Identifier: Apache-2.0
#include "rpafit/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "rpafit/errors.hpp"

namespace rpafit {

namespace {

constexpr std::size_t kMaxStoredWarnings = 200;

// Pulls RFC 4180 records out of a buffer. Quoted fields may contain the
// delimiter, doubled quotes and line breaks; a record's line number is the
// physical line it starts on.
class RecordReader {
 public:
  RecordReader(const std::string& buffer, char delimiter)
      : buf_(buffer), delim_(delimiter) {}

  bool next(std::vector<std::string>& fields, std::size_t& record_line) {
    fields.clear();
    // skip blank lines
    while (pos_ < buf_.size() && (buf_[pos_] == '\n' || buf_[pos_] == '\r')) {
      if (buf_[pos_] == '\n') ++line_;
      ++pos_;
    }
    if (pos_ >= buf_.size()) return false;
    record_line = line_;

    std::string field;
    bool in_quotes = false;
    while (pos_ < buf_.size()) {
      const char c = buf_[pos_];
      if (in_quotes) {
        if (c == '"') {
          if (pos_ + 1 < buf_.size() && buf_[pos_ + 1] == '"') {
            field += '"';
            pos_ += 2;
          } else {
            in_quotes = false;
            ++pos_;
          }
        } else {
          if (c == '\n') ++line_;
          field += c;
          ++pos_;
        }
      } else if (c == '"' && field.empty()) {
        in_quotes = true;
        ++pos_;
      } else if (c == delim_) {
        fields.push_back(std::move(field));
        field.clear();
        ++pos_;
      } else if (c == '\n' || c == '\r') {
        if (c == '\r' && pos_ + 1 < buf_.size() && buf_[pos_ + 1] == '\n') ++pos_;
        ++pos_;
        ++line_;
        fields.push_back(std::move(field));
        return true;
      } else {
        field += c;
        ++pos_;
      }
    }
    fields.push_back(std::move(field));
    return true;
  }

 private:
  const std::string& buf_;
  char delim_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

std::size_t resolve_column(const std::vector<std::string>& header, const std::string& name,
                           bool has_header, std::size_t width) {
  if (has_header) {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return i;
    throw ConfigError("column \"" + name + "\" not found in header");
  }
  std::size_t idx = 0;
  try {
    idx = static_cast<std::size_t>(std::stoul(name));
  } catch (const std::exception&) {
    throw ConfigError("headerless input needs numeric column indices, got \"" + name + "\"");
  }
  if (idx >= width)
    throw ConfigError("column index " + name + " out of range for " +
                      std::to_string(width) + " columns");
  return idx;
}

std::string attr_to_string(const AttrValue& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&v)) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", *d);
    return buf;
  }
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return format_iso8601(std::get<Timestamp>(v));
}

void write_field(std::string& out, const std::string& value, char delim) {
  const bool needs_quotes = value.find_first_of("\"\r\n") != std::string::npos ||
                            value.find(delim) != std::string::npos;
  if (!needs_quotes) {
    out += value;
    return;
  }
  out += '"';
  for (const char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
}

}  // namespace

std::vector<std::string> split_csv_record(const std::string& record, char delimiter) {
  RecordReader reader(record, delimiter);
  std::vector<std::string> fields;
  std::size_t line = 0;
  reader.next(fields, line);
  return fields;
}

EventLog parse_csv(const std::filesystem::path& path, const ColumnMapping& mapping) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFoundError(path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string buffer = ss.str();

  RecordReader reader(buffer, mapping.delimiter);
  std::vector<std::string> fields;
  std::size_t line = 0;

  std::vector<std::string> header;
  std::size_t width = 0;
  bool have_layout = false;

  std::size_t idx_case = 0, idx_activity = 0, idx_timestamp = 0;
  std::optional<std::size_t> idx_resource;
  std::vector<std::pair<std::string, std::size_t>> case_attr_cols;
  std::vector<std::pair<std::string, std::size_t>> event_attr_cols;

  auto resolve_layout = [&](const std::vector<std::string>& first_record) {
    width = first_record.size();
    if (mapping.has_header) header = first_record;
    idx_case = resolve_column(header, mapping.case_id_column, mapping.has_header, width);
    idx_activity = resolve_column(header, mapping.activity_column, mapping.has_header, width);
    idx_timestamp = resolve_column(header, mapping.timestamp_column, mapping.has_header, width);
    if (mapping.resource_column && !mapping.resource_column->empty())
      idx_resource = resolve_column(header, *mapping.resource_column, mapping.has_header, width);
    for (const std::string& name : mapping.case_attribute_columns)
      case_attr_cols.emplace_back(name, resolve_column(header, name, mapping.has_header, width));
    for (const std::string& name : mapping.event_attribute_columns)
      event_attr_cols.emplace_back(name, resolve_column(header, name, mapping.has_header, width));
    have_layout = true;
  };

  std::vector<Case> cases;
  std::unordered_map<std::string, std::size_t> case_index;
  std::vector<std::string> warnings;
  std::unordered_set<std::string> warned;  // case_id + '\x1f' + key
  std::size_t suppressed_warnings = 0;

  bool first = true;
  while (reader.next(fields, line)) {
    if (first && mapping.has_header) {
      resolve_layout(fields);
      first = false;
      continue;
    }
    if (!have_layout) resolve_layout(fields);
    first = false;

    if (fields.size() != width)
      throw MalformedRowError(line, "expected " + std::to_string(width) + " columns, got " +
                                        std::to_string(fields.size()));

    Event event;
    event.case_id = trim(fields[idx_case]);
    if (event.case_id.empty()) throw MalformedRowError(line, "empty case id");
    event.activity = trim(fields[idx_activity]);
    if (event.activity.empty()) throw MalformedRowError(line, "empty activity label");
    if (is_reserved_label(event.activity))
      throw MalformedRowError(line, "reserved activity label \"" + event.activity + "\"");

    const std::string raw_ts = trim(fields[idx_timestamp]);
    try {
      event.timestamp =
          parse_timestamp(raw_ts, mapping.timestamp_pattern, mapping.utc_offset_minutes);
    } catch (const std::invalid_argument& e) {
      throw TimestampParseError(line, raw_ts, e.what());
    }
    if (idx_resource) {
      const std::string r = trim(fields[*idx_resource]);
      if (!r.empty()) event.resource = r;
    }
    for (const auto& [name, idx] : event_attr_cols) {
      const std::string v = trim(fields[idx]);
      if (!v.empty()) event.attributes.emplace(name, v);
    }

    auto [it, inserted] = case_index.try_emplace(event.case_id, cases.size());
    if (inserted) {
      Case c;
      c.case_id = event.case_id;
      for (const auto& [name, idx] : case_attr_cols) {
        const std::string v = trim(fields[idx]);
        if (!v.empty()) c.case_attributes.emplace(name, v);
      }
      cases.push_back(std::move(c));
    } else {
      Case& c = cases[it->second];
      for (const auto& [name, idx] : case_attr_cols) {
        const std::string v = trim(fields[idx]);
        auto attr = c.case_attributes.find(name);
        const std::string current =
            attr == c.case_attributes.end() ? std::string() : attr_to_string(attr->second);
        if (v != current) {
          if (warned.insert(event.case_id + '\x1f' + name).second) {
            if (warnings.size() < kMaxStoredWarnings)
              warnings.push_back("case \"" + event.case_id + "\": attribute \"" + name +
                                 "\" changes from \"" + current + "\" to \"" + v +
                                 "\" on line " + std::to_string(line) + "; first value kept");
            else
              ++suppressed_warnings;
          }
        }
      }
    }
    cases[it->second].events.push_back(std::move(event));
  }

  if (cases.empty()) throw EmptyLogError("no event rows in " + path.string());
  if (suppressed_warnings > 0)
    warnings.push_back("(" + std::to_string(suppressed_warnings) +
                       " further attribute conflicts suppressed)");
  return finalize_log(std::move(cases), std::move(warnings));
}

void write_csv(const EventLog& log, const std::filesystem::path& path,
               const ColumnMapping& mapping) {
  std::string out;
  out.reserve(log.total_events() * 64);
  const char d = mapping.delimiter;

  if (mapping.has_header) {
    write_field(out, mapping.case_id_column, d);
    out += d;
    write_field(out, mapping.activity_column, d);
    out += d;
    write_field(out, mapping.timestamp_column, d);
    if (mapping.resource_column && !mapping.resource_column->empty()) {
      out += d;
      write_field(out, *mapping.resource_column, d);
    }
    for (const std::string& name : mapping.case_attribute_columns) {
      out += d;
      write_field(out, name, d);
    }
    for (const std::string& name : mapping.event_attribute_columns) {
      out += d;
      write_field(out, name, d);
    }
    out += '\n';
  }

  for (const Case& c : log.cases) {
    for (const Event& e : c.events) {
      write_field(out, c.case_id, d);
      out += d;
      write_field(out, e.activity, d);
      out += d;
      write_field(out, format_timestamp(e.timestamp, mapping.timestamp_pattern), d);
      if (mapping.resource_column && !mapping.resource_column->empty()) {
        out += d;
        write_field(out, e.resource.value_or(""), d);
      }
      for (const std::string& name : mapping.case_attribute_columns) {
        out += d;
        auto it = c.case_attributes.find(name);
        write_field(out, it == c.case_attributes.end() ? "" : attr_to_string(it->second), d);
      }
      for (const std::string& name : mapping.event_attribute_columns) {
        out += d;
        auto it = e.attributes.find(name);
        write_field(out, it == e.attributes.end() ? "" : attr_to_string(it->second), d);
      }
      out += '\n';
    }
  }

  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open " + path.string() + " for writing");
  file << out;
}

}  // namespace rpafit
