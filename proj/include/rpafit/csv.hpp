// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rpafit/event_log.hpp"

namespace rpafit {

/// How to read an event log out of a delimited text file. With has_header =
/// false the column fields must be 0-based indices ("0", "1", ...).
struct ColumnMapping {
  std::string case_id_column = "case_id";
  std::string activity_column = "activity";
  std::string timestamp_column = "timestamp";
  std::string timestamp_pattern = "yyyy/MM/dd HH:mm:ss.SSS";
  std::optional<std::string> resource_column = "resource";
  std::vector<std::string> case_attribute_columns;
  std::vector<std::string> event_attribute_columns;
  char delimiter = ',';
  bool has_header = true;
  int utc_offset_minutes = 0;  // applied to timestamps without a zone designator
};

/// Parse a delimited event-log export. Rows are grouped by case id in order
/// of first appearance; within a case, events are sorted by timestamp with
/// file order breaking ties. Case attributes come from the first row of each
/// case; later disagreements are recorded as warnings on the log.
///
/// Throws FileNotFoundError, MalformedRowError (wrong column count, empty
/// case id or activity, reserved label), TimestampParseError, EmptyLogError.
EventLog parse_csv(const std::filesystem::path& path, const ColumnMapping& mapping);

/// Write a log in a shape parse_csv(default-ish mapping) reads back: the four
/// standard columns plus one column per attribute key listed in
/// `case_attribute_columns` / `event_attribute_columns` of `mapping`. Fields
/// are quoted per RFC 4180 when needed.
void write_csv(const EventLog& log, const std::filesystem::path& path,
               const ColumnMapping& mapping);

/// Split one RFC 4180 record. Exposed for tests.
std::vector<std::string> split_csv_record(const std::string& record, char delimiter);

}  // namespace rpafit
