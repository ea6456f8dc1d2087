// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>

#include "rpafit/event_log.hpp"

namespace rpafit {

/// Parse the XES subset log -> trace -> event with string/date/int/float/
/// boolean child attributes. "concept:name" on a trace becomes the case id,
/// on an event the activity; "time:timestamp" the event timestamp;
/// "org:resource" the resource. Remaining attributes land in the attribute
/// maps. Extensions, globals and classifiers are ignored. Traces without
/// events are skipped with a warning.
///
/// Throws FileNotFoundError, XmlParseError, MissingKeyError (event or trace
/// lacking a required key, by trace index), EmptyLogError.
EventLog parse_xes(const std::filesystem::path& path);

/// Write a log as XES with the same subset; timestamps as ISO 8601 UTC.
void write_xes(const EventLog& log, const std::filesystem::path& path);

}  // namespace rpafit
