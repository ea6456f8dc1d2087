// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rpafit {

/// Base class for all library errors. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FileNotFoundError : public Error {
 public:
  explicit FileNotFoundError(const std::string& path)
      : Error("file not found: " + path) {}
};

class MalformedRowError : public Error {
 public:
  MalformedRowError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class TimestampParseError : public Error {
 public:
  TimestampParseError(std::size_t line, const std::string& raw, const std::string& why)
      : Error("line " + std::to_string(line) + ": bad timestamp \"" + raw + "\" (" + why + ")"),
        line_(line),
        raw_(raw) {}
  std::size_t line() const { return line_; }
  const std::string& raw() const { return raw_; }

 private:
  std::size_t line_;
  std::string raw_;
};

class EmptyLogError : public Error {
 public:
  EmptyLogError() : Error("event log contains no cases") {}
  explicit EmptyLogError(const std::string& what) : Error(what) {}
};

class XmlParseError : public Error {
 public:
  using Error::Error;
};

class MissingKeyError : public Error {
 public:
  MissingKeyError(std::size_t case_index, const std::string& key)
      : Error("trace " + std::to_string(case_index) + ": missing required key \"" + key + "\""),
        case_index_(case_index),
        key_(key) {}
  std::size_t case_index() const { return case_index_; }
  const std::string& key() const { return key_; }

 private:
  std::size_t case_index_;
  std::string key_;
};

class UnknownActivityError : public Error {
 public:
  explicit UnknownActivityError(const std::string& activity)
      : Error("activity \"" + activity + "\" does not occur in the log"), activity_(activity) {}
  const std::string& activity() const { return activity_; }

 private:
  std::string activity_;
};

class InvalidFractionError : public Error {
 public:
  explicit InvalidFractionError(double fraction)
      : Error("coverage fraction " + std::to_string(fraction) + " outside (0, 1]") {}
};

class ZeroTotalError : public Error {
 public:
  explicit ZeroTotalError(const std::string& what) : Error(what) {}
};

class UnknownCriterionError : public Error {
 public:
  explicit UnknownCriterionError(const std::string& id)
      : Error("\"" + id + "\" is not an external-evidence criterion") {}
};

class InvalidSpecError : public Error {
 public:
  InvalidSpecError(const std::string& field, const std::string& why)
      : Error("invalid generator spec, field \"" + field + "\": " + why), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class IncompleteResultsError : public Error {
 public:
  explicit IncompleteResultsError(const std::string& what) : Error(what) {}
};

class AllWeightsZeroError : public Error {
 public:
  AllWeightsZeroError() : Error("all weights over scored criteria are zero") {}
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace rpafit
