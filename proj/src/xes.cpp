// SPDX-License-Identifier: Apache-2.0
#include "rpafit/xes.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <cstdio>
#include <fstream>

#include "rpafit/errors.hpp"

namespace rpafit {

namespace {

namespace pt = boost::property_tree;

// One <string|date|int|float|boolean key=... value=.../> element.
bool read_attribute(const std::string& element, const pt::ptree& node, std::string& key,
                    AttrValue& value, std::size_t trace_index) {
  if (element != "string" && element != "date" && element != "int" && element != "float" &&
      element != "boolean")
    return false;
  const auto xmlattr = node.get_child_optional("<xmlattr>");
  if (!xmlattr) return false;
  const auto k = xmlattr->get_optional<std::string>("key");
  const auto v = xmlattr->get_optional<std::string>("value");
  if (!k || !v) return false;
  key = *k;
  try {
    if (element == "date") {
      value = parse_iso8601(*v);
    } else if (element == "int") {
      value = static_cast<std::int64_t>(std::stoll(*v));
    } else if (element == "float") {
      value = std::stod(*v);
    } else if (element == "boolean") {
      value = (*v == "true" || *v == "1");
    } else {
      value = *v;
    }
  } catch (const std::exception& e) {
    throw XmlParseError("trace " + std::to_string(trace_index) + ": bad " + element +
                        " value \"" + *v + "\" for key \"" + key + "\": " + e.what());
  }
  return true;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

void write_attribute(std::string& out, const std::string& indent, const std::string& key,
                     const AttrValue& value) {
  const char* element = "string";
  std::string text;
  if (const auto* s = std::get_if<std::string>(&value)) {
    text = *s;
  } else if (const auto* i = std::get_if<std::int64_t>(&value)) {
    element = "int";
    text = std::to_string(*i);
  } else if (const auto* d = std::get_if<double>(&value)) {
    element = "float";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", *d);
    text = buf;
  } else if (const auto* b = std::get_if<bool>(&value)) {
    element = "boolean";
    text = *b ? "true" : "false";
  } else {
    element = "date";
    text = format_iso8601(std::get<Timestamp>(value));
  }
  out += indent + "<" + element + " key=\"" + xml_escape(key) + "\" value=\"" +
         xml_escape(text) + "\"/>\n";
}

}  // namespace

EventLog parse_xes(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) throw FileNotFoundError(path.string());

  pt::ptree doc;
  try {
    pt::read_xml(path.string(), doc, pt::xml_parser::trim_whitespace);
  } catch (const pt::xml_parser_error& e) {
    throw XmlParseError(std::string("malformed XML: ") + e.what());
  }
  const auto log_node = doc.get_child_optional("log");
  if (!log_node) throw XmlParseError("no <log> element in " + path.string());

  std::vector<Case> cases;
  std::vector<std::string> warnings;
  std::size_t trace_index = 0;

  for (const auto& [log_child, trace_node] : *log_node) {
    if (log_child != "trace") continue;  // extensions, globals, classifiers

    Case c;
    bool have_case_id = false;
    for (const auto& [trace_child, node] : trace_node) {
      if (trace_child == "event") {
        Event e;
        bool have_activity = false, have_timestamp = false;
        for (const auto& [event_child, attr_node] : node) {
          std::string key;
          AttrValue value;
          if (!read_attribute(event_child, attr_node, key, value, trace_index)) continue;
          if (key == "concept:name") {
            e.activity = trim(std::get<std::string>(value));
            have_activity = true;
          } else if (key == "time:timestamp") {
            if (!std::holds_alternative<Timestamp>(value))
              throw XmlParseError("trace " + std::to_string(trace_index) +
                                  ": time:timestamp is not a date attribute");
            e.timestamp = std::get<Timestamp>(value);
            have_timestamp = true;
          } else if (key == "org:resource") {
            e.resource = std::get<std::string>(value);
          } else {
            e.attributes.emplace(std::move(key), std::move(value));
          }
        }
        if (!have_activity) throw MissingKeyError(trace_index, "concept:name");
        if (!have_timestamp) throw MissingKeyError(trace_index, "time:timestamp");
        if (e.activity.empty())
          throw XmlParseError("trace " + std::to_string(trace_index) + ": empty activity label");
        c.events.push_back(std::move(e));
      } else {
        std::string key;
        AttrValue value;
        if (!read_attribute(trace_child, node, key, value, trace_index)) continue;
        if (key == "concept:name") {
          if (!std::holds_alternative<std::string>(value))
            throw XmlParseError("trace " + std::to_string(trace_index) +
                                ": concept:name is not a string attribute");
          c.case_id = trim(std::get<std::string>(value));
          have_case_id = true;
        } else {
          c.case_attributes.emplace(std::move(key), std::move(value));
        }
      }
    }
    if (!have_case_id || c.case_id.empty()) throw MissingKeyError(trace_index, "concept:name");
    if (c.events.empty()) {
      warnings.push_back("trace " + std::to_string(trace_index) + " (\"" + c.case_id +
                         "\") has no events and was skipped");
    } else {
      cases.push_back(std::move(c));
    }
    ++trace_index;
  }

  if (cases.empty()) throw EmptyLogError("no traces with events in " + path.string());
  return finalize_log(std::move(cases), std::move(warnings));
}

void write_xes(const EventLog& log, const std::filesystem::path& path) {
  std::string out;
  out.reserve(log.total_events() * 160);
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<log xes.version=\"1.0\" xes.features=\"\">\n";
  for (const Case& c : log.cases) {
    out += "  <trace>\n";
    write_attribute(out, "    ", "concept:name", AttrValue{c.case_id});
    for (const auto& [key, value] : c.case_attributes) write_attribute(out, "    ", key, value);
    for (const Event& e : c.events) {
      out += "    <event>\n";
      write_attribute(out, "      ", "concept:name", AttrValue{e.activity});
      write_attribute(out, "      ", "time:timestamp", AttrValue{e.timestamp});
      if (e.resource) write_attribute(out, "      ", "org:resource", AttrValue{*e.resource});
      for (const auto& [key, value] : e.attributes) write_attribute(out, "      ", key, value);
      out += "    </event>\n";
    }
    out += "  </trace>\n";
  }
  out += "</log>\n";

  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open " + path.string() + " for writing");
  file << out;
}

}  // namespace rpafit
