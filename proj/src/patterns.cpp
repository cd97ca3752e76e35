/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "piiguard/patterns.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "piiguard/bundled.hpp"
#include "piiguard/errors.hpp"

namespace piiguard {

namespace {

using nlohmann::json;

PatternRule::Checksum checksum_from(const std::string& name, bool& ok) {
  ok = true;
  if (name == "luhn") return PatternRule::Checksum::Luhn;
  if (name == "verhoeff") return PatternRule::Checksum::Verhoeff;
  if (name == "ssn") return PatternRule::Checksum::Ssn;
  if (name == "steuerid") return PatternRule::Checksum::SteuerId;
  ok = false;
  return PatternRule::Checksum::None;
}

}  // namespace

LocalePatterns parse_patterns_json(std::string_view json_text,
                                   const std::string& origin) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError("pattern file '" + origin + "': " + e.what());
  }
  if (!doc.is_object())
    throw ParseError("pattern file '" + origin + "': top level must be an object");

  LocalePatterns out;
  std::vector<std::string> problems;
  out.locale = doc.value("locale", std::string{});
  if (out.locale.empty()) problems.push_back("missing 'locale'");
  for (const auto& h : doc.value("honorifics", json::array()))
    out.honorifics.push_back(h.get<std::string>());
  for (const auto& l : doc.value("locations", json::array()))
    out.locations.push_back(l.get<std::string>());

  for (const auto& p : doc.value("patterns", json::array())) {
    PatternRule rule;
    rule.id = p.value("id", std::string{});
    if (rule.id.empty()) {
      problems.push_back("pattern with missing 'id'");
      continue;
    }
    std::string type_name = p.value("entity_type", std::string{});
    auto type = entity_type_from(type_name);
    if (!type) {
      problems.push_back("pattern '" + rule.id + "': unknown entity_type '" +
                         type_name + "'");
      continue;
    }
    rule.entity_type = *type;
    rule.regex_text = p.value("regex", std::string{});
    if (rule.regex_text.empty()) {
      problems.push_back("pattern '" + rule.id + "': missing 'regex'");
      continue;
    }
    try {
      rule.regex.assign(rule.regex_text, boost::regex::perl);
    } catch (const boost::regex_error& e) {
      problems.push_back("pattern '" + rule.id + "': bad regex: " + e.what());
      continue;
    }
    if (p.contains("checksum") && !p["checksum"].is_null()) {
      bool ok;
      rule.checksum = checksum_from(p["checksum"].get<std::string>(), ok);
      if (!ok)
        problems.push_back("pattern '" + rule.id + "': unknown checksum '" +
                           p["checksum"].get<std::string>() + "'");
    }
    rule.min_digits = p.value("min_digits", std::size_t{0});
    rule.max_digits =
        p.value("max_digits", std::numeric_limits<std::size_t>::max());
    rule.confidence = p.value("confidence", 0.9);
    rule.requires_pseudonyms = p.value("requires_pseudonyms", false);
    out.rules.push_back(std::move(rule));
  }

  if (!problems.empty()) {
    std::string msg = "pattern file '" + origin + "' has problems:";
    for (const auto& pr : problems) msg += "\n  - " + pr;
    throw ParseError(msg);
  }
  return out;
}

LocalePatterns load_patterns_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open pattern file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_patterns_json(buf.str(), path);
}

bool has_bundled_patterns(const std::string& locale) {
  return has_bundled_resource("patterns/" + locale + ".json");
}

LocalePatterns bundled_patterns(const std::string& locale) {
  std::string name = "patterns/" + locale + ".json";
  return parse_patterns_json(bundled_resource(name), "bundled:" + name);
}

}  // namespace piiguard
