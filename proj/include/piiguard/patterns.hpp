/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include <boost/regex.hpp>

#include "piiguard/types.hpp"

namespace piiguard {

// One declarative recognizer rule. Checksum-bearing rules are hard-gated:
// a match whose stripped digits fail the named validator is discarded.
struct PatternRule {
  std::string id;
  EntityType entity_type = EntityType::Person;
  std::string regex_text;
  boost::regex regex;
  enum class Checksum { None, Luhn, Verhoeff, Ssn, SteuerId };
  Checksum checksum = Checksum::None;
  std::size_t min_digits = 0;
  std::size_t max_digits = std::numeric_limits<std::size_t>::max();
  double confidence = 0.9;
  // Rules marked pseudonym-only run only when the active policy protects
  // pseudonymized identifiers.
  bool requires_pseudonyms = false;
};

struct LocalePatterns {
  std::string locale;  // "common" for locale-neutral rules
  std::vector<PatternRule> rules;
  std::vector<std::string> honorifics;  // surface forms, e.g. "Dr."
  std::vector<std::string> locations;   // known place names, possibly multiword
};

// Parses a pattern file. Problems (bad regex, unknown type/checksum) are
// collected and reported together in one ParseError.
LocalePatterns parse_patterns_json(std::string_view json_text,
                                   const std::string& origin);

LocalePatterns load_patterns_file(const std::string& path);

// Bundled pattern file for a locale tag ("common", "en", ...).
LocalePatterns bundled_patterns(const std::string& locale);
bool has_bundled_patterns(const std::string& locale);

}  // namespace piiguard
