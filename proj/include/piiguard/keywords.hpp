/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "piiguard/types.hpp"

namespace piiguard {

// Context keyword table: `keyword<TAB>entity_type`, one pair per line,
// '#' comments and blank lines allowed. Keywords are matched casefolded
// and, when they contain letters, at word boundaries.
class KeywordTable {
 public:
  KeywordTable() = default;

  static KeywordTable parse_tsv(std::string_view content,
                                const std::string& origin);
  static KeywordTable load_file(const std::string& path);
  // Merged resolver keyword tables for the given locales.
  static KeywordTable bundled(const std::set<std::string>& locales);
  // Merged financial-context keyword tables for the given locales.
  static KeywordTable bundled_financial(const std::set<std::string>& locales);

  void merge(const KeywordTable& other);

  // All (keyword, supported type) pairs found inside `window`.
  std::vector<std::pair<std::string, EntityType>> hits(
      std::string_view window) const;

  // Number of keyword occurrences in `window` supporting `type`.
  std::size_t support(std::string_view window, EntityType type) const;

  // True when any keyword (regardless of type) occurs in `window`.
  bool any(std::string_view window) const;

  std::size_t size() const { return entries_.size(); }

 private:
  // keyword stored casefolded; sorted unique by (keyword, type)
  std::vector<std::pair<std::string, EntityType>> entries_;
};

}  // namespace piiguard
