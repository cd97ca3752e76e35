/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "piiguard/keywords.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "piiguard/bundled.hpp"
#include "piiguard/errors.hpp"
#include "piiguard/text.hpp"

namespace piiguard {

namespace {

bool has_letter(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size())
    if (text::is_letter(text::decode_at(s, i))) return true;
  return false;
}

// Occurrences of `needle` in casefolded `hay`, at word boundaries when the
// needle is word-like; plain substring otherwise (covers "$", "€").
std::size_t count_occurrences(std::string_view hay, const std::string& needle,
                              bool word_like) {
  std::size_t n = 0;
  std::size_t pos = 0;
  while ((pos = hay.find(needle, pos)) != std::string_view::npos) {
    bool ok = true;
    if (word_like) {
      if (pos > 0) {
        char32_t before = text::decode_before(hay, pos);
        if (text::is_word_char(before)) ok = false;
      }
      std::size_t after_pos = pos + needle.size();
      if (ok && after_pos < hay.size()) {
        std::size_t p = after_pos;
        char32_t after = text::decode_at(hay, p);
        if (text::is_word_char(after)) ok = false;
      }
    }
    if (ok) ++n;
    pos += needle.size();
  }
  return n;
}

}  // namespace

KeywordTable KeywordTable::parse_tsv(std::string_view content,
                                     const std::string& origin) {
  KeywordTable table;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t eol = content.find('\n', pos);
    std::string_view line = content.substr(
        pos, eol == std::string_view::npos ? content.size() - pos : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? content.size() + 1 : eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw ParseError("keyword table '" + origin +
                       "': expected keyword<TAB>entity_type", line_no);
    std::string keyword = text::casefold(line.substr(0, tab));
    std::string type_name(line.substr(tab + 1));
    auto type = entity_type_from(type_name);
    if (keyword.empty() || !type)
      throw ParseError("keyword table '" + origin + "': bad entry '" +
                       std::string(line) + "'", line_no);
    table.entries_.emplace_back(std::move(keyword), *type);
  }
  std::sort(table.entries_.begin(), table.entries_.end());
  table.entries_.erase(
      std::unique(table.entries_.begin(), table.entries_.end()),
      table.entries_.end());
  return table;
}

KeywordTable KeywordTable::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open keyword table: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tsv(buf.str(), path);
}

void KeywordTable::merge(const KeywordTable& other) {
  entries_.insert(entries_.end(), other.entries_.begin(),
                  other.entries_.end());
  std::sort(entries_.begin(), entries_.end());
  entries_.erase(std::unique(entries_.begin(), entries_.end()),
                 entries_.end());
}

KeywordTable KeywordTable::bundled(const std::set<std::string>& locales) {
  KeywordTable out;
  for (const std::string& loc : locales) {
    std::string name = "keywords/" + loc + ".tsv";
    if (!has_bundled_resource(name)) continue;
    out.merge(parse_tsv(bundled_resource(name), "bundled:" + name));
  }
  return out;
}

KeywordTable KeywordTable::bundled_financial(
    const std::set<std::string>& locales) {
  KeywordTable out;
  for (const std::string& loc : locales) {
    std::string name = "keywords/financial_" + loc + ".tsv";
    if (!has_bundled_resource(name)) continue;
    out.merge(parse_tsv(bundled_resource(name), "bundled:" + name));
  }
  return out;
}

std::vector<std::pair<std::string, EntityType>> KeywordTable::hits(
    std::string_view window) const {
  std::vector<std::pair<std::string, EntityType>> out;
  std::string folded = text::casefold(window);
  for (const auto& [keyword, type] : entries_) {
    std::size_t n = count_occurrences(folded, keyword, has_letter(keyword));
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(keyword, type);
  }
  return out;
}

std::size_t KeywordTable::support(std::string_view window,
                                  EntityType type) const {
  std::size_t n = 0;
  std::string folded = text::casefold(window);
  for (const auto& [keyword, t] : entries_)
    if (t == type) n += count_occurrences(folded, keyword, has_letter(keyword));
  return n;
}

bool KeywordTable::any(std::string_view window) const {
  std::string folded = text::casefold(window);
  for (const auto& [keyword, t] : entries_)
    if (count_occurrences(folded, keyword, has_letter(keyword)) > 0)
      return true;
  return false;
}

}  // namespace piiguard
