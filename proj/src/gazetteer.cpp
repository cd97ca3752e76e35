/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "piiguard/gazetteer.hpp"

#include <fstream>
#include <sstream>

#include "piiguard/bundled.hpp"
#include "piiguard/errors.hpp"
#include "piiguard/text.hpp"

namespace piiguard {

namespace {

// Honorific prefixes stripped during normalization; stored casefolded.
const std::set<std::string>& honorific_prefixes() {
  static const std::set<std::string> kSet = {
      "mr", "mr.", "mrs", "mrs.", "ms", "ms.", "mx", "mx.", "dr", "dr.",
      "prof", "prof.", "sir", "madam", "herr", "frau", "m.", "mme", "mlle",
      "sr", "sr.", "sra", "sra.", "srta", "srta.", "dra", "dra.",
      "श्री", "श्रीमती", "डॉ."};
  return kSet;
}

}  // namespace

std::string normalize_name(std::string_view name) {
  std::string folded = text::normalize_ws(name);
  // Strip any leading honorifics (possibly several, e.g. "prof. dr.").
  for (;;) {
    std::size_t sp = folded.find(' ');
    if (sp == std::string::npos) break;
    std::string head = folded.substr(0, sp);
    if (!honorific_prefixes().count(head)) break;
    folded.erase(0, sp + 1);
  }
  return folded;
}

SnapshotStats Gazetteer::import_snapshot_text(std::string_view content,
                                              Kind kind,
                                              const std::string& locale,
                                              const std::string& origin) {
  if (kind == Kind::FirstNames && locale.empty())
    throw ArgumentError("first-name snapshots require a locale");
  SnapshotStats stats;
  std::set<std::string>& target = kind == Kind::PublicFigures
                                      ? public_figures_
                                      : first_names_[locale];
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t eol = content.find('\n', pos);
    std::string_view line = content.substr(
        pos, eol == std::string_view::npos ? content.size() - pos : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? content.size() + 1 : eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.front() == '#') continue;
    if (line.find('\t') != std::string_view::npos)
      throw ParseError("snapshot '" + origin + "': tab-separated annotations "
                       "are not part of the snapshot format", line_no);
    std::string norm = normalize_name(line);
    if (norm.empty()) continue;
    if (target.insert(std::move(norm)).second)
      ++stats.names_loaded;
    else
      ++stats.duplicates_dropped;
  }
  meta_.push_back({origin, "snapshot"});
  return stats;
}

SnapshotStats Gazetteer::import_snapshot(const std::filesystem::path& path,
                                         Kind kind, const std::string& locale) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot open snapshot file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return import_snapshot_text(buf.str(), kind, locale, path.string());
}

Gazetteer Gazetteer::bundled(const std::set<std::string>& locales) {
  Gazetteer g;
  g.import_snapshot_text(bundled_resource("gazetteer/public_figures.txt"),
                         Kind::PublicFigures, {},
                         "bundled:gazetteer/public_figures.txt");
  for (const std::string& loc : locales) {
    std::string name = "gazetteer/first_names_" + loc + ".txt";
    if (!has_bundled_resource(name))
      throw ConfigError("no bundled first-name snapshot for locale '" + loc +
                        "'");
    g.import_snapshot_text(bundled_resource(name), Kind::FirstNames, loc,
                           "bundled:" + name);
  }
  return g;
}

bool Gazetteer::lookup_public_figure(std::string_view name) const {
  if (name.empty()) return false;
  return public_figures_.count(normalize_name(name)) > 0;
}

bool Gazetteer::lookup_first_name(std::string_view name,
                                  std::string_view locale) const {
  if (name.empty()) return false;
  std::string norm = normalize_name(name);
  if (norm.empty()) return false;
  if (!locale.empty()) {
    auto it = first_names_.find(std::string(locale));
    return it != first_names_.end() && it->second.count(norm) > 0;
  }
  for (const auto& [loc, names] : first_names_)
    if (names.count(norm)) return true;
  return false;
}

std::size_t Gazetteer::first_name_count(const std::string& locale) const {
  auto it = first_names_.find(locale);
  return it == first_names_.end() ? 0 : it->second.size();
}

std::vector<std::string> Gazetteer::first_names(const std::string& locale) const {
  auto it = first_names_.find(locale);
  if (it == first_names_.end()) return {};
  return {it->second.begin(), it->second.end()};
}

std::vector<std::string> Gazetteer::public_figures() const {
  return {public_figures_.begin(), public_figures_.end()};
}

}  // namespace piiguard
