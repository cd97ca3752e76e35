/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace piiguard {

// Name lookups are case-insensitive, whitespace-normalized, and ignore
// leading honorifics ("Dr. Alice Smith" == "alice smith").
std::string normalize_name(std::string_view name);

struct SnapshotStats {
  std::size_t names_loaded = 0;
  std::size_t duplicates_dropped = 0;
};

struct SnapshotMeta {
  std::string source;     // file path or bundled resource name
  std::string retrieved;  // timestamp or build tag; informational only
};

// Read-only lexicons: public-figure names and per-locale first names.
// Immutable once loading is done; safe to share across concurrent scans.
class Gazetteer {
 public:
  Gazetteer() = default;

  // Bundled snapshots for the given locales' first names + public figures.
  static Gazetteer bundled(const std::set<std::string>& locales);

  // Snapshot format: UTF-8, one name per line, '#' starts a comment line,
  // blank lines ignored. Tab characters are a format violation.
  enum class Kind { PublicFigures, FirstNames };
  SnapshotStats import_snapshot(const std::filesystem::path& path, Kind kind,
                                const std::string& locale = {});
  SnapshotStats import_snapshot_text(std::string_view content, Kind kind,
                                     const std::string& locale,
                                     const std::string& origin);

  bool lookup_public_figure(std::string_view name) const;
  // locale empty = any loaded locale.
  bool lookup_first_name(std::string_view name,
                         std::string_view locale = {}) const;

  std::size_t public_figure_count() const { return public_figures_.size(); }
  std::size_t first_name_count(const std::string& locale) const;
  const std::vector<SnapshotMeta>& snapshot_meta() const { return meta_; }

  // Sorted normalized first names for a locale; corpus generation samples
  // from this deterministically.
  std::vector<std::string> first_names(const std::string& locale) const;
  std::vector<std::string> public_figures() const;

 private:
  std::set<std::string> public_figures_;
  std::map<std::string, std::set<std::string>> first_names_;
  std::vector<SnapshotMeta> meta_;
};

}  // namespace piiguard
