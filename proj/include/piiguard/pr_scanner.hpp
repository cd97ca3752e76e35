/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "piiguard/engine.hpp"
#include "piiguard/suppression.hpp"
#include "piiguard/types.hpp"

namespace piiguard {

struct PrFile {
  std::string path;
  std::string content;
};

// Text files from one pull request, path-sorted, paths unique.
struct PrDocument {
  std::string pr_id;
  std::vector<PrFile> files;
  std::vector<std::string> source_meta;  // origin + skipped-file notes
};

struct FlagReason {
  std::string file;
  std::size_t mention = 0;  // index into that file's report mentions
  SensitivityLevel level = SensitivityLevel::Level3;
  std::string rule_id;
  std::string fingerprint;  // feed back via the suppression store to mute
};

struct TriageReport {
  std::string pr_id;
  std::vector<std::pair<std::string, GuardReport>> file_reports;
  bool flagged = false;
  std::vector<FlagReason> flag_reasons;
  std::vector<std::string> suppressed;  // fingerprints that downgraded hits
};

// Reads a PR from a directory tree (each regular file = one PR file, paths
// relative to the root) or from a JSON export file (see docs/FORMATS.md).
// Binary files — NUL in the first 8 KiB or invalid UTF-8 — are skipped and
// noted in source_meta. No text files at all is a valid, empty PrDocument.
PrDocument ingest(const std::string& source);

PrDocument pr_document_from_json(std::string_view json_text,
                                 const std::string& origin);
std::string pr_document_to_json(const PrDocument& pr);

// Scans every file, then downgrades any Mask/Block decision to Pass when all
// mentions it references carry suppressed fingerprints. flagged ⟺ at least
// one non-suppressed decision with action ∈ {Mask, Block} remains.
TriageReport triage(const PrDocument& pr, const Engine& engine,
                    const SuppressionStore& suppressions);

std::string triage_report_to_json(const TriageReport& report);

}  // namespace piiguard
