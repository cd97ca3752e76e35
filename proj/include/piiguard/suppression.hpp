/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <mutex>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "piiguard/types.hpp"

namespace piiguard {

// Fingerprint of a mention in context: hash of (normalized surface, entity
// type, 16 normalized context characters on each side). Ties reviewer
// feedback to the specific usage without memorizing whole files.
std::string mention_fingerprint(std::string_view text,
                                const EntityMention& mention);

// Same hash from pre-extracted parts; used by tests and external tooling.
// before/after are the raw byte windows adjacent to the surface.
std::string fingerprint_from_parts(std::string_view surface,
                                   EntityType entity_type,
                                   std::string_view before,
                                   std::string_view after);

struct SuppressionEntry {
  std::string fingerprint;
  std::string verdict = "false_positive";
  std::string reviewer;
  std::string timestamp;  // ISO-8601; informational
};

// Append-only JSONL store of reviewer suppressions. Duplicate fingerprints
// collapse idempotently. Concurrent readers are fine; appends serialize.
class SuppressionStore {
 public:
  SuppressionStore() = default;  // in-memory only
  explicit SuppressionStore(std::string path);  // loads if file exists

  // Persists (when backed by a file) and registers the entry. Returns true
  // if the fingerprint was new, false if it was already present.
  bool record_feedback(const SuppressionEntry& entry);

  bool contains(std::string_view fingerprint) const;
  std::size_t size() const;
  // Immutable snapshot of known fingerprints, for lock-free triage reads.
  std::set<std::string> snapshot() const;
  std::vector<SuppressionEntry> entries() const;
  const std::string& path() const { return path_; }

 private:
  void load();

  std::string path_;  // empty = in-memory
  mutable std::mutex mutex_;
  std::vector<SuppressionEntry> entries_;
  std::set<std::string> fingerprints_;
};

}  // namespace piiguard
