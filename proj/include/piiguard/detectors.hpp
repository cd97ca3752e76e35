/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "piiguard/chunker.hpp"
#include "piiguard/gazetteer.hpp"
#include "piiguard/patterns.hpp"
#include "piiguard/types.hpp"

namespace piiguard {

struct DetectorConfig {
  std::set<std::string> enabled_locales = {"en"};
  std::set<EntityType> enabled_types = {kAllEntityTypes.begin(),
                                        kAllEntityTypes.end()};
  const Gazetteer* first_name_lexicon = nullptr;
  double credential_entropy_threshold = 4.0;  // bits per character
  // Whether handle-like pseudonyms ("@name") count as Person mentions;
  // wired from the active policy template's pseudonyms_protected flag.
  bool detect_pseudonyms = false;
};

// Entropy + well-known-prefix credential recognizer. Standalone because it
// is pure code: key formats are products, not locales.
std::vector<EntityMention> detect_credential(std::string_view text,
                                             double entropy_threshold);

// Immutable after construction; detect calls are side-effect-free and safe
// to run concurrently across documents.
class Detectors {
 public:
  // Throws ConfigError for empty locales, non-positive entropy threshold,
  // or a locale with no pattern definitions.
  Detectors(DetectorConfig config, std::vector<LocalePatterns> patterns);

  // Loads bundled pattern files ("common" + each enabled locale).
  static Detectors bundled(DetectorConfig config);

  // All candidate mentions, possibly overlapping; resolution happens later.
  // Candidates of checksum-bearing types that fail validation are never
  // emitted.
  std::vector<EntityMention> detect(std::string_view text,
                                    std::span<const Chunk> chunks) const;

  // Individual recognizer passes, also used by detect().
  std::vector<EntityMention> detect_person(std::string_view text) const;
  std::vector<EntityMention> detect_location(std::string_view text) const;
  std::vector<EntityMention> detect_credential(std::string_view text) const;
  // Pattern-file-driven recognizers for one entity type.
  std::vector<EntityMention> detect_patterns(std::string_view text,
                                             EntityType type) const;

  const DetectorConfig& config() const { return config_; }

 private:
  void run_rule(const PatternRule& rule, const std::string& locale,
                std::string_view text, std::vector<EntityMention>& out) const;

  DetectorConfig config_;
  std::vector<LocalePatterns> patterns_;            // common first, then sorted
  std::vector<std::string> honorifics_;             // union over locales
  std::vector<std::pair<std::string, std::string>> locations_;  // (locale, name)
};

}  // namespace piiguard
