/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "piiguard/evalbench.hpp"
#include "piiguard/types.hpp"

namespace piiguard {

struct CorpusSlice {
  EntityType entity_type = EntityType::EmailAddress;
  std::string locale = "en";
  std::size_t count = 0;
};

// `negative_fraction` f < 1 adds round(f/(1-f) * positives) near-miss
// negative records so negatives make up fraction f of the corpus;
// f >= 1 replaces every requested record with a negative (zero gold).
struct CorpusSpec {
  std::vector<CorpusSlice> positives;
  double negative_fraction = 0.3;
};

// The mix used by the bundled evaluation: 469 positives across six locales
// plus 30% negatives (670 records).
CorpusSpec default_corpus_spec();

CorpusSpec corpus_spec_from_json(std::string_view json_text,
                                 const std::string& origin);
std::string corpus_spec_to_json(const CorpusSpec& spec);

// Deterministic for a fixed (seed, spec): embedded identifiers are
// checksum-valid by construction, negatives are near-miss confusables
// (checksum-invalid numbers, version strings, fictional placeholders).
// Surfaces are drawn from the same lexicons the bundled detectors use.
std::vector<AnnotatedRecord> generate_corpus(std::uint64_t seed,
                                             const CorpusSpec& spec);

}  // namespace piiguard
