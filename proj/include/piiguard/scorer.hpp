/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "piiguard/chunker.hpp"
#include "piiguard/gazetteer.hpp"
#include "piiguard/keywords.hpp"
#include "piiguard/types.hpp"

namespace piiguard {

bool is_direct_identifier(EntityType t);

// Assigns one sensitivity level per resolved mention via a first-match rule
// ladder over co-occurrence structure:
//   1. direct identifiers (email, phone, ids, cards, accounts, credentials)
//      -> Level 1                                   [direct_identifier]
//   2. public-figure Person whose document co-mentions are only Date or
//      Location -> Level 3                          [public_figure]
//   3. Person sharing a document with any direct identifier -> Level 1
//                                                   [co_occurs_with:<T>]
//   4. Person/Date/Location with a non-exempt mention in its chunk window,
//      or Date in a financial-keyword context -> Level 2
//                                  [co_occurs_with:<T> / financial_context]
//   5. Date/Location whose window co-mentions are all public-figure-exempt
//      -> Level 3                                   [public_figure_context]
//   6. standalone Date or Location -> Level 3       [standalone]
//   7. anything else -> Level 2                     [default]
// Adding a mention to a document never lowers another mention's level.
// Input mentions must be pairwise disjoint (ContractError otherwise).
std::vector<SensitivityAssessment> assess(
    std::span<const EntityMention> mentions, std::span<const Chunk> chunks,
    std::string_view text, const Gazetteer& gazetteer,
    const KeywordTable& financial_keywords);

}  // namespace piiguard
