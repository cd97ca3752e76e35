/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "piiguard/chunker.hpp"
#include "piiguard/keywords.hpp"
#include "piiguard/types.hpp"

namespace piiguard {

// Context gathered for one candidate: keyword occurrences in its chunk
// window (the chunk plus one neighbor on each side) and checksum validity
// recomputed from the surface for checksum-bearing types.
struct ContextEvidence {
  std::size_t mention = 0;  // index into the candidate list
  std::vector<std::pair<std::string, EntityType>> keyword_hits;
  bool checksum_valid = false;
};

std::vector<ContextEvidence> gather_evidence(
    std::span<const EntityMention> candidates, std::span<const Chunk> chunks,
    std::string_view text, const KeywordTable& keywords);

// Collapses overlapping candidates into a disjoint set. Survivor choice is
// by precedence: more keyword support, then checksum-validated, then longer
// span, then earlier start, then fixed type priority, with lexicographic
// field tie-breaks making the order total. Pure and order-insensitive.
// Candidates out of document bounds raise ContractError.
std::vector<EntityMention> resolve(std::vector<EntityMention> candidates,
                                   std::span<const Chunk> chunks,
                                   std::string_view text,
                                   const KeywordTable& keywords);

}  // namespace piiguard
