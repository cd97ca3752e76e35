/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <string_view>
#include <vector>

#include "piiguard/types.hpp"

namespace piiguard {

// Applies decisions to produce the final report:
//   - any Block decision -> verdict blocked, masked_text absent;
//   - otherwise every mention referenced by a Mask decision is replaced by
//     its type placeholder, all other bytes preserved byte-for-byte;
//   - verdict masked iff at least one Mask decision, else pass.
// doc_id and timing are left for the caller to fill.
// Overlapping mentions or out-of-range references raise ContractError.
GuardReport apply(std::string_view text, std::vector<EntityMention> mentions,
                  std::vector<SensitivityAssessment> assessments,
                  std::vector<PolicyDecision> decisions);

}  // namespace piiguard
