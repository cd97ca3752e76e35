/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "piiguard/types.hpp"

namespace piiguard {

// One ordered rule. `match` empty means "any type". `min_level` is the
// least-sensitive level the rule still applies to: min_level Level2 matches
// Level 1 and Level 2 assessments. Rules with a `combination` set are
// document-level: they fire when every type in the set has at least one
// mention, and are skipped during per-assessment evaluation.
struct PolicyRule {
  std::string rule_id;
  std::set<EntityType> match;  // empty = any
  SensitivityLevel min_level = SensitivityLevel::Level3;
  std::set<EntityType> combination;  // empty = not a combination rule
  PolicyAction action = PolicyAction::Pass;
};

struct PolicyTemplate {
  std::string jurisdiction;
  std::vector<PolicyRule> rules;  // evaluated in order, first match wins
  bool pseudonyms_protected = false;
  PolicyAction default_action = PolicyAction::Pass;
};

std::vector<std::string> builtin_template_ids();

// Accepts a built-in id (gdpr-default, ccpa-default, pipeda-default) or a
// template file path. Validation problems (duplicate rule_id, unknown
// entity type or action, bad level) are all collected into one ConfigError.
PolicyTemplate load_template(const std::string& source);

PolicyTemplate parse_template_json(std::string_view json_text,
                                   const std::string& origin);
std::string template_to_json(const PolicyTemplate& t);

// One decision per assessment (first matching non-combination rule, else
// the default action), then one decision per fired combination rule
// referencing every mention of the member types.
std::vector<PolicyDecision> decide(
    std::span<const SensitivityAssessment> assessments,
    std::span<const EntityMention> mentions, const PolicyTemplate& t);

}  // namespace piiguard
