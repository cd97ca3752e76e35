/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "piiguard/redactor.hpp"

#include <algorithm>
#include <set>

#include "piiguard/errors.hpp"

namespace piiguard {

GuardReport apply(std::string_view text, std::vector<EntityMention> mentions,
                  std::vector<SensitivityAssessment> assessments,
                  std::vector<PolicyDecision> decisions) {
  for (std::size_t i = 0; i < mentions.size(); ++i) {
    if (mentions[i].span.end > text.size() ||
        mentions[i].span.start >= mentions[i].span.end)
      throw ContractError("mention " + std::to_string(i) +
                          " span outside document bounds");
    for (std::size_t j = i + 1; j < mentions.size(); ++j)
      if (mentions[i].span.overlaps(mentions[j].span))
        throw ContractError("mentions " + std::to_string(i) + " and " +
                            std::to_string(j) + " overlap");
  }

  bool any_block = false;
  bool any_mask = false;
  std::set<std::size_t> mask_targets;
  for (const auto& d : decisions) {
    std::vector<std::size_t> refs;
    if (d.mention) {
      if (!d.combination.empty())
        throw ContractError("decision references both a mention and a "
                            "combination");
      refs.push_back(*d.mention);
    } else {
      if (d.combination.empty())
        throw ContractError("decision references no mentions");
      refs = d.combination;
    }
    for (std::size_t r : refs)
      if (r >= mentions.size())
        throw ContractError("decision references mention " +
                            std::to_string(r) + " of " +
                            std::to_string(mentions.size()));
    if (d.action == PolicyAction::Block) any_block = true;
    if (d.action == PolicyAction::Mask) {
      any_mask = true;
      mask_targets.insert(refs.begin(), refs.end());
    }
  }

  GuardReport report;
  report.mentions = std::move(mentions);
  report.assessments = std::move(assessments);
  report.decisions = std::move(decisions);

  if (any_block) {
    report.verdict = ScanVerdict::Blocked;
    report.masked_text.reset();
    return report;
  }

  std::string masked(text);
  // Splice right to left so earlier spans stay valid.
  std::vector<std::size_t> targets(mask_targets.begin(), mask_targets.end());
  std::sort(targets.begin(), targets.end(),
            [&report](std::size_t a, std::size_t b) {
              return report.mentions[a].span.start >
                     report.mentions[b].span.start;
            });
  for (std::size_t idx : targets) {
    const EntityMention& m = report.mentions[idx];
    masked.replace(m.span.start, m.span.length(),
                   mask_placeholder(m.entity_type));
  }
  report.masked_text = std::move(masked);
  report.verdict = any_mask ? ScanVerdict::Masked : ScanVerdict::Pass;
  return report;
}

}  // namespace piiguard
