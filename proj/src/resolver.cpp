/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "piiguard/resolver.hpp"

#include <algorithm>

#include "piiguard/errors.hpp"
#include "piiguard/validators.hpp"

namespace piiguard {

namespace {

std::string digits_of(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c >= '0' && c <= '9') out.push_back(c);
  return out;
}

bool recompute_checksum(const EntityMention& m) {
  std::string digits = digits_of(m.surface);
  switch (m.entity_type) {
    case EntityType::CreditCard:
      return !digits.empty() && luhn_check(digits);
    case EntityType::NationalId:
      if (digits.size() == 12) return verhoeff_check(digits);
      if (digits.size() == 9) return ssn_structure_check(digits);
      if (digits.size() == 11) return steuer_id_check(digits);
      return false;
    default:
      return false;
  }
}

// Conflict precedence, high priority first.
int type_priority(EntityType t) {
  switch (t) {
    case EntityType::NationalId: return 0;
    case EntityType::CreditCard: return 1;
    case EntityType::BankAccount: return 2;
    case EntityType::PhoneNumber: return 3;
    case EntityType::EmailAddress: return 4;
    case EntityType::Date: return 5;
    case EntityType::Location: return 6;
    case EntityType::Person: return 7;
    case EntityType::CredentialToken: return 8;
  }
  return 8;
}

struct Ranked {
  const EntityMention* m;
  std::size_t support;
  bool checksum;
};

// Strict total order over distinct mentions; ties only for equal values.
bool precedes(const Ranked& a, const Ranked& b) {
  if (a.support != b.support) return a.support > b.support;
  if (a.checksum != b.checksum) return a.checksum;
  if (a.m->span.length() != b.m->span.length())
    return a.m->span.length() > b.m->span.length();
  if (a.m->span.start != b.m->span.start)
    return a.m->span.start < b.m->span.start;
  int pa = type_priority(a.m->entity_type);
  int pb = type_priority(b.m->entity_type);
  if (pa != pb) return pa < pb;
  if (a.m->span.end != b.m->span.end) return a.m->span.end < b.m->span.end;
  if (a.m->detector_id != b.m->detector_id)
    return a.m->detector_id < b.m->detector_id;
  if (a.m->locale != b.m->locale) return a.m->locale < b.m->locale;
  return a.m->confidence > b.m->confidence;
}

}  // namespace

std::vector<ContextEvidence> gather_evidence(
    std::span<const EntityMention> candidates, std::span<const Chunk> chunks,
    std::string_view text, const KeywordTable& keywords) {
  std::vector<ContextEvidence> out;
  out.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const EntityMention& m = candidates[i];
    if (m.span.start >= m.span.end || m.span.end > text.size())
      throw ContractError("candidate span [" + std::to_string(m.span.start) +
                          ", " + std::to_string(m.span.end) +
                          ") is outside the document bounds");
    ContextEvidence ev;
    ev.mention = i;
    auto [lo, hi] = chunk_range(chunks, m.span);
    TextSpan window = window_span(chunks, lo, hi, 1);
    ev.keyword_hits =
        keywords.hits(text.substr(window.start, window.length()));
    ev.checksum_valid = recompute_checksum(m);
    out.push_back(std::move(ev));
  }
  return out;
}

std::vector<EntityMention> resolve(std::vector<EntityMention> candidates,
                                   std::span<const Chunk> chunks,
                                   std::string_view text,
                                   const KeywordTable& keywords) {
  if (candidates.empty()) return {};
  // Drop exact duplicates so the precedence order is strict.
  std::sort(candidates.begin(), candidates.end(),
            [](const EntityMention& a, const EntityMention& b) {
              return std::tie(a.span.start, a.span.end, a.entity_type,
                              a.locale, a.detector_id, a.confidence) <
                     std::tie(b.span.start, b.span.end, b.entity_type,
                              b.locale, b.detector_id, b.confidence);
            });
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  std::vector<ContextEvidence> evidence =
      gather_evidence(candidates, chunks, text, keywords);

  std::vector<Ranked> ranked;
  ranked.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    std::size_t support = 0;
    for (const auto& [kw, type] : evidence[i].keyword_hits)
      if (type == candidates[i].entity_type) ++support;
    ranked.push_back({&candidates[i], support, evidence[i].checksum_valid});
  }
  std::sort(ranked.begin(), ranked.end(), precedes);

  // Greedy selection: a candidate survives unless it overlaps an already
  // accepted, higher-precedence survivor.
  std::vector<EntityMention> kept;
  for (const Ranked& r : ranked) {
    bool blocked = false;
    for (const EntityMention& k : kept) {
      if (k.span.overlaps(r.m->span)) {
        blocked = true;
        break;
      }
    }
    if (!blocked) kept.push_back(*r.m);
  }
  std::sort(kept.begin(), kept.end(),
            [](const EntityMention& a, const EntityMention& b) {
              return a.span.start < b.span.start;
            });
  return kept;
}

}  // namespace piiguard
