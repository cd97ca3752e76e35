/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "piiguard/scorer.hpp"

#include <algorithm>
#include <string>

#include "piiguard/errors.hpp"

namespace piiguard {

bool is_direct_identifier(EntityType t) {
  switch (t) {
    case EntityType::EmailAddress:
    case EntityType::PhoneNumber:
    case EntityType::NationalId:
    case EntityType::CreditCard:
    case EntityType::BankAccount:
    case EntityType::CredentialToken:
      return true;
    default:
      return false;
  }
}

namespace {

bool scored_type(EntityType t) {
  return t == EntityType::Person || t == EntityType::Date ||
         t == EntityType::Location;
}

}  // namespace

std::vector<SensitivityAssessment> assess(
    std::span<const EntityMention> mentions, std::span<const Chunk> chunks,
    std::string_view text, const Gazetteer& gazetteer,
    const KeywordTable& financial_keywords) {
  const std::size_t n = mentions.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (mentions[i].span.end > text.size() ||
        mentions[i].span.start >= mentions[i].span.end)
      throw ContractError("mention span outside document bounds");
    for (std::size_t j = i + 1; j < n; ++j)
      if (mentions[i].span.overlaps(mentions[j].span))
        throw ContractError("assess requires disjoint mentions; mentions " +
                            std::to_string(i) + " and " + std::to_string(j) +
                            " overlap");
  }

  // Chunk ranges for window membership.
  std::vector<std::pair<std::size_t, std::size_t>> ranges(n);
  for (std::size_t i = 0; i < n; ++i)
    ranges[i] = chunk_range(chunks, mentions[i].span);
  // m2 is in m1's window iff their chunk ranges come within one chunk.
  auto in_window = [&](std::size_t a, std::size_t b) {
    std::size_t lo = ranges[a].first > 1 ? ranges[a].first - 1 : 0;
    std::size_t hi = ranges[a].second + 1;
    return ranges[b].second >= lo && ranges[b].first <= hi;
  };

  // A Person is exempt when it names a public figure and everything else in
  // the document is a Date or Location (Table-style "historical fact" docs).
  std::vector<bool> exempt(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (mentions[i].entity_type != EntityType::Person) continue;
    if (!gazetteer.lookup_public_figure(mentions[i].surface)) continue;
    bool only_date_location = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (mentions[j].entity_type != EntityType::Date &&
          mentions[j].entity_type != EntityType::Location) {
        only_date_location = false;
        break;
      }
    }
    exempt[i] = only_date_location;
  }

  // First direct identifier in document order, for rule 3's factor string.
  std::optional<EntityType> doc_direct;
  for (std::size_t i = 0; i < n && !doc_direct; ++i)
    if (is_direct_identifier(mentions[i].entity_type))
      doc_direct = mentions[i].entity_type;

  std::vector<SensitivityAssessment> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const EntityMention& m = mentions[i];
    SensitivityAssessment a;
    a.mention = i;

    if (is_direct_identifier(m.entity_type)) {
      a.level = SensitivityLevel::Level1;
      a.factors = {"direct_identifier"};
      out.push_back(std::move(a));
      continue;
    }
    if (exempt[i]) {
      a.level = SensitivityLevel::Level3;
      a.factors = {"public_figure"};
      out.push_back(std::move(a));
      continue;
    }
    if (m.entity_type == EntityType::Person && doc_direct) {
      a.level = SensitivityLevel::Level1;
      a.factors = {std::string("co_occurs_with:") +
                   std::string(to_string(*doc_direct))};
      out.push_back(std::move(a));
      continue;
    }
    if (scored_type(m.entity_type)) {
      std::optional<EntityType> non_exempt_neighbor;
      bool any_neighbor = false;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || !in_window(i, j)) continue;
        any_neighbor = true;
        if (!exempt[j] && !non_exempt_neighbor)
          non_exempt_neighbor = mentions[j].entity_type;
      }
      bool financial = false;
      if (m.entity_type == EntityType::Date) {
        TextSpan w =
            window_span(chunks, ranges[i].first, ranges[i].second, 1);
        financial =
            financial_keywords.any(text.substr(w.start, w.length()));
      }
      if (non_exempt_neighbor || financial) {
        a.level = SensitivityLevel::Level2;
        if (non_exempt_neighbor)
          a.factors.push_back(std::string("co_occurs_with:") +
                              std::string(to_string(*non_exempt_neighbor)));
        if (financial) a.factors.push_back("financial_context");
        out.push_back(std::move(a));
        continue;
      }
      if (any_neighbor) {
        // Window company consists solely of exempt public figures.
        a.level = SensitivityLevel::Level3;
        a.factors = {"public_figure_context"};
        out.push_back(std::move(a));
        continue;
      }
      if (m.entity_type == EntityType::Date ||
          m.entity_type == EntityType::Location) {
        a.level = SensitivityLevel::Level3;
        a.factors = {"standalone"};
        out.push_back(std::move(a));
        continue;
      }
    }
    a.level = SensitivityLevel::Level2;
    a.factors = {"default"};
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace piiguard
