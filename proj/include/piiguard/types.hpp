/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace piiguard {

enum class EntityType {
  Person,
  Date,
  Location,
  EmailAddress,
  PhoneNumber,
  NationalId,
  CreditCard,
  BankAccount,
  CredentialToken,
};

inline constexpr std::array<EntityType, 9> kAllEntityTypes = {
    EntityType::Person,       EntityType::Date,        EntityType::Location,
    EntityType::EmailAddress, EntityType::PhoneNumber, EntityType::NationalId,
    EntityType::CreditCard,   EntityType::BankAccount,
    EntityType::CredentialToken,
};

std::string_view to_string(EntityType t);
std::optional<EntityType> entity_type_from(std::string_view name);

// Redaction placeholder, e.g. EmailAddress -> "<EMAIL_ADDRESS>".
std::string_view mask_placeholder(EntityType t);

// Level 1 is the most sensitive. Comparisons must go through
// at_least_as_sensitive(); the numeric order is inverse to severity.
enum class SensitivityLevel : int { Level1 = 1, Level2 = 2, Level3 = 3 };

inline bool at_least_as_sensitive(SensitivityLevel a, SensitivityLevel b) {
  return static_cast<int>(a) <= static_cast<int>(b);
}

enum class PolicyAction { Pass = 0, Mask = 1, Block = 2 };  // ordered by severity

std::string_view to_string(PolicyAction a);
std::optional<PolicyAction> policy_action_from(std::string_view name);

enum class ScanVerdict { Pass, Masked, Blocked };

std::string_view to_string(ScanVerdict v);
std::optional<ScanVerdict> scan_verdict_from(std::string_view name);

// Half-open byte range [start, end) into the source text. Offsets always sit
// on UTF-8 character boundaries.
struct TextSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start; }
  bool overlaps(const TextSpan& o) const {
    return start < o.end && o.start < end;
  }
  bool contains(std::size_t pos) const { return pos >= start && pos < end; }
  friend bool operator==(const TextSpan&, const TextSpan&) = default;
};

struct EntityMention {
  TextSpan span;
  EntityType entity_type = EntityType::Person;
  std::string surface;
  std::string locale = "unspecified";  // "unspecified" for locale-neutral rules
  std::string detector_id;
  double confidence = 1.0;

  friend bool operator==(const EntityMention&, const EntityMention&) = default;
};

// `mention` indexes into the mention list of the owning report.
struct SensitivityAssessment {
  std::size_t mention = 0;
  SensitivityLevel level = SensitivityLevel::Level3;
  std::vector<std::string> factors;

  friend bool operator==(const SensitivityAssessment&,
                         const SensitivityAssessment&) = default;
};

// Exactly one of `mention` / `combination` is populated: per-mention
// decisions reference one index, combination-rule decisions reference all
// member mentions.
struct PolicyDecision {
  std::optional<std::size_t> mention;
  std::vector<std::size_t> combination;
  PolicyAction action = PolicyAction::Pass;
  std::string rule_id;
  std::string jurisdiction;
  std::string rationale;

  friend bool operator==(const PolicyDecision&, const PolicyDecision&) = default;
};

// Wall-clock stage costs in microseconds. Never part of report equality.
struct StageTiming {
  double chunk_us = 0;
  double detect_us = 0;
  double resolve_us = 0;
  double assess_us = 0;
  double decide_us = 0;
  double redact_us = 0;
  double total_us = 0;
};

struct GuardReport {
  std::string doc_id;
  std::vector<EntityMention> mentions;
  std::vector<SensitivityAssessment> assessments;
  std::vector<PolicyDecision> decisions;
  std::optional<std::string> masked_text;  // absent when verdict == Blocked
  ScanVerdict verdict = ScanVerdict::Pass;
  StageTiming timing;

  // Timing is diagnostic; two scans of the same document compare equal.
  friend bool operator==(const GuardReport& a, const GuardReport& b) {
    return a.doc_id == b.doc_id && a.mentions == b.mentions &&
           a.assessments == b.assessments && a.decisions == b.decisions &&
           a.masked_text == b.masked_text && a.verdict == b.verdict;
  }
};

}  // namespace piiguard
