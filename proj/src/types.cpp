/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "piiguard/types.hpp"

namespace piiguard {

std::string_view to_string(EntityType t) {
  switch (t) {
    case EntityType::Person: return "Person";
    case EntityType::Date: return "Date";
    case EntityType::Location: return "Location";
    case EntityType::EmailAddress: return "EmailAddress";
    case EntityType::PhoneNumber: return "PhoneNumber";
    case EntityType::NationalId: return "NationalId";
    case EntityType::CreditCard: return "CreditCard";
    case EntityType::BankAccount: return "BankAccount";
    case EntityType::CredentialToken: return "CredentialToken";
  }
  return "Person";
}

std::optional<EntityType> entity_type_from(std::string_view name) {
  for (EntityType t : kAllEntityTypes)
    if (name == to_string(t)) return t;
  return std::nullopt;
}

std::string_view mask_placeholder(EntityType t) {
  switch (t) {
    case EntityType::Person: return "<PERSON>";
    case EntityType::Date: return "<DATE>";
    case EntityType::Location: return "<LOCATION>";
    case EntityType::EmailAddress: return "<EMAIL_ADDRESS>";
    case EntityType::PhoneNumber: return "<PHONE_NUMBER>";
    case EntityType::NationalId: return "<NATIONAL_ID>";
    case EntityType::CreditCard: return "<CREDIT_CARD>";
    case EntityType::BankAccount: return "<BANK_ACCOUNT>";
    case EntityType::CredentialToken: return "<CREDENTIAL_TOKEN>";
  }
  return "<PERSON>";
}

std::string_view to_string(PolicyAction a) {
  switch (a) {
    case PolicyAction::Pass: return "Pass";
    case PolicyAction::Mask: return "Mask";
    case PolicyAction::Block: return "Block";
  }
  return "Pass";
}

std::optional<PolicyAction> policy_action_from(std::string_view name) {
  if (name == "Pass") return PolicyAction::Pass;
  if (name == "Mask") return PolicyAction::Mask;
  if (name == "Block") return PolicyAction::Block;
  return std::nullopt;
}

std::string_view to_string(ScanVerdict v) {
  switch (v) {
    case ScanVerdict::Pass: return "pass";
    case ScanVerdict::Masked: return "masked";
    case ScanVerdict::Blocked: return "blocked";
  }
  return "pass";
}

std::optional<ScanVerdict> scan_verdict_from(std::string_view name) {
  if (name == "pass") return ScanVerdict::Pass;
  if (name == "masked") return ScanVerdict::Masked;
  if (name == "blocked") return ScanVerdict::Blocked;
  return std::nullopt;
}

}  // namespace piiguard
