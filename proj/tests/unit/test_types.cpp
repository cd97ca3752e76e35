/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <string>

#include "piiguard/types.hpp"

using namespace piiguard;

TEST_CASE("entity type names round-trip") {
  for (EntityType t : kAllEntityTypes) {
    auto back = entity_type_from(to_string(t));
    REQUIRE(back.has_value());
    CHECK(*back == t);
  }
  CHECK(to_string(EntityType::EmailAddress) == "EmailAddress");
  CHECK(to_string(EntityType::NationalId) == "NationalId");
  CHECK_FALSE(entity_type_from("NotAType").has_value());
  CHECK_FALSE(entity_type_from("").has_value());
}

TEST_CASE("mask placeholders are SCREAMING_SNAKE in angle brackets") {
  CHECK(mask_placeholder(EntityType::EmailAddress) == "<EMAIL_ADDRESS>");
  CHECK(mask_placeholder(EntityType::Person) == "<PERSON>");
  CHECK(mask_placeholder(EntityType::PhoneNumber) == "<PHONE_NUMBER>");
  CHECK(mask_placeholder(EntityType::CreditCard) == "<CREDIT_CARD>");
  CHECK(mask_placeholder(EntityType::NationalId) == "<NATIONAL_ID>");
  CHECK(mask_placeholder(EntityType::BankAccount) == "<BANK_ACCOUNT>");
  CHECK(mask_placeholder(EntityType::CredentialToken) == "<CREDENTIAL_TOKEN>");
  CHECK(mask_placeholder(EntityType::Date) == "<DATE>");
  CHECK(mask_placeholder(EntityType::Location) == "<LOCATION>");
}

TEST_CASE("sensitivity comparisons invert the numeric order") {
  CHECK(at_least_as_sensitive(SensitivityLevel::Level1, SensitivityLevel::Level3));
  CHECK(at_least_as_sensitive(SensitivityLevel::Level1, SensitivityLevel::Level1));
  CHECK(at_least_as_sensitive(SensitivityLevel::Level2, SensitivityLevel::Level3));
  CHECK_FALSE(
      at_least_as_sensitive(SensitivityLevel::Level3, SensitivityLevel::Level2));
}

TEST_CASE("policy action and verdict names round-trip") {
  CHECK(to_string(PolicyAction::Pass) == "Pass");
  CHECK(to_string(PolicyAction::Mask) == "Mask");
  CHECK(to_string(PolicyAction::Block) == "Block");
  CHECK(policy_action_from("Mask") == PolicyAction::Mask);
  CHECK_FALSE(policy_action_from("mask?").has_value());

  CHECK(to_string(ScanVerdict::Pass) == "pass");
  CHECK(to_string(ScanVerdict::Masked) == "masked");
  CHECK(to_string(ScanVerdict::Blocked) == "blocked");
  CHECK(scan_verdict_from("blocked") == ScanVerdict::Blocked);
  CHECK_FALSE(scan_verdict_from("BLOCKED").has_value());
}

TEST_CASE("policy actions order by severity") {
  CHECK(static_cast<int>(PolicyAction::Pass) < static_cast<int>(PolicyAction::Mask));
  CHECK(static_cast<int>(PolicyAction::Mask) < static_cast<int>(PolicyAction::Block));
}

TEST_CASE("TextSpan overlap is half-open") {
  TextSpan a{0, 5};
  TextSpan b{5, 9};
  TextSpan c{4, 6};
  CHECK_FALSE(a.overlaps(b));  // touching is not overlapping
  CHECK(a.overlaps(c));
  CHECK(c.overlaps(b));
  CHECK(a.length() == 5);
  CHECK(a.contains(0));
  CHECK(a.contains(4));
  CHECK_FALSE(a.contains(5));
  CHECK(a == TextSpan{0, 5});
}

TEST_CASE("report equality ignores timing") {
  GuardReport a;
  a.doc_id = "d";
  a.verdict = ScanVerdict::Pass;
  a.timing.total_us = 1.0;
  GuardReport b = a;
  b.timing.total_us = 99.0;
  CHECK(a == b);
  b.doc_id = "other";
  CHECK_FALSE(a == b);
}
