/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <string>

#include "piiguard/errors.hpp"
#include "piiguard/policy.hpp"

using namespace piiguard;

namespace {

EntityMention mention(EntityType t) {
  EntityMention m;
  m.span = {0, 1};
  m.entity_type = t;
  m.surface = "x";
  return m;
}

SensitivityAssessment level(std::size_t mention, SensitivityLevel l) {
  SensitivityAssessment a;
  a.mention = mention;
  a.level = l;
  return a;
}

}  // namespace

TEST_CASE("built-in template inventory") {
  auto ids = builtin_template_ids();
  REQUIRE(ids.size() == 3);
  CHECK(std::count(ids.begin(), ids.end(), "gdpr-default") == 1);
  CHECK(std::count(ids.begin(), ids.end(), "ccpa-default") == 1);
  CHECK(std::count(ids.begin(), ids.end(), "pipeda-default") == 1);
  for (const auto& id : ids) {
    PolicyTemplate t = load_template(id);
    CHECK_FALSE(t.jurisdiction.empty());
    CHECK_FALSE(t.rules.empty());
    CHECK(t.default_action == PolicyAction::Pass);
    // Every built-in blocks credentials ahead of anything else.
    CHECK(t.rules[0].rule_id == "credential-block");
    CHECK(t.rules[0].action == PolicyAction::Block);
  }
  CHECK(load_template("gdpr-default").jurisdiction == "gdpr");
  CHECK(load_template("gdpr-default").pseudonyms_protected);
  CHECK_FALSE(load_template("ccpa-default").pseudonyms_protected);
  CHECK(load_template("pipeda-default").pseudonyms_protected);
}

TEST_CASE("unknown template id or missing file is a ConfigError") {
  CHECK_THROWS_AS(load_template("hipaa-default"), ConfigError);
  CHECK_THROWS_AS(load_template("/nonexistent/policy.json"), ConfigError);
}

TEST_CASE("load_template reads a template file from disk") {
  auto path = std::filesystem::temp_directory_path() / "piiguard_tpl.json";
  {
    std::ofstream out(path);
    out << R"({"jurisdiction":"custom","default_action":"Block","rules":[]})";
  }
  PolicyTemplate t = load_template(path.string());
  CHECK(t.jurisdiction == "custom");
  CHECK(t.default_action == PolicyAction::Block);
  CHECK(t.rules.empty());
  std::filesystem::remove(path);
}

TEST_CASE("template parse problems are collected into one error") {
  const char* bad = R"({
    "rules": [
      {"rule_id": "a", "match": ["NotAType"], "action": "Mask"},
      {"rule_id": "a", "action": "Destroy"},
      {"rule_id": "b", "min_level": 7, "action": "Pass"}
    ]
  })";
  try {
    parse_template_json(bad, "inline");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    std::string what = e.what();
    CHECK(what.find("missing 'jurisdiction'") != std::string::npos);
    CHECK(what.find("NotAType") != std::string::npos);
    CHECK(what.find("duplicate rule_id 'a'") != std::string::npos);
    CHECK(what.find("Destroy") != std::string::npos);
    CHECK(what.find("out of range") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_template_json("[1,2]", "inline"), ParseError);
  CHECK_THROWS_AS(parse_template_json("{bad", "inline"), ParseError);
}

TEST_CASE("template JSON round-trips") {
  PolicyTemplate t = load_template("gdpr-default");
  PolicyTemplate back = parse_template_json(template_to_json(t), "roundtrip");
  CHECK(back.jurisdiction == t.jurisdiction);
  CHECK(back.pseudonyms_protected == t.pseudonyms_protected);
  CHECK(back.default_action == t.default_action);
  REQUIRE(back.rules.size() == t.rules.size());
  for (std::size_t i = 0; i < t.rules.size(); ++i) {
    CHECK(back.rules[i].rule_id == t.rules[i].rule_id);
    CHECK(back.rules[i].match == t.rules[i].match);
    CHECK(back.rules[i].combination == t.rules[i].combination);
    CHECK(back.rules[i].min_level == t.rules[i].min_level);
    CHECK(back.rules[i].action == t.rules[i].action);
  }
}

TEST_CASE("first matching rule decides; order matters") {
  PolicyTemplate gdpr = load_template("gdpr-default");
  // A Level-1 credential hits credential-block before level1-mask.
  std::vector<EntityMention> ms = {mention(EntityType::CredentialToken)};
  std::vector<SensitivityAssessment> as = {
      level(0, SensitivityLevel::Level1)};
  auto ds = decide(as, ms, gdpr);
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].action == PolicyAction::Block);
  CHECK(ds[0].rule_id == "credential-block");
  CHECK(ds[0].mention == 0);
  CHECK(ds[0].jurisdiction == "gdpr");
  CHECK(ds[0].rationale.find("credential-block") != std::string::npos);
}

TEST_CASE("min_level means 'at least this sensitive'") {
  PolicyTemplate gdpr = load_template("gdpr-default");
  std::vector<EntityMention> ms = {mention(EntityType::Date)};
  auto at = [&](SensitivityLevel l) {
    std::vector<SensitivityAssessment> as = {level(0, l)};
    return decide(as, ms, gdpr)[0];
  };
  CHECK(at(SensitivityLevel::Level1).rule_id == "level1-mask");
  CHECK(at(SensitivityLevel::Level2).rule_id == "level2-mask");
  auto l3 = at(SensitivityLevel::Level3);
  CHECK(l3.action == PolicyAction::Pass);
  CHECK(l3.rule_id == "default");
  CHECK(l3.rationale.find("matched no rule") != std::string::npos);
}

TEST_CASE("ccpa leaves Level-2 contextual types alone") {
  PolicyTemplate ccpa = load_template("ccpa-default");
  std::vector<EntityMention> ms = {mention(EntityType::Person),
                                   mention(EntityType::EmailAddress)};
  std::vector<SensitivityAssessment> as = {
      level(0, SensitivityLevel::Level2), level(1, SensitivityLevel::Level2)};
  auto ds = decide(as, ms, ccpa);
  REQUIRE(ds.size() == 2);
  CHECK(ds[0].action == PolicyAction::Pass);  // no level2-mask under ccpa
  CHECK(ds[1].action == PolicyAction::Mask);  // direct-pii-mask
  CHECK(ds[1].rule_id == "direct-pii-mask");
}

TEST_CASE("combination rules fire document-wide") {
  PolicyTemplate gdpr = load_template("gdpr-default");
  std::vector<EntityMention> ms = {mention(EntityType::Person),
                                   mention(EntityType::Date),
                                   mention(EntityType::NationalId)};
  ms[1].span = {2, 3};
  ms[2].span = {4, 5};
  std::vector<SensitivityAssessment> as = {
      level(0, SensitivityLevel::Level3), level(1, SensitivityLevel::Level3),
      level(2, SensitivityLevel::Level1)};
  auto ds = decide(as, ms, gdpr);
  REQUIRE(ds.size() == 4);  // three per-assessment + one combination
  const PolicyDecision& combo = ds[3];
  CHECK_FALSE(combo.mention.has_value());
  CHECK(combo.rule_id == "person-with-national-id");
  CHECK(combo.action == PolicyAction::Mask);
  REQUIRE(combo.combination.size() == 2);
  CHECK(combo.combination[0] == 0);
  CHECK(combo.combination[1] == 2);
  CHECK(combo.rationale.find("co-occur") != std::string::npos);
}

TEST_CASE("combination rules need every member type") {
  PolicyTemplate gdpr = load_template("gdpr-default");
  std::vector<EntityMention> ms = {mention(EntityType::Person)};
  std::vector<SensitivityAssessment> as = {
      level(0, SensitivityLevel::Level3)};
  auto ds = decide(as, ms, gdpr);
  REQUIRE(ds.size() == 1);  // no combination fired
  CHECK(ds[0].rule_id == "default");
}

TEST_CASE("dangling assessment index raises ContractError") {
  PolicyTemplate gdpr = load_template("gdpr-default");
  std::vector<EntityMention> ms = {mention(EntityType::Person)};
  std::vector<SensitivityAssessment> as = {
      level(3, SensitivityLevel::Level1)};
  CHECK_THROWS_AS(decide(as, ms, gdpr), ContractError);
}

TEST_CASE("built-in actions never weaken as sensitivity rises") {
  for (const auto& id : builtin_template_ids()) {
    PolicyTemplate t = load_template(id);
    for (EntityType type : kAllEntityTypes) {
      std::vector<EntityMention> ms = {mention(type)};
      int prev = -1;
      // Walk L3 -> L1; action severity must be non-decreasing.
      for (int lv = 3; lv >= 1; --lv) {
        std::vector<SensitivityAssessment> as = {
            level(0, static_cast<SensitivityLevel>(lv))};
        auto ds = decide(as, ms, t);
        int sev = static_cast<int>(ds[0].action);
        CHECK(sev >= prev);
        prev = sev;
      }
    }
  }
}
