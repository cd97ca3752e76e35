/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <string>

#include "piiguard/chunker.hpp"
#include "piiguard/errors.hpp"
#include "piiguard/gazetteer.hpp"
#include "piiguard/keywords.hpp"
#include "piiguard/scorer.hpp"

using namespace piiguard;

namespace {

struct Scene {
  std::string text;
  std::vector<Chunk> chunks;
  std::vector<EntityMention> mentions;
  Gazetteer gaz;
  KeywordTable financial;

  explicit Scene(std::string t) : text(std::move(t)), chunks(segment(text)) {
    gaz.import_snapshot_text("Barack Obama\nWinston Churchill\n",
                             Gazetteer::Kind::PublicFigures, {}, "test");
    financial = KeywordTable::parse_tsv(
        "balance\tDate\naccount\tDate\ninvoice\tDate\n", "test");
  }

  void add(std::string_view surface, EntityType t) {
    std::size_t at = text.find(surface);
    REQUIRE(at != std::string::npos);
    EntityMention m;
    m.span = {at, at + surface.size()};
    m.entity_type = t;
    m.surface = std::string(surface);
    mentions.push_back(m);
  }

  std::vector<SensitivityAssessment> run() {
    return assess(mentions, chunks, text, gaz, financial);
  }
};

}  // namespace

TEST_CASE("is_direct_identifier covers contact, id, and secret types") {
  CHECK(is_direct_identifier(EntityType::EmailAddress));
  CHECK(is_direct_identifier(EntityType::PhoneNumber));
  CHECK(is_direct_identifier(EntityType::NationalId));
  CHECK(is_direct_identifier(EntityType::CreditCard));
  CHECK(is_direct_identifier(EntityType::BankAccount));
  CHECK(is_direct_identifier(EntityType::CredentialToken));
  CHECK_FALSE(is_direct_identifier(EntityType::Person));
  CHECK_FALSE(is_direct_identifier(EntityType::Date));
  CHECK_FALSE(is_direct_identifier(EntityType::Location));
}

TEST_CASE("direct identifiers are always Level 1") {
  Scene s("Contact me at john.doe@example.com for details.");
  s.add("john.doe@example.com", EntityType::EmailAddress);
  auto out = s.run();
  REQUIRE(out.size() == 1);
  CHECK(out[0].mention == 0);
  CHECK(out[0].level == SensitivityLevel::Level1);
  REQUIRE(out[0].factors.size() == 1);
  CHECK(out[0].factors[0] == "direct_identifier");
}

TEST_CASE("contextual combination lifts Person, Location, Date to Level 2") {
  Scene s("Alice visited Paris on January 12, 2023.");
  s.add("Alice", EntityType::Person);
  s.add("Paris", EntityType::Location);
  s.add("January 12, 2023", EntityType::Date);
  auto out = s.run();
  REQUIRE(out.size() == 3);
  CHECK(out[0].level == SensitivityLevel::Level2);
  CHECK(out[0].factors == std::vector<std::string>{"co_occurs_with:Location"});
  CHECK(out[1].level == SensitivityLevel::Level2);
  CHECK(out[1].factors == std::vector<std::string>{"co_occurs_with:Person"});
  CHECK(out[2].level == SensitivityLevel::Level2);
  CHECK(out[2].factors == std::vector<std::string>{"co_occurs_with:Person"});
}

TEST_CASE("public figures in historical-fact documents are exempt") {
  Scene s("Barack Obama was born on August 4, 1961.");
  s.add("Barack Obama", EntityType::Person);
  s.add("August 4, 1961", EntityType::Date);
  auto out = s.run();
  REQUIRE(out.size() == 2);
  CHECK(out[0].level == SensitivityLevel::Level3);
  CHECK(out[0].factors == std::vector<std::string>{"public_figure"});
  CHECK(out[1].level == SensitivityLevel::Level3);
  CHECK(out[1].factors == std::vector<std::string>{"public_figure_context"});
}

TEST_CASE("a co-occurring direct identifier voids the public-figure exemption") {
  Scene s("Winston Churchill can be reached at wc@example.com today.");
  s.add("Winston Churchill", EntityType::Person);
  s.add("wc@example.com", EntityType::EmailAddress);
  auto out = s.run();
  REQUIRE(out.size() == 2);
  CHECK(out[0].level == SensitivityLevel::Level1);
  CHECK(out[0].factors ==
        std::vector<std::string>{"co_occurs_with:EmailAddress"});
  CHECK(out[1].level == SensitivityLevel::Level1);
}

TEST_CASE("any document-wide direct identifier escalates every person") {
  // The identifier sits far outside the person's chunk window.
  Scene s(
      "Alice stayed home. Filler one. Filler two. Filler three. "
      "The card 4111 1111 1111 1111 appeared.");
  s.add("Alice", EntityType::Person);
  s.add("4111 1111 1111 1111", EntityType::CreditCard);
  auto out = s.run();
  REQUIRE(out.size() == 2);
  CHECK(out[0].level == SensitivityLevel::Level1);
  CHECK(out[0].factors ==
        std::vector<std::string>{"co_occurs_with:CreditCard"});
}

TEST_CASE("financial context lifts a date to Level 2") {
  Scene s("The account balance as of March 5 was $12,000.");
  s.add("March 5", EntityType::Date);
  auto out = s.run();
  REQUIRE(out.size() == 1);
  CHECK(out[0].level == SensitivityLevel::Level2);
  CHECK(out[0].factors == std::vector<std::string>{"financial_context"});
}

TEST_CASE("standalone dates and locations are Level 3") {
  Scene s("Historical events from 1776 included the Declaration.");
  s.add("1776", EntityType::Date);
  auto out = s.run();
  REQUIRE(out.size() == 1);
  CHECK(out[0].level == SensitivityLevel::Level3);
  CHECK(out[0].factors == std::vector<std::string>{"standalone"});

  Scene loc("Paris is a city.");
  loc.add("Paris", EntityType::Location);
  auto lout = loc.run();
  CHECK(lout[0].level == SensitivityLevel::Level3);
  CHECK(lout[0].factors == std::vector<std::string>{"standalone"});
}

TEST_CASE("a lone person name defaults to Level 2") {
  Scene s("Alice stayed home.");
  s.add("Alice", EntityType::Person);
  auto out = s.run();
  REQUIRE(out.size() == 1);
  CHECK(out[0].level == SensitivityLevel::Level2);
  CHECK(out[0].factors == std::vector<std::string>{"default"});
}

TEST_CASE("window membership is chunk-based, one neighbor each side") {
  // Date and location separated by two full sentences: no co-occurrence.
  Scene s("Paris was quiet. Filler sentence one. Filler sentence two. "
          "It rained on January 12, 2023 there.");
  s.add("Paris", EntityType::Location);
  s.add("January 12, 2023", EntityType::Date);
  auto out = s.run();
  REQUIRE(out.size() == 2);
  CHECK(out[0].level == SensitivityLevel::Level3);
  CHECK(out[0].factors == std::vector<std::string>{"standalone"});
  CHECK(out[1].level == SensitivityLevel::Level3);
  // Adjacent sentences do co-occur.
  Scene near("Paris was quiet. It rained on January 12, 2023 there.");
  near.add("Paris", EntityType::Location);
  near.add("January 12, 2023", EntityType::Date);
  auto nout = near.run();
  CHECK(nout[0].level == SensitivityLevel::Level2);
  CHECK(nout[1].level == SensitivityLevel::Level2);
}

TEST_CASE("a second person voids the historical-fact exemption") {
  // Exemption requires everything else in the document to be a Date or
  // Location; another Person (famous or not) breaks it for both.
  Scene s("Barack Obama met Winston Churchill in Paris.");
  s.add("Barack Obama", EntityType::Person);
  s.add("Winston Churchill", EntityType::Person);
  s.add("Paris", EntityType::Location);
  auto out = s.run();
  REQUIRE(out.size() == 3);
  CHECK(out[0].level == SensitivityLevel::Level2);
  CHECK(out[0].factors == std::vector<std::string>{"co_occurs_with:Person"});
  CHECK(out[1].level == SensitivityLevel::Level2);
  CHECK(out[2].level == SensitivityLevel::Level2);
}

TEST_CASE("assess rejects malformed input") {
  Scene s("Alice met Bob.");
  s.add("Alice", EntityType::Person);
  EntityMention bad;
  bad.span = {0, 99};
  bad.entity_type = EntityType::Person;
  bad.surface = "x";
  s.mentions.push_back(bad);
  CHECK_THROWS_AS(s.run(), ContractError);

  Scene t("Alice met Bob.");
  t.add("Alice met", EntityType::Person);
  t.add("met Bob", EntityType::Person);  // overlapping
  CHECK_THROWS_AS(t.run(), ContractError);
}

TEST_CASE("empty mention list assesses to empty") {
  Scene s("Nothing here.");
  CHECK(s.run().empty());
}
