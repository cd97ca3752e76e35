/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <set>
#include <string>

#include "piiguard/errors.hpp"
#include "piiguard/gazetteer.hpp"

using namespace piiguard;

TEST_CASE("normalize_name folds case, whitespace, and honorifics") {
  CHECK(normalize_name("Alice Smith") == "alice smith");
  CHECK(normalize_name("  ALICE   SMITH ") == "alice smith");
  CHECK(normalize_name("Dr. Alice Smith") == "alice smith");
  CHECK(normalize_name("Prof. Dr. Alice Smith") == "alice smith");
  CHECK(normalize_name("Frau Miller") == "miller");
  // A lone honorific is not a name, but stripping stops at the last token.
  CHECK(normalize_name("Dr.") == "dr.");
}

TEST_CASE("snapshot import skips comments and collapses duplicates") {
  Gazetteer g;
  auto stats = g.import_snapshot_text(
      "# famous people\nBarack Obama\n\nbarack   OBAMA\r\nAngela Merkel\n",
      Gazetteer::Kind::PublicFigures, {}, "test");
  CHECK(stats.names_loaded == 2);
  CHECK(stats.duplicates_dropped == 1);
  CHECK(g.public_figure_count() == 2);
  CHECK(g.lookup_public_figure("Barack Obama"));
  CHECK(g.lookup_public_figure("BARACK OBAMA"));
  CHECK(g.lookup_public_figure("Dr. Angela Merkel"));
  CHECK_FALSE(g.lookup_public_figure("Barack"));
  CHECK_FALSE(g.lookup_public_figure(""));
}

TEST_CASE("tabs in a snapshot are a format violation") {
  Gazetteer g;
  CHECK_THROWS_AS(
      g.import_snapshot_text("Alice\tSmith\n", Gazetteer::Kind::PublicFigures,
                             {}, "test"),
      ParseError);
}

TEST_CASE("first names are locale-scoped") {
  Gazetteer g;
  g.import_snapshot_text("Alice\nBob\n", Gazetteer::Kind::FirstNames, "en",
                         "test-en");
  g.import_snapshot_text("Hans\n", Gazetteer::Kind::FirstNames, "de",
                         "test-de");
  CHECK(g.lookup_first_name("alice", "en"));
  CHECK_FALSE(g.lookup_first_name("alice", "de"));
  CHECK(g.lookup_first_name("Hans", "de"));
  CHECK(g.lookup_first_name("hans"));  // any locale
  CHECK_FALSE(g.lookup_first_name("zelda"));
  CHECK(g.first_name_count("en") == 2);
  CHECK(g.first_name_count("fr") == 0);
  CHECK_THROWS_AS(
      g.import_snapshot_text("X\n", Gazetteer::Kind::FirstNames, "", "test"),
      ArgumentError);
}

TEST_CASE("bundled snapshots cover the shipped locales") {
  Gazetteer g = Gazetteer::bundled({"en", "de", "fr", "es", "pt", "hi-IN"});
  CHECK(g.public_figure_count() > 50);
  CHECK(g.lookup_public_figure("Barack Obama"));
  CHECK(g.lookup_public_figure("Winston Churchill"));
  for (const char* loc : {"en", "de", "fr", "es", "pt", "hi-IN"})
    CHECK(g.first_name_count(loc) > 20);
  // Month names must not double as first names; the date detector owns them.
  CHECK_FALSE(g.lookup_first_name("january", "en"));
  CHECK_FALSE(g.lookup_first_name("june", "en"));
  CHECK_THROWS_AS(Gazetteer::bundled({"xx"}), ConfigError);
}

TEST_CASE("first_names returns a sorted snapshot") {
  Gazetteer g;
  g.import_snapshot_text("Carol\nAlice\nBob\n", Gazetteer::Kind::FirstNames,
                         "en", "test");
  auto names = g.first_names("en");
  REQUIRE(names.size() == 3);
  CHECK(names[0] == "alice");
  CHECK(names[1] == "bob");
  CHECK(names[2] == "carol");
  CHECK(g.first_names("zz").empty());
}

TEST_CASE("snapshot metadata records provenance") {
  Gazetteer g;
  g.import_snapshot_text("A B\n", Gazetteer::Kind::PublicFigures, {},
                         "somewhere.txt");
  REQUIRE(g.snapshot_meta().size() == 1);
  CHECK(g.snapshot_meta()[0].source == "somewhere.txt");
}
