/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "piiguard/corpus.hpp"
#include "piiguard/errors.hpp"

using namespace piiguard;

namespace {

CorpusSpec small_spec(double negative_fraction) {
  CorpusSpec spec;
  spec.positives = {{EntityType::EmailAddress, "en", 6},
                    {EntityType::PhoneNumber, "en", 4}};
  spec.negative_fraction = negative_fraction;
  return spec;
}

std::size_t gold_total(const std::vector<AnnotatedRecord>& recs) {
  std::size_t n = 0;
  for (const auto& r : recs) n += r.gold.size();
  return n;
}

}  // namespace

TEST_CASE("same seed, same corpus; different seed, different corpus") {
  CorpusSpec spec = small_spec(0.3);
  auto a = generate_corpus(42, spec);
  auto b = generate_corpus(42, spec);
  CHECK(a == b);
  auto c = generate_corpus(43, spec);
  REQUIRE(c.size() == a.size());
  bool any_difference = false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].text != c[i].text) any_difference = true;
  CHECK(any_difference);
}

TEST_CASE("default spec: 469 positives, 30% negatives, six locales") {
  CorpusSpec spec = default_corpus_spec();
  CHECK(spec.negative_fraction == 0.3);
  std::size_t requested = 0;
  std::set<std::string> locales;
  for (const auto& s : spec.positives) {
    requested += s.count;
    locales.insert(s.locale);
  }
  CHECK(requested == 469);
  CHECK(locales.size() == 6);
  CHECK(locales.count("en") == 1);
  CHECK(locales.count("hi-IN") == 1);

  auto records = generate_corpus(42, spec);
  CHECK(records.size() == 670);  // 469 + round(0.3/0.7 * 469) = 201
  std::size_t negatives = 0;
  for (const auto& r : records)
    if (r.gold.empty()) ++negatives;
  CHECK(negatives == 201);
  CHECK(gold_total(records) >= 469);  // every positive carries >= 1 mention
}

TEST_CASE("gold spans index their surfaces exactly") {
  auto records = generate_corpus(7, default_corpus_spec());
  for (const auto& r : records) {
    CHECK_FALSE(r.text.empty());
    for (const auto& g : r.gold) {
      REQUIRE(g.span.start < g.span.end);
      REQUIRE(g.span.end <= r.text.size());
      CHECK_FALSE(g.surface.empty());
      CHECK(r.text.substr(g.span.start, g.span.length()) == g.surface);
    }
  }
}

TEST_CASE("record ids are sequential and unique") {
  auto records = generate_corpus(42, small_spec(0.5));
  REQUIRE(records.size() == 20);  // 10 positives + round(0.5/0.5 * 10)
  CHECK(records[0].record_id == "rec-0001");
  CHECK(records[19].record_id == "rec-0020");
  std::set<std::string> ids;
  for (const auto& r : records) ids.insert(r.record_id);
  CHECK(ids.size() == records.size());
}

TEST_CASE("negative_fraction steers the record mix") {
  auto none = generate_corpus(1, small_spec(0.0));
  CHECK(none.size() == 10);
  for (const auto& r : none) CHECK_FALSE(r.gold.empty());

  auto all = generate_corpus(1, small_spec(1.0));
  CHECK(all.size() == 10);  // one negative per requested record
  for (const auto& r : all) {
    CHECK(r.gold.empty());
    CHECK_FALSE(r.text.empty());
  }
}

TEST_CASE("generator rejects unusable specs") {
  CorpusSpec empty;
  empty.negative_fraction = 0.3;
  CHECK_THROWS_AS(generate_corpus(1, empty), ArgumentError);

  CorpusSpec bad_locale;
  bad_locale.positives = {{EntityType::EmailAddress, "xx", 3}};
  CHECK_THROWS_AS(generate_corpus(1, bad_locale), ConfigError);
}

TEST_CASE("spec JSON round trip") {
  CorpusSpec spec = small_spec(0.25);
  CorpusSpec back = corpus_spec_from_json(corpus_spec_to_json(spec), "rt");
  CHECK(back.negative_fraction == doctest::Approx(0.25));
  REQUIRE(back.positives.size() == 2);
  CHECK(back.positives[0].entity_type == EntityType::EmailAddress);
  CHECK(back.positives[0].locale == "en");
  CHECK(back.positives[0].count == 6);
  CHECK(back.positives[1].count == 4);
}

TEST_CASE("spec JSON parse failures are named") {
  CHECK_THROWS_AS(corpus_spec_from_json("{oops", "x"), ParseError);
  CHECK_THROWS_AS(corpus_spec_from_json("[1]", "x"), ParseError);
  CHECK_THROWS_AS(corpus_spec_from_json("{}", "x"), ParseError);  // no positives
  CHECK_THROWS_AS(
      corpus_spec_from_json(R"({"negative_fraction":2,"positives":[]})", "x"),
      ParseError);
  CHECK_THROWS_AS(
      corpus_spec_from_json(
          R"({"positives":[{"entity_type":"Alien","locale":"en","count":1}]})",
          "x"),
      ParseError);
  CHECK_THROWS_AS(
      corpus_spec_from_json(
          R"({"positives":[{"entity_type":"Date","locale":"","count":1}]})",
          "x"),
      ParseError);
  CHECK_THROWS_AS(
      corpus_spec_from_json(R"({"positives":[{"locale":"en","count":1}]})",
                            "x"),
      ParseError);
}

TEST_CASE("generated corpus scores perfectly under the bundled engine") {
  CorpusSpec spec = default_corpus_spec();
  auto gold = generate_corpus(42, spec);

  EngineOptions o;
  o.locales = {"en", "de", "fr", "es", "pt", "hi-IN"};
  Engine engine{o};

  std::vector<PredictedRecord> predictions;
  predictions.reserve(gold.size());
  for (const auto& record : gold) {
    PredictedRecord pred;
    pred.record_id = record.record_id;
    GuardReport report = engine.scan(record.text, record.record_id);
    for (const auto& m : report.mentions)
      pred.mentions.push_back({m.entity_type, m.span, m.surface});
    predictions.push_back(std::move(pred));
  }
  MetricsReport m = score(predictions, gold, MatchMode::ExactSpan);
  CHECK(m.micro.fp == 0);
  CHECK(m.micro.fn == 0);
  CHECK(m.micro.f1 == doctest::Approx(1.0));
}
