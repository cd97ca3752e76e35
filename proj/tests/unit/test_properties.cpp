/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 *
 * Randomized invariant suites. Each runs >= 1000 generated cases from a
 * fixed seed, so a failure is reproducible from the reported case index.
 */
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "piiguard/chunker.hpp"
#include "piiguard/corpus.hpp"
#include "piiguard/engine.hpp"
#include "piiguard/keywords.hpp"
#include "piiguard/policy.hpp"
#include "piiguard/redactor.hpp"
#include "piiguard/resolver.hpp"
#include "piiguard/suppression.hpp"
#include "piiguard/types.hpp"

using namespace piiguard;

namespace {

constexpr std::size_t kCases = 1000;

std::string random_ascii(std::mt19937_64& rng, std::size_t min_len,
                         std::size_t max_len, const std::string& alphabet) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string out;
  std::size_t n = len(rng);
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out += alphabet[pick(rng)];
  return out;
}

}  // namespace

TEST_CASE("property: chunking tiles the text losslessly") {
  std::mt19937_64 rng(0x5eed0001);
  // Pieces keep every generated string valid UTF-8.
  const std::vector<std::string> pieces = {
      "word", "Hello", "x",  " ",   " ",    "\t", "\n", ".", "!",  "?",
      "3.14", "v1.2.3", ",", "caf\xC3\xA9", "\xC3\x9F", "\xE0\xA4\x85",
      "\xF0\x9F\x98\x80", "12", "e.g", "..."};
  std::uniform_int_distribution<std::size_t> n_pieces(0, 40);
  std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);

  for (std::size_t c = 0; c < kCases; ++c) {
    std::string text;
    std::size_t n = n_pieces(rng);
    for (std::size_t i = 0; i < n; ++i) text += pieces[pick(rng)];

    std::vector<Chunk> chunks = segment(text);
    INFO("case ", c, " text: ", text);
    if (text.empty()) {
      CHECK(chunks.empty());
      continue;
    }
    REQUIRE_FALSE(chunks.empty());
    CHECK(chunks.front().span.start == 0);
    CHECK(chunks.back().span.end == text.size());
    std::string rebuilt;
    for (std::size_t i = 0; i < chunks.size(); ++i) {
      const Chunk& ch = chunks[i];
      CHECK(ch.index == i);
      REQUIRE(ch.span.start < ch.span.end);
      REQUIRE(ch.span.end <= text.size());
      if (i) CHECK(ch.span.start == chunks[i - 1].span.end);
      rebuilt += text.substr(ch.span.start, ch.span.length());
    }
    CHECK(rebuilt == text);

    // chunk_index_at agrees with the tiling.
    std::uniform_int_distribution<std::size_t> pos_pick(0, text.size() - 1);
    std::size_t pos = pos_pick(rng);
    std::size_t idx = chunk_index_at(chunks, pos);
    CHECK(chunks[idx].span.contains(pos));
  }
}

TEST_CASE("property: resolution is disjoint, conservative, order-blind") {
  std::mt19937_64 rng(0x5eed0002);
  const std::string text =
      "alpha bravo charlie delta echo foxtrot golf hotel india juliett "
      "kilo lima mike november oscar papa quebec romeo sierra tango.";
  std::vector<Chunk> chunks = segment(text);
  KeywordTable no_keywords;
  const std::vector<std::string> detectors = {"det-a", "det-b", "det-c"};
  std::uniform_int_distribution<std::size_t> n_cand(0, 12);
  std::uniform_int_distribution<std::size_t> start_pick(0, text.size() - 2);
  std::uniform_int_distribution<std::size_t> len_pick(1, 24);
  std::uniform_int_distribution<std::size_t> type_pick(0,
                                                       kAllEntityTypes.size() - 1);
  std::uniform_int_distribution<std::size_t> det_pick(0, detectors.size() - 1);
  std::uniform_real_distribution<double> conf(0.3, 1.0);

  for (std::size_t c = 0; c < kCases; ++c) {
    std::vector<EntityMention> candidates;
    std::size_t n = n_cand(rng);
    for (std::size_t i = 0; i < n; ++i) {
      EntityMention m;
      m.span.start = start_pick(rng);
      m.span.end = std::min(m.span.start + len_pick(rng), text.size());
      m.surface = text.substr(m.span.start, m.span.length());
      m.entity_type = kAllEntityTypes[type_pick(rng)];
      m.detector_id = detectors[det_pick(rng)];
      m.confidence = conf(rng);
      candidates.push_back(std::move(m));
    }

    std::vector<EntityMention> survivors =
        resolve(candidates, chunks, text, no_keywords);
    INFO("case ", c, " with ", n, " candidates");

    // Conservative: every survivor is one of the inputs, verbatim.
    for (const auto& s : survivors)
      CHECK(std::find(candidates.begin(), candidates.end(), s) !=
            candidates.end());
    // Disjoint and sorted.
    for (std::size_t i = 1; i < survivors.size(); ++i) {
      CHECK(survivors[i - 1].span.start <= survivors[i].span.start);
      CHECK_FALSE(survivors[i - 1].span.overlaps(survivors[i].span));
    }
    // Every dropped candidate lost to some surviving overlap; no silent drops.
    for (const auto& cand : candidates) {
      bool kept = std::find(survivors.begin(), survivors.end(), cand) !=
                  survivors.end();
      if (kept) continue;
      bool collides = false;
      for (const auto& s : survivors)
        if (s.span.overlaps(cand.span)) collides = true;
      CHECK(collides);
    }
    // Input order is irrelevant.
    std::vector<EntityMention> shuffled = candidates;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(resolve(shuffled, chunks, text, no_keywords) == survivors);
  }
}

TEST_CASE("property: redaction reconstructs exactly and never leaks") {
  std::mt19937_64 rng(0x5eed0003);
  std::uniform_int_distribution<std::size_t> n_mentions(1, 6);
  std::uniform_int_distribution<std::size_t> type_pick(0,
                                                       kAllEntityTypes.size() - 1);
  std::uniform_int_distribution<int> action_pick(0, 9);
  std::uniform_int_distribution<int> level_pick(1, 3);

  for (std::size_t c = 0; c < kCases; ++c) {
    // Unique sentinel surfaces so leakage is detectable by substring search.
    std::size_t n = n_mentions(rng);
    std::string text;
    std::vector<EntityMention> mentions;
    for (std::size_t i = 0; i < n; ++i) {
      text += random_ascii(rng, 0, 12, "abcdefgh ,;");
      std::string sentinel = "ZQ" + std::to_string(c) + "x" + std::to_string(i);
      EntityMention m;
      m.span.start = text.size();
      text += sentinel;
      m.span.end = text.size();
      m.surface = sentinel;
      m.entity_type = kAllEntityTypes[type_pick(rng)];
      m.detector_id = "fuzz";
      mentions.push_back(std::move(m));
    }
    text += random_ascii(rng, 0, 12, "abcdefgh .");

    std::vector<SensitivityAssessment> assessments;
    std::vector<PolicyDecision> decisions;
    bool any_block = false, any_mask = false;
    std::vector<bool> masked(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      SensitivityAssessment a;
      a.mention = i;
      a.level = static_cast<SensitivityLevel>(level_pick(rng));
      assessments.push_back(std::move(a));
      PolicyDecision d;
      d.mention = i;
      int roll = action_pick(rng);  // block kept rare so both paths get cases
      d.action = roll == 0 ? PolicyAction::Block
                           : roll <= 5 ? PolicyAction::Mask : PolicyAction::Pass;
      if (d.action == PolicyAction::Block) any_block = true;
      if (d.action == PolicyAction::Mask) {
        any_mask = true;
        masked[i] = true;
      }
      d.rule_id = "fuzz-rule";
      decisions.push_back(std::move(d));
    }

    GuardReport report = apply(text, mentions, assessments, decisions);
    INFO("case ", c, " text: ", text);
    if (any_block) {
      CHECK(report.verdict == ScanVerdict::Blocked);
      CHECK_FALSE(report.masked_text.has_value());
      continue;
    }
    CHECK(report.verdict ==
          (any_mask ? ScanVerdict::Masked : ScanVerdict::Pass));
    REQUIRE(report.masked_text.has_value());

    // Independent reconstruction: splice placeholders over masked spans.
    std::string expected;
    std::size_t cursor = 0;
    for (std::size_t i = 0; i < n; ++i) {
      expected += text.substr(cursor, mentions[i].span.start - cursor);
      expected += masked[i]
                      ? std::string(mask_placeholder(mentions[i].entity_type))
                      : mentions[i].surface;
      cursor = mentions[i].span.end;
    }
    expected += text.substr(cursor);
    CHECK(*report.masked_text == expected);

    for (std::size_t i = 0; i < n; ++i) {
      bool present =
          report.masked_text->find(mentions[i].surface) != std::string::npos;
      CHECK(present == !masked[i]);
    }
  }
}

TEST_CASE("property: built-in templates act monotonically in sensitivity") {
  std::mt19937_64 rng(0x5eed0004);
  std::vector<PolicyTemplate> templates;
  for (const std::string& id : builtin_template_ids())
    templates.push_back(load_template(id));
  std::uniform_int_distribution<std::size_t> t_pick(0, templates.size() - 1);
  std::uniform_int_distribution<std::size_t> type_pick(0,
                                                       kAllEntityTypes.size() - 1);
  std::uniform_int_distribution<int> level_pick(1, 3);

  const std::string text = "sample";
  for (std::size_t c = 0; c < kCases; ++c) {
    const PolicyTemplate& t = templates[t_pick(rng)];
    EntityMention m;
    m.span = {0, text.size()};
    m.surface = text;
    m.entity_type = kAllEntityTypes[type_pick(rng)];
    m.detector_id = "fuzz";
    std::vector<EntityMention> mentions{m};

    int la = level_pick(rng), lb = level_pick(rng);
    if (la > lb) std::swap(la, lb);  // la is at least as sensitive

    auto act = [&](int level) {
      SensitivityAssessment a;
      a.mention = 0;
      a.level = static_cast<SensitivityLevel>(level);
      std::vector<SensitivityAssessment> as{a};
      std::vector<PolicyDecision> ds = decide(as, mentions, t);
      REQUIRE(ds.size() == 1);
      return static_cast<int>(ds[0].action);
    };
    INFO("case ", c, " template ", t.jurisdiction, " type ",
         to_string(m.entity_type), " levels ", la, " vs ", lb);
    CHECK(act(la) >= act(lb));
  }
}

TEST_CASE("property: fingerprints are local; feedback is idempotent") {
  std::mt19937_64 rng(0x5eed0005);
  const std::string letters = "abcdefghijklmnopqrstuvwxyz";
  SuppressionStore store;
  std::size_t expected_size = 0;

  for (std::size_t c = 0; c < kCases; ++c) {
    std::string left = random_ascii(rng, 20, 40, letters);
    std::string right = random_ascii(rng, 20, 40, letters);
    std::string surface = "Sam Doe";
    std::string text = left + surface + right;

    EntityMention m;
    m.span = {left.size(), left.size() + surface.size()};
    m.surface = surface;
    m.entity_type = EntityType::Person;
    std::string fp = mention_fingerprint(text, m);

    // Distant edits do not disturb the fingerprint...
    std::string padded = random_ascii(rng, 1, 30, letters) + text +
                         random_ascii(rng, 1, 30, letters);
    EntityMention shifted = m;
    shifted.span.start = padded.find(surface);
    shifted.span.end = shifted.span.start + surface.size();
    CHECK(mention_fingerprint(padded, shifted) == fp);

    // ...while flipping a letter right next to the surface does.
    std::string near = text;
    std::size_t at = m.span.end;  // first context byte after the surface
    near[at] = near[at] == 'z' ? 'y' : 'z';
    CHECK(mention_fingerprint(near, m) != fp);

    SuppressionEntry entry;
    entry.fingerprint = fp;
    bool added = store.record_feedback(entry);
    if (added) ++expected_size;
    CHECK_FALSE(store.record_feedback(entry));  // idempotent
    CHECK(store.contains(fp));
    CHECK(store.size() == expected_size);
  }
}

TEST_CASE("property: scanning is deterministic modulo timings") {
  EngineOptions o;
  o.locales = {"en", "de", "fr", "es", "pt", "hi-IN"};
  Engine engine{o};

  std::vector<std::string> docs;
  for (std::uint64_t seed : {11ull, 12ull})
    for (const auto& rec : generate_corpus(seed, default_corpus_spec()))
      docs.push_back(rec.text);
  REQUIRE(docs.size() >= kCases);

  for (std::size_t i = 0; i < docs.size(); ++i) {
    GuardReport first = engine.scan(docs[i], "doc");
    GuardReport second = engine.scan(docs[i], "doc");
    INFO("doc ", i, ": ", docs[i]);
    CHECK(first == second);
  }
}
