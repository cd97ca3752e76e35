/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "piiguard/engine.hpp"

#include <chrono>
#include <filesystem>

#include <json.hpp>

#include "piiguard/errors.hpp"
#include "piiguard/redactor.hpp"
#include "piiguard/resolver.hpp"
#include "piiguard/scorer.hpp"
#include "piiguard/text.hpp"

namespace piiguard {

namespace {

namespace fs = std::filesystem;

double elapsed_us(std::chrono::steady_clock::time_point from,
                  std::chrono::steady_clock::time_point to) {
  return std::chrono::duration<double, std::micro>(to - from).count();
}

}  // namespace

Engine::Engine(EngineOptions options) : options_(std::move(options)) {
  if (options_.locales.empty())
    throw ConfigError("engine requires at least one locale");
  if (options_.credential_entropy_threshold <= 0)
    throw ConfigError("credential entropy threshold must be > 0");

  if (options_.gazetteer_dir) {
    fs::path dir(*options_.gazetteer_dir);
    gazetteer_.import_snapshot(dir / "public_figures.txt",
                               Gazetteer::Kind::PublicFigures);
    for (const auto& loc : options_.locales)
      gazetteer_.import_snapshot(dir / ("first_names_" + loc + ".txt"),
                                 Gazetteer::Kind::FirstNames, loc);
  } else {
    gazetteer_ = Gazetteer::bundled(options_.locales);
  }

  template_ = load_template(options_.template_source);

  if (options_.keywords_dir) {
    fs::path dir(*options_.keywords_dir);
    for (const auto& loc : options_.locales) {
      fs::path kw = dir / (loc + ".tsv");
      if (fs::exists(kw)) keywords_.merge(KeywordTable::load_file(kw.string()));
      fs::path fin = dir / ("financial_" + loc + ".tsv");
      if (fs::exists(fin))
        financial_.merge(KeywordTable::load_file(fin.string()));
    }
  } else {
    keywords_ = KeywordTable::bundled(options_.locales);
    financial_ = KeywordTable::bundled_financial(options_.locales);
  }

  DetectorConfig dc;
  dc.enabled_locales = options_.locales;
  dc.enabled_types = options_.enabled_types;
  dc.first_name_lexicon = &gazetteer_;
  dc.credential_entropy_threshold = options_.credential_entropy_threshold;
  dc.detect_pseudonyms = template_.pseudonyms_protected;

  if (options_.patterns_dir) {
    fs::path dir(*options_.patterns_dir);
    std::vector<LocalePatterns> patterns;
    patterns.push_back(load_patterns_file((dir / "common.json").string()));
    for (const auto& loc : options_.locales) {
      fs::path file = dir / (loc + ".json");
      if (!fs::exists(file))
        throw ConfigError("unknown locale tag '" + loc +
                          "': no pattern file in " + dir.string());
      patterns.push_back(load_patterns_file(file.string()));
    }
    detectors_ = std::make_unique<Detectors>(std::move(dc), std::move(patterns));
  } else {
    detectors_ = std::make_unique<Detectors>(Detectors::bundled(std::move(dc)));
  }
}

EngineOptions Engine::options_from_json(std::string_view json_text,
                                        const std::string& origin) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("config '" + origin + "': " + e.what());
  }
  if (!doc.is_object())
    throw ParseError("config '" + origin + "': top level must be an object");
  EngineOptions opts;
  if (doc.contains("locales")) {
    opts.locales.clear();
    for (const auto& l : doc["locales"])
      opts.locales.insert(l.get<std::string>());
  }
  if (doc.contains("types")) {
    opts.enabled_types.clear();
    for (const auto& t : doc["types"]) {
      auto type = entity_type_from(t.get<std::string>());
      if (!type)
        throw ConfigError("config '" + origin + "': unknown entity type '" +
                          t.get<std::string>() + "'");
      opts.enabled_types.insert(*type);
    }
  }
  if (doc.contains("template"))
    opts.template_source = doc["template"].get<std::string>();
  if (doc.contains("entropy_threshold"))
    opts.credential_entropy_threshold = doc["entropy_threshold"].get<double>();
  if (doc.contains("patterns_dir"))
    opts.patterns_dir = doc["patterns_dir"].get<std::string>();
  if (doc.contains("gazetteer_dir"))
    opts.gazetteer_dir = doc["gazetteer_dir"].get<std::string>();
  if (doc.contains("keywords_dir"))
    opts.keywords_dir = doc["keywords_dir"].get<std::string>();
  if (doc.contains("separators"))
    opts.chunker.separators = doc["separators"].get<std::string>();
  return opts;
}

GuardReport Engine::scan(std::string_view text, std::string_view doc_id) const {
  if (!text::utf8_valid(text))
    throw ArgumentError("document is not valid UTF-8");
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();

  std::vector<Chunk> chunks = segment(text, options_.chunker);
  auto t1 = clock::now();

  std::vector<EntityMention> candidates = detectors_->detect(text, chunks);
  auto t2 = clock::now();

  std::vector<EntityMention> mentions =
      resolve(std::move(candidates), chunks, text, keywords_);
  auto t3 = clock::now();

  std::vector<SensitivityAssessment> assessments =
      assess(mentions, chunks, text, gazetteer_, financial_);
  auto t4 = clock::now();

  std::vector<PolicyDecision> decisions =
      decide(assessments, mentions, template_);
  auto t5 = clock::now();

  GuardReport report = apply(text, std::move(mentions),
                             std::move(assessments), std::move(decisions));
  auto t6 = clock::now();

  report.doc_id = std::string(doc_id);
  report.timing.chunk_us = elapsed_us(t0, t1);
  report.timing.detect_us = elapsed_us(t1, t2);
  report.timing.resolve_us = elapsed_us(t2, t3);
  report.timing.assess_us = elapsed_us(t3, t4);
  report.timing.decide_us = elapsed_us(t4, t5);
  report.timing.redact_us = elapsed_us(t5, t6);
  report.timing.total_us = elapsed_us(t0, t6);
  return report;
}

}  // namespace piiguard
