/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "piiguard/chunker.hpp"
#include "piiguard/detectors.hpp"
#include "piiguard/gazetteer.hpp"
#include "piiguard/keywords.hpp"
#include "piiguard/policy.hpp"
#include "piiguard/types.hpp"

namespace piiguard {

struct EngineOptions {
  std::set<std::string> locales = {"en"};
  std::set<EntityType> enabled_types = {kAllEntityTypes.begin(),
                                        kAllEntityTypes.end()};
  double credential_entropy_threshold = 4.0;
  // Built-in template id or a template file path.
  std::string template_source = "gdpr-default";
  // Directory overrides; unset means bundled data.
  //   patterns_dir:  <dir>/{common,<locale>}.json
  //   gazetteer_dir: <dir>/public_figures.txt, <dir>/first_names_<locale>.txt
  //   keywords_dir:  <dir>/<locale>.tsv, <dir>/financial_<locale>.tsv
  std::optional<std::string> patterns_dir;
  std::optional<std::string> gazetteer_dir;
  std::optional<std::string> keywords_dir;
  ChunkerOptions chunker;
};

// One fully-wired scan pipeline: chunk -> detect -> resolve -> assess ->
// decide -> redact. Immutable after construction; scan is const and safe
// to call concurrently.
class Engine {
 public:
  explicit Engine(EngineOptions options);

  // Config-file JSON: {"locales": [...], "template": "...",
  // "entropy_threshold": 4.0, "types": [...]} — all fields optional.
  static EngineOptions options_from_json(std::string_view json_text,
                                         const std::string& origin);

  // Throws ArgumentError when text is not valid UTF-8.
  GuardReport scan(std::string_view text, std::string_view doc_id) const;

  const EngineOptions& options() const { return options_; }
  const PolicyTemplate& policy_template() const { return template_; }
  const Gazetteer& gazetteer() const { return gazetteer_; }
  const Detectors& detectors() const { return *detectors_; }
  const KeywordTable& keywords() const { return keywords_; }
  const KeywordTable& financial_keywords() const { return financial_; }

 private:
  EngineOptions options_;
  Gazetteer gazetteer_;
  PolicyTemplate template_;
  KeywordTable keywords_;
  KeywordTable financial_;
  std::unique_ptr<Detectors> detectors_;
};

}  // namespace piiguard
