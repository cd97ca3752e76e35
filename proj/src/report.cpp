/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "piiguard/report.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "piiguard/errors.hpp"
#include "piiguard/text.hpp"

namespace piiguard {

namespace {

using nlohmann::json;

json mention_to_json(const EntityMention& m) {
  return json{{"span", {{"start", m.span.start}, {"end", m.span.end}}},
              {"entity_type", std::string(to_string(m.entity_type))},
              {"surface", m.surface},
              {"locale", m.locale},
              {"detector_id", m.detector_id},
              {"confidence", m.confidence}};
}

EntityMention mention_from_json(const json& j) {
  EntityMention m;
  m.span.start = j.at("span").at("start").get<std::size_t>();
  m.span.end = j.at("span").at("end").get<std::size_t>();
  auto type = entity_type_from(j.at("entity_type").get<std::string>());
  if (!type)
    throw ParseError("unknown entity_type '" +
                     j.at("entity_type").get<std::string>() + "'");
  m.entity_type = *type;
  m.surface = j.at("surface").get<std::string>();
  m.locale = j.value("locale", "unspecified");
  m.detector_id = j.value("detector_id", std::string{});
  m.confidence = j.value("confidence", 1.0);
  return m;
}

}  // namespace

std::string report_to_json(const GuardReport& report, int indent) {
  json doc;
  doc["doc_id"] = report.doc_id;
  doc["mentions"] = json::array();
  for (const auto& m : report.mentions)
    doc["mentions"].push_back(mention_to_json(m));
  doc["assessments"] = json::array();
  for (const auto& a : report.assessments)
    doc["assessments"].push_back(json{{"mention", a.mention},
                                      {"level", static_cast<int>(a.level)},
                                      {"factors", a.factors}});
  doc["decisions"] = json::array();
  for (const auto& d : report.decisions) {
    json jd{{"action", std::string(to_string(d.action))},
            {"rule_id", d.rule_id},
            {"jurisdiction", d.jurisdiction},
            {"rationale", d.rationale}};
    if (d.mention)
      jd["mention"] = *d.mention;
    else
      jd["combination"] = d.combination;
    doc["decisions"].push_back(std::move(jd));
  }
  if (report.masked_text) doc["masked_text"] = *report.masked_text;
  doc["verdict"] = std::string(to_string(report.verdict));
  doc["timing"] = json{{"chunk_us", report.timing.chunk_us},
                       {"detect_us", report.timing.detect_us},
                       {"resolve_us", report.timing.resolve_us},
                       {"assess_us", report.timing.assess_us},
                       {"decide_us", report.timing.decide_us},
                       {"redact_us", report.timing.redact_us},
                       {"total_us", report.timing.total_us}};
  return doc.dump(indent);
}

GuardReport report_from_json(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  }
  try {
    GuardReport r;
    r.doc_id = doc.value("doc_id", std::string{});
    for (const auto& jm : doc.value("mentions", json::array()))
      r.mentions.push_back(mention_from_json(jm));
    for (const auto& ja : doc.value("assessments", json::array())) {
      SensitivityAssessment a;
      a.mention = ja.at("mention").get<std::size_t>();
      int lv = ja.at("level").get<int>();
      if (lv < 1 || lv > 3)
        throw ParseError("assessment level out of range 1..3");
      a.level = static_cast<SensitivityLevel>(lv);
      a.factors = ja.value("factors", std::vector<std::string>{});
      r.assessments.push_back(std::move(a));
    }
    for (const auto& jd : doc.value("decisions", json::array())) {
      PolicyDecision d;
      if (jd.contains("mention"))
        d.mention = jd.at("mention").get<std::size_t>();
      if (jd.contains("combination"))
        d.combination = jd.at("combination").get<std::vector<std::size_t>>();
      auto action = policy_action_from(jd.at("action").get<std::string>());
      if (!action)
        throw ParseError("unknown decision action '" +
                         jd.at("action").get<std::string>() + "'");
      d.action = *action;
      d.rule_id = jd.value("rule_id", std::string{});
      d.jurisdiction = jd.value("jurisdiction", std::string{});
      d.rationale = jd.value("rationale", std::string{});
      r.decisions.push_back(std::move(d));
    }
    if (doc.contains("masked_text"))
      r.masked_text = doc["masked_text"].get<std::string>();
    auto verdict = scan_verdict_from(doc.value("verdict", "pass"));
    if (!verdict)
      throw ParseError("unknown verdict '" + doc.value("verdict", "") + "'");
    r.verdict = *verdict;
    if (doc.contains("timing")) {
      const auto& jt = doc["timing"];
      r.timing.chunk_us = jt.value("chunk_us", 0.0);
      r.timing.detect_us = jt.value("detect_us", 0.0);
      r.timing.resolve_us = jt.value("resolve_us", 0.0);
      r.timing.assess_us = jt.value("assess_us", 0.0);
      r.timing.decide_us = jt.value("decide_us", 0.0);
      r.timing.redact_us = jt.value("redact_us", 0.0);
      r.timing.total_us = jt.value("total_us", 0.0);
    }
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  }
}

std::vector<std::string> validate_report(const GuardReport& report,
                                         std::string_view source) {
  std::vector<std::string> out;
  auto complain = [&out](std::string msg) { out.push_back(std::move(msg)); };

  for (std::size_t i = 0; i < report.mentions.size(); ++i) {
    const EntityMention& m = report.mentions[i];
    if (m.span.start >= m.span.end || m.span.end > source.size()) {
      complain("mention " + std::to_string(i) + " span out of bounds");
      continue;
    }
    if (!text::is_char_boundary(source, m.span.start) ||
        !text::is_char_boundary(source, m.span.end))
      complain("mention " + std::to_string(i) +
               " span not on character boundaries");
    if (source.substr(m.span.start, m.span.length()) != m.surface)
      complain("mention " + std::to_string(i) +
               " surface mismatches document at its span");
    for (std::size_t j = i + 1; j < report.mentions.size(); ++j)
      if (m.span.overlaps(report.mentions[j].span))
        complain("mentions " + std::to_string(i) + " and " +
                 std::to_string(j) + " overlap");
  }

  if (report.assessments.size() != report.mentions.size())
    complain("assessment count " + std::to_string(report.assessments.size()) +
             " != mention count " + std::to_string(report.mentions.size()));
  std::set<std::size_t> assessed;
  for (const auto& a : report.assessments) {
    if (a.mention >= report.mentions.size())
      complain("assessment references mention " + std::to_string(a.mention) +
               " out of range");
    else if (!assessed.insert(a.mention).second)
      complain("mention " + std::to_string(a.mention) + " assessed twice");
  }

  bool any_block = false;
  bool any_mask = false;
  std::set<std::size_t> mask_targets;
  for (std::size_t i = 0; i < report.decisions.size(); ++i) {
    const PolicyDecision& d = report.decisions[i];
    std::vector<std::size_t> refs;
    if (d.mention && !d.combination.empty())
      complain("decision " + std::to_string(i) +
               " references both a mention and a combination");
    if (d.mention) refs.push_back(*d.mention);
    refs.insert(refs.end(), d.combination.begin(), d.combination.end());
    if (refs.empty())
      complain("decision " + std::to_string(i) + " references no mentions");
    for (std::size_t r : refs)
      if (r >= report.mentions.size())
        complain("decision " + std::to_string(i) + " references mention " +
                 std::to_string(r) + " out of range");
    if (d.action == PolicyAction::Block) any_block = true;
    if (d.action == PolicyAction::Mask) {
      any_mask = true;
      for (std::size_t r : refs)
        if (r < report.mentions.size()) mask_targets.insert(r);
    }
  }

  if ((report.verdict == ScanVerdict::Pass) == (any_mask || any_block))
    complain("verdict 'pass' inconsistent with decision actions");
  if ((report.verdict == ScanVerdict::Blocked) != any_block)
    complain("verdict 'blocked' inconsistent with Block decisions");
  if (report.verdict == ScanVerdict::Blocked) {
    if (report.masked_text) complain("blocked report carries masked_text");
  } else {
    if (!report.masked_text) {
      complain("non-blocked report lacks masked_text");
    } else {
      // Rebuild the expected masked text and compare.
      std::string expect(source);
      std::vector<std::size_t> targets(mask_targets.begin(),
                                       mask_targets.end());
      std::sort(targets.begin(), targets.end(), [&](std::size_t a,
                                                    std::size_t b) {
        return report.mentions[a].span.start > report.mentions[b].span.start;
      });
      bool spans_ok = true;
      for (std::size_t idx : targets) {
        const EntityMention& m = report.mentions[idx];
        if (m.span.end > source.size() || m.span.start >= m.span.end) {
          spans_ok = false;
          break;
        }
        expect.replace(m.span.start, m.span.length(),
                       mask_placeholder(m.entity_type));
      }
      if (spans_ok && expect != *report.masked_text)
        complain("masked_text does not match the masking of the source");
    }
  }
  return out;
}

}  // namespace piiguard
