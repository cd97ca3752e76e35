/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "piiguard/policy.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "piiguard/bundled.hpp"
#include "piiguard/errors.hpp"

namespace piiguard {

namespace {

using nlohmann::json;

std::string level_name(SensitivityLevel l) {
  return "Level " + std::to_string(static_cast<int>(l));
}

}  // namespace

std::vector<std::string> builtin_template_ids() {
  return {"ccpa-default", "gdpr-default", "pipeda-default"};
}

PolicyTemplate parse_template_json(std::string_view json_text,
                                   const std::string& origin) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError("policy template '" + origin + "': " + e.what());
  }
  if (!doc.is_object())
    throw ParseError("policy template '" + origin +
                     "': top level must be an object");

  PolicyTemplate t;
  std::vector<std::string> problems;
  t.jurisdiction = doc.value("jurisdiction", std::string{});
  if (t.jurisdiction.empty()) problems.push_back("missing 'jurisdiction'");
  t.pseudonyms_protected = doc.value("pseudonyms_protected", false);
  if (doc.contains("default_action")) {
    auto a = policy_action_from(doc["default_action"].get<std::string>());
    if (!a)
      problems.push_back("unknown default_action '" +
                         doc["default_action"].get<std::string>() + "'");
    else
      t.default_action = *a;
  }

  std::set<std::string> seen_ids;
  for (const auto& r : doc.value("rules", json::array())) {
    PolicyRule rule;
    rule.rule_id = r.value("rule_id", std::string{});
    if (rule.rule_id.empty()) {
      problems.push_back("rule with missing 'rule_id'");
    } else if (!seen_ids.insert(rule.rule_id).second) {
      problems.push_back("duplicate rule_id '" + rule.rule_id + "'");
    }
    if (r.contains("match") && !r["match"].is_null()) {
      if (r["match"].is_string()) {
        if (r["match"].get<std::string>() != "any")
          problems.push_back("rule '" + rule.rule_id +
                             "': match must be \"any\" or a type list");
      } else {
        for (const auto& tname : r["match"]) {
          auto type = entity_type_from(tname.get<std::string>());
          if (!type)
            problems.push_back("rule '" + rule.rule_id +
                               "': unknown entity type '" +
                               tname.get<std::string>() + "'");
          else
            rule.match.insert(*type);
        }
      }
    }
    if (r.contains("min_level")) {
      int lv = r["min_level"].get<int>();
      if (lv < 1 || lv > 3)
        problems.push_back("rule '" + rule.rule_id + "': min_level " +
                           std::to_string(lv) + " out of range 1..3");
      else
        rule.min_level = static_cast<SensitivityLevel>(lv);
    }
    for (const auto& tname : r.value("combination", json::array())) {
      auto type = entity_type_from(tname.get<std::string>());
      if (!type)
        problems.push_back("rule '" + rule.rule_id +
                           "': unknown entity type '" +
                           tname.get<std::string>() + "' in combination");
      else
        rule.combination.insert(*type);
    }
    std::string action_name = r.value("action", std::string{});
    auto action = policy_action_from(action_name);
    if (!action)
      problems.push_back("rule '" + rule.rule_id + "': unknown action '" +
                         action_name + "'");
    else
      rule.action = *action;
    t.rules.push_back(std::move(rule));
  }

  if (!problems.empty()) {
    std::string msg = "policy template '" + origin + "' is invalid:";
    for (const auto& p : problems) msg += "\n  - " + p;
    throw ConfigError(msg);
  }
  return t;
}

std::string template_to_json(const PolicyTemplate& t) {
  json doc;
  doc["jurisdiction"] = t.jurisdiction;
  doc["pseudonyms_protected"] = t.pseudonyms_protected;
  doc["default_action"] = std::string(to_string(t.default_action));
  doc["rules"] = json::array();
  for (const auto& r : t.rules) {
    json jr;
    jr["rule_id"] = r.rule_id;
    if (r.match.empty()) {
      jr["match"] = "any";
    } else {
      jr["match"] = json::array();
      for (EntityType type : r.match)
        jr["match"].push_back(std::string(to_string(type)));
    }
    jr["min_level"] = static_cast<int>(r.min_level);
    if (!r.combination.empty()) {
      jr["combination"] = json::array();
      for (EntityType type : r.combination)
        jr["combination"].push_back(std::string(to_string(type)));
    }
    jr["action"] = std::string(to_string(r.action));
    doc["rules"].push_back(std::move(jr));
  }
  return doc.dump(2);
}

PolicyTemplate load_template(const std::string& source) {
  auto builtins = builtin_template_ids();
  if (std::find(builtins.begin(), builtins.end(), source) != builtins.end()) {
    std::string name = "policies/" + source + ".json";
    return parse_template_json(bundled_resource(name), "builtin:" + source);
  }
  std::ifstream in(source, std::ios::binary);
  if (!in)
    throw ConfigError("policy template source '" + source +
                      "' is neither a built-in id nor a readable file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_template_json(buf.str(), source);
}

std::vector<PolicyDecision> decide(
    std::span<const SensitivityAssessment> assessments,
    std::span<const EntityMention> mentions, const PolicyTemplate& t) {
  std::vector<PolicyDecision> out;

  for (const auto& a : assessments) {
    if (a.mention >= mentions.size())
      throw ContractError("assessment references mention " +
                          std::to_string(a.mention) + " of " +
                          std::to_string(mentions.size()));
    EntityType type = mentions[a.mention].entity_type;
    PolicyDecision d;
    d.mention = a.mention;
    d.jurisdiction = t.jurisdiction;
    bool matched = false;
    for (const auto& r : t.rules) {
      if (!r.combination.empty()) continue;
      if (!r.match.empty() && !r.match.count(type)) continue;
      if (!at_least_as_sensitive(a.level, r.min_level)) continue;
      d.action = r.action;
      d.rule_id = r.rule_id;
      d.rationale = std::string(to_string(type)) + " at " +
                    level_name(a.level) + " matched rule '" + r.rule_id + "'";
      matched = true;
      break;
    }
    if (!matched) {
      d.action = t.default_action;
      d.rule_id = "default";
      d.rationale = std::string(to_string(type)) + " at " +
                    level_name(a.level) +
                    " matched no rule; template default applies";
    }
    out.push_back(std::move(d));
  }

  // Document-level combination rules.
  for (const auto& r : t.rules) {
    if (r.combination.empty()) continue;
    bool all_present = true;
    for (EntityType type : r.combination) {
      bool found = false;
      for (const auto& m : mentions)
        if (m.entity_type == type) {
          found = true;
          break;
        }
      if (!found) {
        all_present = false;
        break;
      }
    }
    if (!all_present) continue;
    PolicyDecision d;
    std::string types;
    for (EntityType type : r.combination) {
      if (!types.empty()) types += ", ";
      types += std::string(to_string(type));
    }
    for (std::size_t i = 0; i < mentions.size(); ++i)
      if (r.combination.count(mentions[i].entity_type))
        d.combination.push_back(i);
    d.action = r.action;
    d.rule_id = r.rule_id;
    d.jurisdiction = t.jurisdiction;
    d.rationale = "types {" + types + "} co-occur in the document; " +
                  "combination rule '" + r.rule_id + "'";
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace piiguard
