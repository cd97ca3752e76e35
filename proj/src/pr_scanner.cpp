/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "piiguard/pr_scanner.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "piiguard/errors.hpp"
#include "piiguard/redactor.hpp"
#include "piiguard/report.hpp"
#include "piiguard/text.hpp"

namespace piiguard {

namespace {

namespace fs = std::filesystem;

bool looks_binary(std::string_view content) {
  std::size_t probe = std::min<std::size_t>(content.size(), 8192);
  if (content.substr(0, probe).find('\0') != std::string_view::npos)
    return true;
  return !text::utf8_valid(content);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failed for '" + path.string() + "'");
  return std::move(buf).str();
}

void sort_and_check_paths(PrDocument& pr, const std::string& origin) {
  std::stable_sort(pr.files.begin(), pr.files.end(),
                   [](const PrFile& a, const PrFile& b) {
                     return a.path < b.path;
                   });
  for (std::size_t i = 1; i < pr.files.size(); ++i)
    if (pr.files[i].path == pr.files[i - 1].path)
      throw ParseError("duplicate file path '" + pr.files[i].path + "' in " +
                       origin);
}

}  // namespace

PrDocument pr_document_from_json(std::string_view json_text,
                                 const std::string& origin) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("PR export '" + origin + "': " + e.what());
  }
  if (!doc.is_object() || !doc.contains("files") || !doc["files"].is_array())
    throw ParseError("PR export '" + origin +
                     "': expected {\"pr_id\", \"files\": [...]}");
  PrDocument pr;
  pr.pr_id = doc.value("pr_id", origin);
  pr.source_meta.push_back("export:" + origin);
  if (doc.contains("source_meta"))
    for (const auto& m : doc["source_meta"])
      pr.source_meta.push_back(m.get<std::string>());
  for (const auto& f : doc["files"]) {
    if (!f.is_object() || !f.contains("path") || !f.contains("content"))
      throw ParseError("PR export '" + origin +
                       "': file entries need path and content");
    PrFile file{f["path"].get<std::string>(), f["content"].get<std::string>()};
    if (looks_binary(file.content)) {
      pr.source_meta.push_back("skipped binary: " + file.path);
      continue;
    }
    pr.files.push_back(std::move(file));
  }
  sort_and_check_paths(pr, origin);
  return pr;
}

std::string pr_document_to_json(const PrDocument& pr) {
  nlohmann::json files = nlohmann::json::array();
  for (const auto& f : pr.files)
    files.push_back({{"path", f.path}, {"content", f.content}});
  nlohmann::json doc{{"pr_id", pr.pr_id},
                     {"files", std::move(files)},
                     {"source_meta", pr.source_meta}};
  return doc.dump(2);
}

PrDocument ingest(const std::string& source) {
  fs::path root(source);
  std::error_code ec;
  if (fs::is_directory(root, ec)) {
    PrDocument pr;
    pr.pr_id = root.filename().string();
    if (pr.pr_id.empty()) pr.pr_id = root.string();
    pr.source_meta.push_back("dir:" + root.string());
    for (fs::recursive_directory_iterator it(root, ec), end; it != end;
         it.increment(ec)) {
      if (ec) throw IoError("cannot walk '" + root.string() + "': " +
                            ec.message());
      if (!it->is_regular_file()) continue;
      std::string rel = fs::relative(it->path(), root).generic_string();
      std::string content = read_file(it->path());
      if (looks_binary(content)) {
        pr.source_meta.push_back("skipped binary: " + rel);
        continue;
      }
      pr.files.push_back({std::move(rel), std::move(content)});
    }
    if (ec) throw IoError("cannot walk '" + root.string() + "': " +
                          ec.message());
    sort_and_check_paths(pr, root.string());
    return pr;
  }
  if (!fs::exists(root))
    throw IoError("PR source '" + source + "' does not exist");
  return pr_document_from_json(read_file(root), source);
}

TriageReport triage(const PrDocument& pr, const Engine& engine,
                    const SuppressionStore& suppressions) {
  const std::set<std::string> snapshot = suppressions.snapshot();
  TriageReport out;
  out.pr_id = pr.pr_id;
  std::set<std::pair<std::string, std::size_t>> seen_reason;
  std::set<std::string> seen_suppressed;

  for (const PrFile& file : pr.files) {
    GuardReport report = engine.scan(file.content, file.path);
    bool downgraded = false;

    for (PolicyDecision& decision : report.decisions) {
      if (decision.action == PolicyAction::Pass) continue;
      std::vector<std::size_t> refs;
      if (decision.mention)
        refs.push_back(*decision.mention);
      else
        refs = decision.combination;

      std::vector<std::string> fps;
      fps.reserve(refs.size());
      bool all_suppressed = !refs.empty();
      for (std::size_t idx : refs) {
        fps.push_back(mention_fingerprint(file.content, report.mentions[idx]));
        if (!snapshot.count(fps.back())) all_suppressed = false;
      }

      if (all_suppressed) {
        decision.action = PolicyAction::Pass;
        decision.rationale += "; suppressed by reviewer feedback";
        downgraded = true;
        for (auto& fp : fps)
          if (seen_suppressed.insert(fp).second)
            out.suppressed.push_back(std::move(fp));
        continue;
      }

      for (std::size_t i = 0; i < refs.size(); ++i) {
        std::size_t idx = refs[i];
        if (!seen_reason.insert({file.path, idx}).second) continue;
        SensitivityLevel level = SensitivityLevel::Level3;
        for (const auto& a : report.assessments)
          if (a.mention == idx) {
            level = a.level;
            break;
          }
        out.flag_reasons.push_back(
            {file.path, idx, level, decision.rule_id, fps[i]});
      }
    }

    if (downgraded) {
      // Re-derive verdict and masked text from the downgraded decisions so
      // the per-file report stays internally consistent.
      GuardReport redone = apply(file.content, std::move(report.mentions),
                                 std::move(report.assessments),
                                 std::move(report.decisions));
      redone.doc_id = report.doc_id;
      redone.timing = report.timing;
      report = std::move(redone);
    }
    out.file_reports.emplace_back(file.path, std::move(report));
  }

  out.flagged = !out.flag_reasons.empty();
  return out;
}

std::string triage_report_to_json(const TriageReport& report) {
  nlohmann::json files = nlohmann::json::array();
  for (const auto& [path, file_report] : report.file_reports)
    files.push_back({{"path", path},
                     {"report", nlohmann::json::parse(
                                    report_to_json(file_report))}});
  nlohmann::json reasons = nlohmann::json::array();
  for (const auto& r : report.flag_reasons)
    reasons.push_back({{"file", r.file},
                       {"mention", r.mention},
                       {"level", static_cast<int>(r.level)},
                       {"rule_id", r.rule_id},
                       {"fingerprint", r.fingerprint}});
  nlohmann::json doc{{"pr_id", report.pr_id},
                     {"files", std::move(files)},
                     {"flagged", report.flagged},
                     {"flag_reasons", std::move(reasons)},
                     {"suppressed", report.suppressed}};
  return doc.dump(2);
}

}  // namespace piiguard
