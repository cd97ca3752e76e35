/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "piiguard/evalbench.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "piiguard/errors.hpp"
#include "piiguard/text.hpp"

namespace piiguard {

namespace {

void finish(TypeMetrics& m) {
  m.support = m.tp + m.fn;
  m.precision = (m.tp + m.fp) ? double(m.tp) / double(m.tp + m.fp) : 0.0;
  m.recall = (m.tp + m.fn) ? double(m.tp) / double(m.tp + m.fn) : 0.0;
  m.f1 = (m.precision + m.recall > 0)
             ? 2 * m.precision * m.recall / (m.precision + m.recall)
             : 0.0;
}

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  std::size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

// Nearest-rank percentile over a sorted sample: guarantees the result is an
// observed value, so median <= p95 <= max holds structurally.
double nearest_rank(const std::vector<double>& sorted, double pct) {
  std::size_t rank = static_cast<std::size_t>(
      std::ceil(pct / 100.0 * double(sorted.size())));
  if (rank == 0) rank = 1;
  return sorted[rank - 1];
}

nlohmann::json metrics_entry(const TypeMetrics& m) {
  return {{"precision", m.precision}, {"recall", m.recall}, {"f1", m.f1},
          {"support", m.support},     {"tp", m.tp},         {"fp", m.fp},
          {"fn", m.fn}};
}

}  // namespace

MetricsReport score(const std::vector<PredictedRecord>& predictions,
                    const std::vector<AnnotatedRecord>& gold, MatchMode mode) {
  std::map<std::string, const AnnotatedRecord*> by_id;
  for (const auto& r : gold) by_id[r.record_id] = &r;
  if (by_id.size() != gold.size())
    throw ArgumentError("duplicate record ids in gold corpus");

  std::map<std::string, const PredictedRecord*> pred_by_id;
  for (const auto& p : predictions) {
    if (!by_id.count(p.record_id))
      throw ArgumentError("prediction for unknown record id '" + p.record_id +
                          "'");
    if (!pred_by_id.emplace(p.record_id, &p).second)
      throw ArgumentError("duplicate prediction record id '" + p.record_id +
                          "'");
  }

  MetricsReport report;
  report.match_mode = mode;
  static const std::vector<GoldMention> kNone;

  for (const auto& record : gold) {
    auto it = pred_by_id.find(record.record_id);
    const std::vector<GoldMention>& preds =
        it == pred_by_id.end() ? kNone : it->second->mentions;

    std::vector<bool> gold_used(record.gold.size(), false);
    for (const auto& pred : preds) {
      bool matched = false;
      for (std::size_t g = 0; g < record.gold.size(); ++g) {
        if (gold_used[g]) continue;
        const GoldMention& gm = record.gold[g];
        if (gm.entity_type != pred.entity_type) continue;
        bool hit = mode == MatchMode::ExactSpan ? gm.span == pred.span
                                                : gm.span.overlaps(pred.span);
        if (!hit) continue;
        gold_used[g] = true;
        matched = true;
        break;
      }
      auto& m = report.per_type[pred.entity_type];
      matched ? ++m.tp : ++m.fp;
    }
    for (std::size_t g = 0; g < record.gold.size(); ++g)
      if (!gold_used[g]) ++report.per_type[record.gold[g].entity_type].fn;
  }

  double psum = 0, rsum = 0, fsum = 0;
  for (auto& [type, m] : report.per_type) {
    finish(m);
    report.micro.tp += m.tp;
    report.micro.fp += m.fp;
    report.micro.fn += m.fn;
    psum += m.precision;
    rsum += m.recall;
    fsum += m.f1;
  }
  finish(report.micro);
  if (!report.per_type.empty()) {
    double n = double(report.per_type.size());
    report.macro_precision = psum / n;
    report.macro_recall = rsum / n;
    report.macro_f1 = fsum / n;
  }
  return report;
}

LatencyReport bench_latency(const std::vector<std::string>& corpus,
                            const Engine& engine, std::size_t iterations) {
  if (corpus.empty()) throw ArgumentError("bench corpus is empty");
  if (iterations < 30) iterations = 30;

  struct DocResult {
    std::size_t tokens;
    double median_total;
    StageTiming median_stages;
  };
  std::vector<DocResult> docs;
  docs.reserve(corpus.size());

  for (const std::string& doc : corpus) {
    for (int w = 0; w < 3; ++w) (void)engine.scan(doc, "warmup");
    std::vector<double> total(iterations);
    std::vector<double> chunk(iterations), detect(iterations),
        resolve(iterations), assess(iterations), decide(iterations),
        redact(iterations);
    for (std::size_t i = 0; i < iterations; ++i) {
      GuardReport r = engine.scan(doc, "bench");
      total[i] = r.timing.total_us;
      chunk[i] = r.timing.chunk_us;
      detect[i] = r.timing.detect_us;
      resolve[i] = r.timing.resolve_us;
      assess[i] = r.timing.assess_us;
      decide[i] = r.timing.decide_us;
      redact[i] = r.timing.redact_us;
    }
    DocResult res;
    res.tokens = text::count_tokens(doc);
    res.median_total = median_of(total);
    res.median_stages.chunk_us = median_of(chunk);
    res.median_stages.detect_us = median_of(detect);
    res.median_stages.resolve_us = median_of(resolve);
    res.median_stages.assess_us = median_of(assess);
    res.median_stages.decide_us = median_of(decide);
    res.median_stages.redact_us = median_of(redact);
    res.median_stages.total_us = res.median_total;
    docs.push_back(res);
  }

  LatencyReport report;
  report.corpus_size = corpus.size();
  report.iterations = iterations;

  struct Bucket {
    const char* label;
    std::vector<double> samples;
  };
  Bucket buckets[3] = {{"<=150", {}}, {"<=250", {}}, {">250", {}}};
  for (const auto& d : docs) {
    int b = d.tokens <= 150 ? 0 : d.tokens <= 250 ? 1 : 2;
    buckets[b].samples.push_back(d.median_total);
  }
  for (auto& b : buckets) {
    if (b.samples.empty()) continue;
    std::sort(b.samples.begin(), b.samples.end());
    LatencyBucket out;
    out.label = b.label;
    out.count = b.samples.size();
    out.median_us = nearest_rank(b.samples, 50.0);
    out.p95_us = nearest_rank(b.samples, 95.0);
    out.max_us = b.samples.back();
    report.buckets.push_back(std::move(out));
  }

  auto stage_median = [&docs](double StageTiming::* field) {
    std::vector<double> v;
    v.reserve(docs.size());
    for (const auto& d : docs) v.push_back(d.median_stages.*field);
    return median_of(std::move(v));
  };
  report.stage_medians.chunk_us = stage_median(&StageTiming::chunk_us);
  report.stage_medians.detect_us = stage_median(&StageTiming::detect_us);
  report.stage_medians.resolve_us = stage_median(&StageTiming::resolve_us);
  report.stage_medians.assess_us = stage_median(&StageTiming::assess_us);
  report.stage_medians.decide_us = stage_median(&StageTiming::decide_us);
  report.stage_medians.redact_us = stage_median(&StageTiming::redact_us);
  report.stage_medians.total_us = stage_median(&StageTiming::total_us);
  return report;
}

namespace {

GoldMention gold_from_json(const nlohmann::json& g, const std::string& origin,
                           std::size_t lineno) {
  GoldMention gm;
  auto type = entity_type_from(g.value("entity_type", ""));
  if (!type)
    throw ParseError(origin + ": unknown entity_type '" +
                         g.value("entity_type", "") + "'",
                     lineno);
  gm.entity_type = *type;
  if (!g.contains("span") || !g["span"].contains("start") ||
      !g["span"].contains("end"))
    throw ParseError(origin + ": mention without span", lineno);
  gm.span.start = g["span"]["start"].get<std::size_t>();
  gm.span.end = g["span"]["end"].get<std::size_t>();
  gm.surface = g.value("surface", "");
  return gm;
}

template <typename Fn>
void for_each_jsonl(std::string_view text, const std::string& origin, Fn fn) {
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(origin + ": " + e.what(), lineno);
    }
    fn(doc, lineno);
  }
}

}  // namespace

std::vector<AnnotatedRecord> corpus_from_jsonl(std::string_view text,
                                               const std::string& origin) {
  std::vector<AnnotatedRecord> out;
  for_each_jsonl(text, origin, [&](const nlohmann::json& doc,
                                   std::size_t lineno) {
    AnnotatedRecord rec;
    if (!doc.contains("record_id") || !doc.contains("text"))
      throw ParseError(origin + ": record needs record_id and text", lineno);
    rec.record_id = doc["record_id"].get<std::string>();
    rec.text = doc["text"].get<std::string>();
    for (const auto& g : doc.value("gold", nlohmann::json::array()))
      rec.gold.push_back(gold_from_json(g, origin, lineno));
    for (const auto& gm : rec.gold) {
      if (gm.span.end > rec.text.size() || gm.span.start > gm.span.end)
        throw ParseError(origin + ": gold span out of bounds in record '" +
                             rec.record_id + "'",
                         lineno);
      if (!gm.surface.empty() &&
          rec.text.substr(gm.span.start, gm.span.length()) != gm.surface)
        throw ParseError(origin + ": gold surface mismatch in record '" +
                             rec.record_id + "'",
                         lineno);
    }
    out.push_back(std::move(rec));
  });
  return out;
}

std::string corpus_to_jsonl(const std::vector<AnnotatedRecord>& records) {
  std::ostringstream out;
  for (const auto& rec : records) {
    nlohmann::json gold = nlohmann::json::array();
    for (const auto& g : rec.gold)
      gold.push_back({{"entity_type", to_string(g.entity_type)},
                      {"span", {{"start", g.span.start}, {"end", g.span.end}}},
                      {"surface", g.surface}});
    nlohmann::json doc{{"record_id", rec.record_id},
                       {"text", rec.text},
                       {"gold", std::move(gold)}};
    out << doc.dump() << '\n';
  }
  return std::move(out).str();
}

std::vector<PredictedRecord> predictions_from_jsonl(std::string_view text,
                                                    const std::string& origin) {
  std::vector<PredictedRecord> out;
  for_each_jsonl(text, origin,
                 [&](const nlohmann::json& doc, std::size_t lineno) {
                   PredictedRecord rec;
                   if (!doc.contains("record_id"))
                     throw ParseError(origin + ": prediction needs record_id",
                                      lineno);
                   rec.record_id = doc["record_id"].get<std::string>();
                   for (const auto& g :
                        doc.value("mentions", nlohmann::json::array()))
                     rec.mentions.push_back(gold_from_json(g, origin, lineno));
                   out.push_back(std::move(rec));
                 });
  return out;
}

std::string predictions_to_jsonl(const std::vector<PredictedRecord>& records) {
  std::ostringstream out;
  for (const auto& rec : records) {
    nlohmann::json mentions = nlohmann::json::array();
    for (const auto& g : rec.mentions) {
      nlohmann::json m{{"entity_type", to_string(g.entity_type)},
                       {"span", {{"start", g.span.start}, {"end", g.span.end}}}};
      if (!g.surface.empty()) m["surface"] = g.surface;
      mentions.push_back(std::move(m));
    }
    nlohmann::json doc{{"record_id", rec.record_id},
                       {"mentions", std::move(mentions)}};
    out << doc.dump() << '\n';
  }
  return std::move(out).str();
}

std::string metrics_to_json(const MetricsReport& report) {
  nlohmann::json per_type = nlohmann::json::object();
  for (const auto& [type, m] : report.per_type)
    per_type[std::string(to_string(type))] = metrics_entry(m);
  nlohmann::json doc{
      {"match_mode",
       report.match_mode == MatchMode::ExactSpan ? "exact_span" : "overlap"},
      {"per_type", std::move(per_type)},
      {"micro", metrics_entry(report.micro)},
      {"macro",
       {{"precision", report.macro_precision},
        {"recall", report.macro_recall},
        {"f1", report.macro_f1}}}};
  return doc.dump(2);
}

std::string latency_to_json(const LatencyReport& report) {
  nlohmann::json buckets = nlohmann::json::array();
  for (const auto& b : report.buckets)
    buckets.push_back({{"tokens", b.label},
                       {"count", b.count},
                       {"median_us", b.median_us},
                       {"p95_us", b.p95_us},
                       {"max_us", b.max_us}});
  const StageTiming& s = report.stage_medians;
  nlohmann::json doc{{"corpus_size", report.corpus_size},
                     {"iterations", report.iterations},
                     {"buckets", std::move(buckets)},
                     {"stage_medians_us",
                      {{"chunk", s.chunk_us},
                       {"detect", s.detect_us},
                       {"resolve", s.resolve_us},
                       {"assess", s.assess_us},
                       {"decide", s.decide_us},
                       {"redact", s.redact_us},
                       {"total", s.total_us}}}};
  return doc.dump(2);
}

}  // namespace piiguard
