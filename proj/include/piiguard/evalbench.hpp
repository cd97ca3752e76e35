/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "piiguard/engine.hpp"
#include "piiguard/types.hpp"

namespace piiguard {

struct GoldMention {
  EntityType entity_type = EntityType::Person;
  TextSpan span;
  std::string surface;

  friend bool operator==(const GoldMention&, const GoldMention&) = default;
};

struct AnnotatedRecord {
  std::string record_id;
  std::string text;
  std::vector<GoldMention> gold;

  friend bool operator==(const AnnotatedRecord&,
                         const AnnotatedRecord&) = default;
};

struct PredictedRecord {
  std::string record_id;
  std::vector<GoldMention> mentions;  // surface optional for predictions
};

enum class MatchMode { ExactSpan, Overlap };

struct TypeMetrics {
  std::size_t tp = 0, fp = 0, fn = 0;
  std::size_t support = 0;  // gold mention count
  double precision = 0, recall = 0, f1 = 0;
};

struct MetricsReport {
  MatchMode match_mode = MatchMode::ExactSpan;
  std::map<EntityType, TypeMetrics> per_type;  // types with any gold or pred
  TypeMetrics micro;
  double macro_precision = 0, macro_recall = 0, macro_f1 = 0;
};

// Greedy one-to-one matching per record: exact_span requires identical
// (type, span); overlap requires same type plus span intersection. Records
// in `gold` with no prediction entry count as all-missed; a prediction
// record id absent from `gold` is an argument error. 0/0 ratios are 0.
MetricsReport score(const std::vector<PredictedRecord>& predictions,
                    const std::vector<AnnotatedRecord>& gold, MatchMode mode);

struct LatencyBucket {
  std::string label;  // "<=150", "<=250", ">250"
  std::size_t count = 0;
  double median_us = 0, p95_us = 0, max_us = 0;
};

struct LatencyReport {
  std::size_t corpus_size = 0;
  std::size_t iterations = 0;  // timed scans per document
  std::vector<LatencyBucket> buckets;  // populated buckets only, in order
  StageTiming stage_medians;  // median per-stage cost across documents
};

// Scans each document `iterations` times (three warm-up runs excluded),
// takes the per-document median, and buckets documents by whitespace token
// count. p95 is nearest-rank, so median <= p95 <= max per bucket.
LatencyReport bench_latency(const std::vector<std::string>& corpus,
                            const Engine& engine, std::size_t iterations = 30);

// Container format: one JSON record per line (docs/FORMATS.md).
std::vector<AnnotatedRecord> corpus_from_jsonl(std::string_view text,
                                               const std::string& origin);
std::string corpus_to_jsonl(const std::vector<AnnotatedRecord>& records);
std::vector<PredictedRecord> predictions_from_jsonl(std::string_view text,
                                                    const std::string& origin);
std::string predictions_to_jsonl(const std::vector<PredictedRecord>& records);

std::string metrics_to_json(const MetricsReport& report);
std::string latency_to_json(const LatencyReport& report);

}  // namespace piiguard
