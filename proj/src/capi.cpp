/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "piiguard.h"

#include <cstdlib>
#include <cstring>
#include <ctime>
#include <string>
#include <utility>
#include <vector>

#include "piiguard/corpus.hpp"
#include "piiguard/engine.hpp"
#include "piiguard/errors.hpp"
#include "piiguard/evalbench.hpp"
#include "piiguard/pr_scanner.hpp"
#include "piiguard/report.hpp"
#include "piiguard/suppression.hpp"

struct piiguard_engine {
  piiguard::Engine impl;
};

struct piiguard_suppressions {
  piiguard::SuppressionStore impl;
};

namespace {

thread_local std::string t_last_error;

// Exceptions must not cross the C ABI; every entry point funnels through
// here so each Error subclass maps onto exactly one status code.
template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    t_last_error.clear();
    return PIIGUARD_OK;
  } catch (const piiguard::ArgumentError& e) {
    t_last_error = e.what();
    return PIIGUARD_ERR_ARGUMENT;
  } catch (const piiguard::ParseError& e) {
    t_last_error = e.what();
    return PIIGUARD_ERR_PARSE;
  } catch (const piiguard::ConfigError& e) {
    t_last_error = e.what();
    return PIIGUARD_ERR_CONFIG;
  } catch (const piiguard::IoError& e) {
    t_last_error = e.what();
    return PIIGUARD_ERR_IO;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return PIIGUARD_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown failure";
    return PIIGUARD_ERR_INTERNAL;
  }
}

char* dup_string(std::string_view s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

std::string_view view_of(const char* text, size_t text_len) {
  if (!text) throw piiguard::ArgumentError("text must not be NULL");
  if (text_len == PIIGUARD_NUL_TERMINATED) return text;
  return {text, text_len};
}

void require(const void* p, const char* what) {
  if (!p) throw piiguard::ArgumentError(std::string(what) + " must not be NULL");
}

piiguard::MatchMode parse_mode(const char* match_mode) {
  require(match_mode, "match_mode");
  std::string_view m = match_mode;
  if (m == "exact") return piiguard::MatchMode::ExactSpan;
  if (m == "overlap") return piiguard::MatchMode::Overlap;
  throw piiguard::ArgumentError("match_mode must be 'exact' or 'overlap'");
}

std::string utc_now_iso8601() {
  std::time_t now = std::time(nullptr);
  std::tm parts{};
  gmtime_r(&now, &parts);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &parts);
  return buf;
}

}  // namespace

extern "C" {

const char* piiguard_version(void) { return "0.1.0"; }

const char* piiguard_last_error(void) { return t_last_error.c_str(); }

void piiguard_string_free(char* s) { std::free(s); }

int piiguard_engine_new(const char* config_json, piiguard_engine** out) {
  return guarded([&] {
    require(out, "out");
    piiguard::EngineOptions options;
    if (config_json)
      options = piiguard::Engine::options_from_json(config_json, "config");
    *out = new piiguard_engine{piiguard::Engine(std::move(options))};
  });
}

void piiguard_engine_free(piiguard_engine* engine) { delete engine; }

int piiguard_scan(const piiguard_engine* engine, const char* text,
                  size_t text_len, const char* doc_id, char** report_json,
                  int* verdict) {
  return guarded([&] {
    require(engine, "engine");
    require(report_json, "report_json");
    piiguard::GuardReport report =
        engine->impl.scan(view_of(text, text_len), doc_id ? doc_id : "doc");
    *report_json = dup_string(piiguard::report_to_json(report, 2));
    if (verdict) *verdict = static_cast<int>(report.verdict);
  });
}

int piiguard_mask(const piiguard_engine* engine, const char* text,
                  size_t text_len, char** masked_text, int* verdict) {
  return guarded([&] {
    require(engine, "engine");
    require(masked_text, "masked_text");
    piiguard::GuardReport report =
        engine->impl.scan(view_of(text, text_len), "mask");
    *masked_text =
        report.masked_text ? dup_string(*report.masked_text) : nullptr;
    if (verdict) *verdict = static_cast<int>(report.verdict);
  });
}

int piiguard_fingerprint(const char* text, size_t text_len, size_t span_start,
                         size_t span_end, const char* entity_type,
                         char** fingerprint) {
  return guarded([&] {
    require(fingerprint, "fingerprint");
    require(entity_type, "entity_type");
    std::string_view doc = view_of(text, text_len);
    auto type = piiguard::entity_type_from(entity_type);
    if (!type)
      throw piiguard::ArgumentError(std::string("unknown entity type '") +
                                    entity_type + "'");
    if (span_start > span_end || span_end > doc.size())
      throw piiguard::ArgumentError("span is out of bounds");
    piiguard::EntityMention mention;
    mention.span = {span_start, span_end};
    mention.entity_type = *type;
    mention.surface = std::string(doc.substr(span_start, span_end - span_start));
    *fingerprint = dup_string(piiguard::mention_fingerprint(doc, mention));
  });
}

int piiguard_suppressions_open(const char* path, piiguard_suppressions** out) {
  return guarded([&] {
    require(out, "out");
    *out = path ? new piiguard_suppressions{piiguard::SuppressionStore(path)}
                : new piiguard_suppressions{};
  });
}

void piiguard_suppressions_free(piiguard_suppressions* store) { delete store; }

int piiguard_suppressions_add(piiguard_suppressions* store,
                              const char* fingerprint, const char* reviewer,
                              const char* timestamp, int* added) {
  return guarded([&] {
    require(store, "store");
    require(fingerprint, "fingerprint");
    require(reviewer, "reviewer");
    piiguard::SuppressionEntry entry;
    entry.fingerprint = fingerprint;
    entry.reviewer = reviewer;
    entry.timestamp = timestamp ? timestamp : utc_now_iso8601();
    bool fresh = store->impl.record_feedback(entry);
    if (added) *added = fresh ? 1 : 0;
  });
}

int piiguard_suppressions_contains(const piiguard_suppressions* store,
                                   const char* fingerprint, int* found) {
  return guarded([&] {
    require(store, "store");
    require(fingerprint, "fingerprint");
    require(found, "found");
    *found = store->impl.contains(fingerprint) ? 1 : 0;
  });
}

int piiguard_suppressions_size(const piiguard_suppressions* store,
                               size_t* size) {
  return guarded([&] {
    require(store, "store");
    require(size, "size");
    *size = store->impl.size();
  });
}

int piiguard_pr_ingest(const char* source_path, char** pr_json) {
  return guarded([&] {
    require(source_path, "source_path");
    require(pr_json, "pr_json");
    *pr_json = dup_string(piiguard::pr_document_to_json(
        piiguard::ingest(source_path)));
  });
}

int piiguard_triage(const piiguard_engine* engine,
                    const piiguard_suppressions* suppressions,
                    const char* pr_json, char** triage_json, int* flagged) {
  return guarded([&] {
    require(engine, "engine");
    require(pr_json, "pr_json");
    require(triage_json, "triage_json");
    piiguard::PrDocument pr = piiguard::pr_document_from_json(pr_json, "pr");
    static const piiguard::SuppressionStore kEmpty;
    const piiguard::SuppressionStore& store =
        suppressions ? suppressions->impl : kEmpty;
    piiguard::TriageReport report = piiguard::triage(pr, engine->impl, store);
    *triage_json = dup_string(piiguard::triage_report_to_json(report));
    if (flagged) *flagged = report.flagged ? 1 : 0;
  });
}

int piiguard_eval(const piiguard_engine* engine, const char* corpus_jsonl,
                  const char* match_mode, char** metrics_json) {
  return guarded([&] {
    require(engine, "engine");
    require(corpus_jsonl, "corpus_jsonl");
    require(metrics_json, "metrics_json");
    piiguard::MatchMode mode = parse_mode(match_mode);
    auto gold = piiguard::corpus_from_jsonl(corpus_jsonl, "corpus");
    std::vector<piiguard::PredictedRecord> predictions;
    predictions.reserve(gold.size());
    for (const auto& record : gold) {
      piiguard::PredictedRecord pred;
      pred.record_id = record.record_id;
      piiguard::GuardReport report =
          engine->impl.scan(record.text, record.record_id);
      for (const auto& m : report.mentions)
        pred.mentions.push_back({m.entity_type, m.span, m.surface});
      predictions.push_back(std::move(pred));
    }
    *metrics_json = dup_string(
        piiguard::metrics_to_json(piiguard::score(predictions, gold, mode)));
  });
}

int piiguard_eval_predictions(const char* corpus_jsonl,
                              const char* predictions_jsonl,
                              const char* match_mode, char** metrics_json) {
  return guarded([&] {
    require(corpus_jsonl, "corpus_jsonl");
    require(predictions_jsonl, "predictions_jsonl");
    require(metrics_json, "metrics_json");
    piiguard::MatchMode mode = parse_mode(match_mode);
    auto gold = piiguard::corpus_from_jsonl(corpus_jsonl, "corpus");
    auto predictions =
        piiguard::predictions_from_jsonl(predictions_jsonl, "predictions");
    *metrics_json = dup_string(
        piiguard::metrics_to_json(piiguard::score(predictions, gold, mode)));
  });
}

int piiguard_bench(const piiguard_engine* engine, const char* corpus_jsonl,
                   size_t iterations, char** latency_json) {
  return guarded([&] {
    require(engine, "engine");
    require(corpus_jsonl, "corpus_jsonl");
    require(latency_json, "latency_json");
    auto gold = piiguard::corpus_from_jsonl(corpus_jsonl, "corpus");
    std::vector<std::string> texts;
    texts.reserve(gold.size());
    for (auto& record : gold) texts.push_back(std::move(record.text));
    *latency_json = dup_string(piiguard::latency_to_json(
        piiguard::bench_latency(texts, engine->impl, iterations)));
  });
}

int piiguard_generate_corpus(uint64_t seed, const char* spec_json,
                             char** corpus_jsonl) {
  return guarded([&] {
    require(corpus_jsonl, "corpus_jsonl");
    piiguard::CorpusSpec spec =
        spec_json ? piiguard::corpus_spec_from_json(spec_json, "spec")
                  : piiguard::default_corpus_spec();
    *corpus_jsonl = dup_string(
        piiguard::corpus_to_jsonl(piiguard::generate_corpus(seed, spec)));
  });
}

}  // extern "C"
