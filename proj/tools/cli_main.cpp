/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

// piiguard command line front end. Deliberately a pure client of the C API
// in piiguard.h: anything it can do, any other binding can do too.
//
// Exit codes: 0 clean/pass, 2 violations or flagged PR, 3 blocked document,
// 64 usage/config error, 70 internal error, 74 I/O error.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "piiguard.h"

namespace {

constexpr int kExitViolations = 2;
constexpr int kExitBlocked = 3;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;
constexpr int kExitIo = 74;

int exit_code_for(int status) {
  switch (status) {
    case PIIGUARD_OK:
      return 0;
    case PIIGUARD_ERR_ARGUMENT:
    case PIIGUARD_ERR_PARSE:
    case PIIGUARD_ERR_CONFIG:
      return kExitUsage;
    case PIIGUARD_ERR_IO:
      return kExitIo;
    default:
      return kExitInternal;
  }
}

[[nodiscard]] int fail(int status) {
  std::cerr << "piiguard: " << piiguard_last_error() << "\n";
  return exit_code_for(status);
}

using CStr = std::unique_ptr<char, decltype(&piiguard_string_free)>;
CStr wrap(char* s) { return {s, &piiguard_string_free}; }

std::optional<std::string> read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buf.str();
}

bool write_output(const std::string& path, std::string_view content,
                  bool trailing_newline = true) {
  if (path == "-") {
    std::cout << content;
    if (trailing_newline && !content.ends_with('\n')) std::cout << "\n";
    return static_cast<bool>(std::cout.flush());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  if (trailing_newline && !content.ends_with('\n')) out << "\n";
  return static_cast<bool>(out.flush());
}

const char* env(const char* name) {
  const char* v = std::getenv(name);
  return (v && *v) ? v : nullptr;
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

// Engine options shared by the scanning subcommands. Precedence:
// command-line flags > environment > config file > built-in defaults.
struct EngineFlags {
  std::string config_file;
  std::string template_id;
  std::string locales;
  std::string types;
  double entropy = -1.0;
  std::string patterns_dir, gazetteer_dir, keywords_dir;

  void attach(CLI::App* cmd) {
    cmd->add_option("--config", config_file,
                    "Engine config JSON (env PIIGUARD_CONFIG)");
    cmd->add_option("--template", template_id,
                    "Policy template id or file (env PIIGUARD_TEMPLATE)");
    cmd->add_option("--locales", locales,
                    "Comma-separated locale tags (env PIIGUARD_LOCALES)");
    cmd->add_option("--types", types, "Comma-separated entity types to enable");
    cmd->add_option("--entropy-threshold", entropy,
                    "Credential entropy threshold, bits per char");
    cmd->add_option("--patterns-dir", patterns_dir, "Pattern file directory");
    cmd->add_option("--gazetteer-dir", gazetteer_dir, "Gazetteer directory");
    cmd->add_option("--keywords-dir", keywords_dir, "Keyword table directory");
  }

  // Returns the merged config as JSON, or nullopt for library defaults.
  // Sets *error and returns nullopt on unreadable/invalid config files.
  std::optional<std::string> merge(std::string* error) const {
    nlohmann::json cfg = nlohmann::json::object();
    std::string file = config_file;
    if (file.empty())
      if (const char* v = env("PIIGUARD_CONFIG")) file = v;
    if (!file.empty()) {
      auto text = read_input(file);
      if (!text) {
        *error = "cannot read config file '" + file + "'";
        return std::nullopt;
      }
      cfg = nlohmann::json::parse(*text, nullptr, false);
      if (cfg.is_discarded() || !cfg.is_object()) {
        *error = "config file '" + file + "' is not a JSON object";
        return std::nullopt;
      }
    }
    if (const char* v = env("PIIGUARD_TEMPLATE")) cfg["template"] = v;
    if (const char* v = env("PIIGUARD_LOCALES")) cfg["locales"] = split_csv(v);
    if (!template_id.empty()) cfg["template"] = template_id;
    if (!locales.empty()) cfg["locales"] = split_csv(locales);
    if (!types.empty()) cfg["types"] = split_csv(types);
    if (entropy > 0) cfg["entropy_threshold"] = entropy;
    if (!patterns_dir.empty()) cfg["patterns_dir"] = patterns_dir;
    if (!gazetteer_dir.empty()) cfg["gazetteer_dir"] = gazetteer_dir;
    if (!keywords_dir.empty()) cfg["keywords_dir"] = keywords_dir;
    if (cfg.empty()) return std::nullopt;
    return cfg.dump();
  }
};

using Engine = std::unique_ptr<piiguard_engine, decltype(&piiguard_engine_free)>;

// Builds the engine or prints an error and stores the exit code in *rc.
Engine make_engine(const EngineFlags& flags, int* rc) {
  std::string error;
  auto cfg = flags.merge(&error);
  if (!error.empty()) {
    std::cerr << "piiguard: " << error << "\n";
    *rc = kExitUsage;
    return {nullptr, &piiguard_engine_free};
  }
  piiguard_engine* engine = nullptr;
  int status = piiguard_engine_new(cfg ? cfg->c_str() : nullptr, &engine);
  if (status != PIIGUARD_OK) {
    *rc = fail(status);
    return {nullptr, &piiguard_engine_free};
  }
  *rc = 0;
  return {engine, &piiguard_engine_free};
}

std::string suppressions_path(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* v = env("PIIGUARD_SUPPRESSIONS")) return v;
  return {};
}

using Store =
    std::unique_ptr<piiguard_suppressions, decltype(&piiguard_suppressions_free)>;

Store open_store(const std::string& path, int* rc) {
  piiguard_suppressions* store = nullptr;
  int status =
      piiguard_suppressions_open(path.empty() ? nullptr : path.c_str(), &store);
  if (status != PIIGUARD_OK) {
    *rc = fail(status);
    return {nullptr, &piiguard_suppressions_free};
  }
  *rc = 0;
  return {store, &piiguard_suppressions_free};
}

int run_scan(const EngineFlags& flags, const std::string& file,
             std::string doc_id, const std::string& report_path) {
  int rc = 0;
  Engine engine = make_engine(flags, &rc);
  if (!engine) return rc;
  auto text = read_input(file);
  if (!text) {
    std::cerr << "piiguard: cannot read '" << file << "'\n";
    return kExitIo;
  }
  if (doc_id.empty()) doc_id = file == "-" ? "stdin" : file;
  char* report = nullptr;
  int verdict = PIIGUARD_VERDICT_PASS;
  int status = piiguard_scan(engine.get(), text->data(), text->size(),
                             doc_id.c_str(), &report, &verdict);
  if (status != PIIGUARD_OK) return fail(status);
  CStr owned = wrap(report);
  if (!write_output(report_path, owned.get())) {
    std::cerr << "piiguard: cannot write '" << report_path << "'\n";
    return kExitIo;
  }
  if (verdict == PIIGUARD_VERDICT_BLOCKED) return kExitBlocked;
  return verdict == PIIGUARD_VERDICT_MASKED ? kExitViolations : 0;
}

int run_mask(const EngineFlags& flags, const std::string& file,
             const std::string& output_path) {
  int rc = 0;
  Engine engine = make_engine(flags, &rc);
  if (!engine) return rc;
  auto text = read_input(file);
  if (!text) {
    std::cerr << "piiguard: cannot read '" << file << "'\n";
    return kExitIo;
  }
  char* masked = nullptr;
  int verdict = PIIGUARD_VERDICT_PASS;
  int status = piiguard_mask(engine.get(), text->data(), text->size(), &masked,
                             &verdict);
  if (status != PIIGUARD_OK) return fail(status);
  CStr owned = wrap(masked);
  if (verdict == PIIGUARD_VERDICT_BLOCKED) {
    std::cerr << "piiguard: document blocked by policy; no output written\n";
    return kExitBlocked;
  }
  if (!write_output(output_path, owned.get(), /*trailing_newline=*/false)) {
    std::cerr << "piiguard: cannot write '" << output_path << "'\n";
    return kExitIo;
  }
  return 0;
}

int run_triage(const EngineFlags& flags, const std::string& source,
               const std::string& suppressions_flag,
               const std::string& report_path) {
  int rc = 0;
  Engine engine = make_engine(flags, &rc);
  if (!engine) return rc;
  char* pr_json = nullptr;
  int status = piiguard_pr_ingest(source.c_str(), &pr_json);
  if (status != PIIGUARD_OK) return fail(status);
  CStr pr = wrap(pr_json);

  std::string store_path = suppressions_path(suppressions_flag);
  Store store{nullptr, &piiguard_suppressions_free};
  if (!store_path.empty()) {
    store = open_store(store_path, &rc);
    if (!store) return rc;
  }

  char* triage_json = nullptr;
  int flagged = 0;
  status = piiguard_triage(engine.get(), store.get(), pr.get(), &triage_json,
                           &flagged);
  if (status != PIIGUARD_OK) return fail(status);
  CStr owned = wrap(triage_json);
  if (!write_output(report_path, owned.get())) {
    std::cerr << "piiguard: cannot write '" << report_path << "'\n";
    return kExitIo;
  }
  return flagged ? kExitViolations : 0;
}

int run_feedback_add(const std::string& suppressions_flag,
                     const std::string& fingerprint,
                     const std::string& reviewer) {
  std::string store_path = suppressions_path(suppressions_flag);
  if (store_path.empty()) {
    std::cerr << "piiguard: feedback needs --suppressions or "
                 "PIIGUARD_SUPPRESSIONS\n";
    return kExitUsage;
  }
  int rc = 0;
  Store store = open_store(store_path, &rc);
  if (!store) return rc;
  int added = 0;
  int status = piiguard_suppressions_add(store.get(), fingerprint.c_str(),
                                         reviewer.c_str(), nullptr, &added);
  if (status != PIIGUARD_OK) return fail(status);
  nlohmann::json out{{"fingerprint", fingerprint},
                     {"reviewer", reviewer},
                     {"added", added == 1}};
  std::cout << out.dump() << "\n";
  return 0;
}

int run_eval(const EngineFlags& flags, const std::string& corpus_path,
             const std::string& predictions_path, const std::string& mode,
             const std::string& report_path) {
  auto corpus = read_input(corpus_path);
  if (!corpus) {
    std::cerr << "piiguard: cannot read '" << corpus_path << "'\n";
    return kExitIo;
  }
  char* metrics = nullptr;
  int status;
  if (!predictions_path.empty()) {
    auto predictions = read_input(predictions_path);
    if (!predictions) {
      std::cerr << "piiguard: cannot read '" << predictions_path << "'\n";
      return kExitIo;
    }
    status = piiguard_eval_predictions(corpus->c_str(), predictions->c_str(),
                                       mode.c_str(), &metrics);
  } else {
    int rc = 0;
    Engine engine = make_engine(flags, &rc);
    if (!engine) return rc;
    status =
        piiguard_eval(engine.get(), corpus->c_str(), mode.c_str(), &metrics);
  }
  if (status != PIIGUARD_OK) return fail(status);
  CStr owned = wrap(metrics);
  if (!write_output(report_path, owned.get())) {
    std::cerr << "piiguard: cannot write '" << report_path << "'\n";
    return kExitIo;
  }
  return 0;
}

int run_bench(const EngineFlags& flags, const std::string& corpus_path,
              std::size_t iterations, const std::string& report_path) {
  int rc = 0;
  Engine engine = make_engine(flags, &rc);
  if (!engine) return rc;
  auto corpus = read_input(corpus_path);
  if (!corpus) {
    std::cerr << "piiguard: cannot read '" << corpus_path << "'\n";
    return kExitIo;
  }
  char* latency = nullptr;
  int status =
      piiguard_bench(engine.get(), corpus->c_str(), iterations, &latency);
  if (status != PIIGUARD_OK) return fail(status);
  CStr owned = wrap(latency);
  if (!write_output(report_path, owned.get())) {
    std::cerr << "piiguard: cannot write '" << report_path << "'\n";
    return kExitIo;
  }
  return 0;
}

int run_gen_corpus(std::uint64_t seed, const std::string& spec_path,
                   const std::string& output_path) {
  std::optional<std::string> spec;
  if (!spec_path.empty()) {
    spec = read_input(spec_path);
    if (!spec) {
      std::cerr << "piiguard: cannot read '" << spec_path << "'\n";
      return kExitIo;
    }
  }
  char* corpus = nullptr;
  int status =
      piiguard_generate_corpus(seed, spec ? spec->c_str() : nullptr, &corpus);
  if (status != PIIGUARD_OK) return fail(status);
  CStr owned = wrap(corpus);
  if (!write_output(output_path, owned.get(), /*trailing_newline=*/false)) {
    std::cerr << "piiguard: cannot write '" << output_path << "'\n";
    return kExitIo;
  }
  return 0;
}

// Framed request/response loop over stdin/stdout: 4-byte big-endian length,
// then a JSON request {"op": "scan"|"mask", "text": ..., "doc_id": ...}.
// A bad request produces an error frame and the loop continues; a truncated
// frame is fatal because the stream can no longer be resynchronized.
constexpr std::size_t kMaxFrame = std::size_t{1} << 26;  // 64 MiB

bool read_exact(std::FILE* in, unsigned char* buf, std::size_t n,
                bool* clean_eof) {
  std::size_t got = std::fread(buf, 1, n, in);
  if (clean_eof) *clean_eof = got == 0 && std::feof(in);
  return got == n;
}

bool write_frame(std::FILE* out, std::string_view payload) {
  unsigned char header[4] = {
      static_cast<unsigned char>((payload.size() >> 24) & 0xff),
      static_cast<unsigned char>((payload.size() >> 16) & 0xff),
      static_cast<unsigned char>((payload.size() >> 8) & 0xff),
      static_cast<unsigned char>(payload.size() & 0xff)};
  if (std::fwrite(header, 1, 4, out) != 4) return false;
  if (std::fwrite(payload.data(), 1, payload.size(), out) != payload.size())
    return false;
  return std::fflush(out) == 0;
}

std::string error_payload(int status, const std::string& message) {
  return nlohmann::json{{"ok", false},
                        {"error", {{"code", status}, {"message", message}}}}
      .dump();
}

int run_serve(const EngineFlags& flags) {
  int rc = 0;
  Engine engine = make_engine(flags, &rc);
  if (!engine) return rc;

  std::FILE* in = stdin;
  std::FILE* out = stdout;
  while (true) {
    unsigned char header[4];
    bool clean_eof = false;
    if (!read_exact(in, header, 4, &clean_eof)) {
      if (clean_eof) return 0;
      std::cerr << "piiguard: truncated frame header\n";
      return kExitIo;
    }
    std::size_t len = (std::size_t{header[0]} << 24) |
                      (std::size_t{header[1]} << 16) |
                      (std::size_t{header[2]} << 8) | std::size_t{header[3]};
    if (len > kMaxFrame) {
      std::cerr << "piiguard: oversized frame (" << len << " bytes)\n";
      return kExitIo;
    }
    std::string payload(len, '\0');
    if (len > 0 && !read_exact(in, reinterpret_cast<unsigned char*>(payload.data()),
                               len, nullptr)) {
      std::cerr << "piiguard: truncated frame body\n";
      return kExitIo;
    }

    nlohmann::json request = nlohmann::json::parse(payload, nullptr, false);
    std::string response;
    if (!request.is_object() || !request.contains("op") ||
        !request["op"].is_string() || !request.contains("text") ||
        !request["text"].is_string()) {
      response = error_payload(PIIGUARD_ERR_PARSE,
                               "request must be {\"op\", \"text\", ...}");
    } else {
      const std::string op = request["op"];
      const std::string text = request["text"];
      const std::string doc_id = request.value("doc_id", "frame");
      if (op == "scan") {
        char* report = nullptr;
        int verdict = PIIGUARD_VERDICT_PASS;
        int status = piiguard_scan(engine.get(), text.data(), text.size(),
                                   doc_id.c_str(), &report, &verdict);
        if (status == PIIGUARD_OK) {
          CStr owned = wrap(report);
          response = nlohmann::json{{"ok", true},
                                    {"verdict", verdict},
                                    {"report", nlohmann::json::parse(owned.get())}}
                         .dump();
        } else {
          response = error_payload(status, piiguard_last_error());
        }
      } else if (op == "mask") {
        char* masked = nullptr;
        int verdict = PIIGUARD_VERDICT_PASS;
        int status = piiguard_mask(engine.get(), text.data(), text.size(),
                                   &masked, &verdict);
        if (status == PIIGUARD_OK) {
          CStr owned = wrap(masked);
          nlohmann::json body{{"ok", true}, {"verdict", verdict}};
          if (owned)
            body["masked_text"] = std::string(owned.get());
          else
            body["masked_text"] = nullptr;
          response = body.dump();
        } else {
          response = error_payload(status, piiguard_last_error());
        }
      } else {
        response =
            error_payload(PIIGUARD_ERR_ARGUMENT, "unknown op '" + op + "'");
      }
    }
    if (!write_frame(out, response)) {
      std::cerr << "piiguard: cannot write response frame\n";
      return kExitIo;
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PII guardrail: detect, score, and redact sensitive data"};
  app.set_version_flag("--version", std::string(piiguard_version()));
  app.require_subcommand(1);

  EngineFlags flags;

  auto* scan = app.add_subcommand("scan", "Scan a document and emit a report");
  std::string scan_file, scan_doc_id, scan_report = "-";
  scan->add_option("file", scan_file, "Input file, or - for stdin")->required();
  scan->add_option("--doc-id", scan_doc_id, "Document id for the report");
  scan->add_option("--report", scan_report, "Report destination (default -)");
  flags.attach(scan);

  auto* mask = app.add_subcommand("mask", "Emit the redacted document");
  std::string mask_file, mask_output = "-";
  mask->add_option("file", mask_file, "Input file, or - for stdin")->required();
  mask->add_option("--output", mask_output, "Output destination (default -)");
  flags.attach(mask);

  auto* triage =
      app.add_subcommand("triage-pr", "Scan a PR export or directory");
  std::string triage_source, triage_store, triage_report = "-";
  triage->add_option("source", triage_source, "PR export JSON or directory")
      ->required();
  triage->add_option("--suppressions", triage_store,
                     "Suppression store (env PIIGUARD_SUPPRESSIONS)");
  triage->add_option("--report", triage_report, "Report destination");
  flags.attach(triage);

  auto* feedback =
      app.add_subcommand("feedback", "Manage reviewer feedback");
  auto* feedback_add =
      feedback->add_subcommand("add", "Mark a fingerprint as a false positive");
  std::string fb_store, fb_fingerprint, fb_reviewer = "cli";
  feedback_add->add_option("--suppressions", fb_store,
                           "Suppression store (env PIIGUARD_SUPPRESSIONS)");
  feedback_add->add_option("--fingerprint", fb_fingerprint,
                           "Fingerprint from a triage flag reason")
      ->required();
  feedback_add->add_option("--reviewer", fb_reviewer, "Reviewer name");
  feedback->require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "Score detection quality");
  std::string eval_corpus, eval_predictions, eval_mode = "exact",
                           eval_report = "-";
  eval->add_option("--corpus", eval_corpus, "Gold corpus JSONL")->required();
  eval->add_option("--predictions", eval_predictions,
                   "Score these predictions instead of running the engine");
  eval->add_option("--mode", eval_mode, "Match mode: exact or overlap");
  eval->add_option("--report", eval_report, "Report destination");
  flags.attach(eval);

  auto* bench = app.add_subcommand("bench", "Measure scan latency");
  std::string bench_corpus, bench_report = "-";
  std::size_t bench_iterations = 30;
  bench->add_option("--corpus", bench_corpus, "Corpus JSONL")->required();
  bench->add_option("--iterations", bench_iterations,
                    "Timed scans per document (min 30)");
  bench->add_option("--report", bench_report, "Report destination");
  flags.attach(bench);

  auto* gen = app.add_subcommand("gen-corpus", "Generate a synthetic corpus");
  std::uint64_t gen_seed = 42;
  std::string gen_spec, gen_output = "-";
  gen->add_option("--seed", gen_seed, "Corpus seed");
  gen->add_option("--spec", gen_spec, "Corpus spec JSON file");
  gen->add_option("--output", gen_output, "Corpus destination (default -)");

  auto* serve =
      app.add_subcommand("serve", "Answer framed scan requests on stdio");
  flags.attach(serve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (scan->parsed()) return run_scan(flags, scan_file, scan_doc_id, scan_report);
  if (mask->parsed()) return run_mask(flags, mask_file, mask_output);
  if (triage->parsed())
    return run_triage(flags, triage_source, triage_store, triage_report);
  if (feedback->parsed())
    return run_feedback_add(fb_store, fb_fingerprint, fb_reviewer);
  if (eval->parsed())
    return run_eval(flags, eval_corpus, eval_predictions, eval_mode, eval_report);
  if (bench->parsed())
    return run_bench(flags, bench_corpus, bench_iterations, bench_report);
  if (gen->parsed()) return run_gen_corpus(gen_seed, gen_spec, gen_output);
  if (serve->parsed()) return run_serve(flags);
  return kExitUsage;
}
