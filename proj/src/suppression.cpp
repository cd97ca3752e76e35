/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "piiguard/suppression.hpp"

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "piiguard/errors.hpp"
#include "piiguard/text.hpp"

namespace piiguard {

namespace {

constexpr std::size_t kContextBytes = 64;  // raw window fed to normalization
constexpr std::size_t kContextChars = 16;  // normalized chars kept per side

std::string first_n_chars(std::string_view s, std::size_t n) {
  std::size_t pos = 0;
  for (std::size_t i = 0; i < n && pos < s.size(); ++i) text::decode_at(s, pos);
  return std::string(s.substr(0, pos));
}

std::string last_n_chars(std::string_view s, std::size_t n) {
  std::size_t pos = s.size();
  for (std::size_t i = 0; i < n && pos > 0; ++i)
    pos = text::floor_boundary(s, pos - 1);
  return std::string(s.substr(pos));
}

std::string hash_parts(std::string_view surface, EntityType entity_type,
                       std::string_view before, std::string_view after) {
  const std::string before16 = last_n_chars(text::normalize_ws(before),
                                            kContextChars);
  const std::string after16 = first_n_chars(text::normalize_ws(after),
                                            kContextChars);
  std::string payload;
  payload += text::normalize_ws(surface);
  payload += '\x1f';
  payload += to_string(entity_type);
  payload += '\x1f';
  payload += before16;
  payload += '\x1f';
  payload += after16;
  return text::to_hex64(text::fnv1a64(payload));
}

}  // namespace

std::string mention_fingerprint(std::string_view text,
                                const EntityMention& mention) {
  const TextSpan& span = mention.span;
  if (span.end > text.size() || span.start > span.end)
    throw ArgumentError("mention span out of bounds");
  std::size_t before_begin =
      text::floor_boundary(text, span.start - std::min(span.start,
                                                       kContextBytes));
  std::size_t after_end = std::min(text.size(), span.end + kContextBytes);
  after_end = text::floor_boundary(text, after_end);
  if (after_end < span.end) after_end = span.end;
  return hash_parts(mention.surface, mention.entity_type,
                    text.substr(before_begin, span.start - before_begin),
                    text.substr(span.end, after_end - span.end));
}

std::string fingerprint_from_parts(std::string_view surface,
                                   EntityType entity_type,
                                   std::string_view before,
                                   std::string_view after) {
  return hash_parts(surface, entity_type, before, after);
}

SuppressionStore::SuppressionStore(std::string path) : path_(std::move(path)) {
  load();
}

void SuppressionStore::load() {
  if (path_.empty() || !std::filesystem::exists(path_)) return;
  std::ifstream in(path_, std::ios::binary);
  if (!in) throw IoError("cannot open suppression store '" + path_ + "'");
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("suppression store: ") + e.what(), lineno);
    }
    SuppressionEntry entry;
    entry.fingerprint = doc.value("fingerprint", "");
    entry.verdict = doc.value("verdict", "false_positive");
    entry.reviewer = doc.value("reviewer", "");
    entry.timestamp = doc.value("timestamp", "");
    if (entry.fingerprint.empty())
      throw ParseError("suppression store: entry without fingerprint", lineno);
    if (fingerprints_.insert(entry.fingerprint).second)
      entries_.push_back(std::move(entry));
  }
}

bool SuppressionStore::record_feedback(const SuppressionEntry& entry) {
  if (entry.fingerprint.empty())
    throw ArgumentError("suppression entry requires a fingerprint");
  std::lock_guard<std::mutex> lock(mutex_);
  if (fingerprints_.count(entry.fingerprint)) return false;  // idempotent
  if (!path_.empty()) {
    std::ofstream out(path_, std::ios::binary | std::ios::app);
    if (!out) throw IoError("cannot append to suppression store '" + path_ +
                            "'");
    nlohmann::json doc{{"fingerprint", entry.fingerprint},
                       {"verdict", entry.verdict},
                       {"reviewer", entry.reviewer},
                       {"timestamp", entry.timestamp}};
    out << doc.dump() << '\n';
    if (!out) throw IoError("write failed for suppression store '" + path_ +
                            "'");
  }
  fingerprints_.insert(entry.fingerprint);
  entries_.push_back(entry);
  return true;
}

bool SuppressionStore::contains(std::string_view fingerprint) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return fingerprints_.count(std::string(fingerprint)) > 0;
}

std::size_t SuppressionStore::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return entries_.size();
}

std::set<std::string> SuppressionStore::snapshot() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return fingerprints_;
}

std::vector<SuppressionEntry> SuppressionStore::entries() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return entries_;
}

}  // namespace piiguard
