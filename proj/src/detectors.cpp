/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "piiguard/detectors.hpp"

#include <algorithm>

#include "piiguard/errors.hpp"
#include "piiguard/text.hpp"
#include "piiguard/validators.hpp"

namespace piiguard {

namespace {

std::string digits_of(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c >= '0' && c <= '9') out.push_back(c);
  return out;
}

bool checksum_ok(PatternRule::Checksum kind, const std::string& digits) {
  switch (kind) {
    case PatternRule::Checksum::None:
      return true;
    case PatternRule::Checksum::Luhn:
      return !digits.empty() && luhn_check(digits);
    case PatternRule::Checksum::Verhoeff:
      return !digits.empty() && verhoeff_check(digits);
    case PatternRule::Checksum::Ssn:
      return digits.size() == 9 && ssn_structure_check(digits);
    case PatternRule::Checksum::SteuerId:
      return digits.size() == 11 && steuer_id_check(digits);
  }
  return false;
}

int type_rank(EntityType t) {
  // Only used for deterministic candidate ordering.
  for (std::size_t i = 0; i < kAllEntityTypes.size(); ++i)
    if (kAllEntityTypes[i] == t) return static_cast<int>(i);
  return 0;
}

bool mention_order(const EntityMention& a, const EntityMention& b) {
  if (a.span.start != b.span.start) return a.span.start < b.span.start;
  if (a.span.end != b.span.end) return a.span.end < b.span.end;
  if (a.entity_type != b.entity_type)
    return type_rank(a.entity_type) < type_rank(b.entity_type);
  if (a.locale != b.locale) return a.locale < b.locale;
  return a.detector_id < b.detector_id;
}

// --- person detection ----------------------------------------------------

struct Token {
  TextSpan span;
  bool name_shaped = false;  // Capitalized or written in a caseless script
  bool single_space_before = false;
};

std::vector<Token> name_tokens(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  std::size_t prev_end = 0;
  while (i < text.size()) {
    std::size_t start = i;
    char32_t cp = text::decode_at(text, i);
    if (!text::is_letter(cp)) {
      continue;
    }
    // Token: letters plus internal apostrophes/hyphens.
    bool first_upper = text::is_upper(cp);
    bool any_lower_or_caseless = !first_upper;
    bool all_upper = first_upper;
    bool caseless = text::is_caseless_letter(cp);
    std::size_t end = i;
    while (i < text.size()) {
      std::size_t probe = i;
      char32_t c = text::decode_at(text, probe);
      if (text::is_letter(c)) {
        if (!text::is_upper(c)) {
          any_lower_or_caseless = true;
          all_upper = false;
        }
        if (!text::is_caseless_letter(c)) caseless = false;
        i = probe;
        end = i;
        continue;
      }
      if ((c == '\'' || c == 0x2019 || c == '-') && probe < text.size()) {
        std::size_t look = probe;
        char32_t nxt = text::decode_at(text, look);
        if (text::is_letter(nxt)) {
          i = probe;
          end = i;
          continue;
        }
      }
      break;
    }
    (void)any_lower_or_caseless;
    // Possessive clitic: a trailing 's belongs to the sentence, not the name.
    if (end - start >= 3 && text[end - 1] == 's' && text[end - 2] == '\'') {
      end -= 2;
    } else if (end - start >= 5 && text[end - 1] == 's' &&
               static_cast<unsigned char>(text[end - 4]) == 0xE2 &&
               static_cast<unsigned char>(text[end - 3]) == 0x80 &&
               static_cast<unsigned char>(text[end - 2]) == 0x99) {
      end -= 4;
    }
    std::size_t len_cp = 0;
    all_upper = first_upper;
    caseless = true;
    {
      std::size_t p = start;
      while (p < end) {
        char32_t c = text::decode_at(text, p);
        if (text::is_letter(c)) {
          if (!text::is_upper(c)) all_upper = false;
          if (!text::is_caseless_letter(c)) caseless = false;
        }
        ++len_cp;
      }
    }
    bool capitalized = first_upper && !(all_upper && len_cp >= 2);
    Token tok;
    tok.span = {start, end};
    tok.name_shaped = capitalized || caseless;
    tok.single_space_before =
        start == prev_end + 1 && start > 0 && text[start - 1] == ' ';
    prev_end = end;
    tokens.push_back(tok);
  }
  return tokens;
}

}  // namespace

std::vector<EntityMention> detect_credential(std::string_view text,
                                             double entropy_threshold) {
  if (entropy_threshold <= 0)
    throw ArgumentError("credential entropy threshold must be > 0");
  std::vector<EntityMention> out;

  // Well-known key shapes. Prefix matches outrank entropy candidates over
  // the same span.
  static const std::vector<std::pair<const char*, boost::regex>> kPrefixes = [] {
    std::vector<std::pair<const char*, boost::regex>> v;
    auto add = [&v](const char* pat) {
      v.emplace_back(pat, boost::regex(std::string("(?<![A-Za-z0-9_-])") + pat,
                                       boost::regex::perl));
    };
    add("gh[pousr]_[A-Za-z0-9]{20,}");
    add("github_pat_[A-Za-z0-9_]{20,}");
    add("glpat-[A-Za-z0-9_-]{20,}");
    add("(?:AKIA|ASIA)[0-9A-Z]{16}");
    add("xox[bpars]-[A-Za-z0-9-]{10,}");
    add("sk-[A-Za-z0-9_-]{20,}");
    add("AIza[0-9A-Za-z_-]{35}");
    return v;
  }();

  std::set<std::pair<std::size_t, std::size_t>> prefix_spans;
  for (const auto& [pat, re] : kPrefixes) {
    auto begin = boost::cregex_iterator(text.data(), text.data() + text.size(), re);
    for (auto it = begin; it != boost::cregex_iterator(); ++it) {
      std::size_t start = static_cast<std::size_t>(it->position());
      std::size_t end = start + static_cast<std::size_t>(it->length());
      EntityMention m;
      m.span = {start, end};
      m.entity_type = EntityType::CredentialToken;
      m.surface = std::string(text.substr(start, end - start));
      m.locale = "common";
      m.detector_id = "credential-prefix";
      m.confidence = 0.95;
      out.push_back(std::move(m));
      prefix_spans.insert({start, end});
    }
  }

  // High-entropy runs over base64/hex alphabets, length >= 20.
  auto is_token_char = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
           (c >= '0' && c <= '9') || c == '+' || c == '/' || c == '=' ||
           c == '_' || c == '-';
  };
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_token_char(text[i])) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && is_token_char(text[i])) ++i;
    std::size_t len = i - start;
    if (len < 20) continue;
    std::string_view run = text.substr(start, len);
    if (text::shannon_entropy(run) <= entropy_threshold) continue;
    if (prefix_spans.count({start, i})) continue;
    EntityMention m;
    m.span = {start, i};
    m.entity_type = EntityType::CredentialToken;
    m.surface = std::string(run);
    m.locale = "common";
    m.detector_id = "credential-entropy";
    m.confidence = 0.7;
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), mention_order);
  return out;
}

Detectors::Detectors(DetectorConfig config, std::vector<LocalePatterns> patterns)
    : config_(std::move(config)), patterns_(std::move(patterns)) {
  if (config_.enabled_locales.empty())
    throw ConfigError("detector config requires at least one locale");
  if (config_.credential_entropy_threshold <= 0)
    throw ConfigError("credential entropy threshold must be > 0");
  std::set<std::string> have;
  for (const auto& lp : patterns_) have.insert(lp.locale);
  for (const auto& loc : config_.enabled_locales)
    if (!have.count(loc))
      throw ConfigError("no pattern definitions for locale '" + loc + "'");
  // Deterministic pass order: common first, then locale tag order.
  std::sort(patterns_.begin(), patterns_.end(),
            [](const LocalePatterns& a, const LocalePatterns& b) {
              if ((a.locale == "common") != (b.locale == "common"))
                return a.locale == "common";
              return a.locale < b.locale;
            });
  std::set<std::string> seen_honorific;
  for (const auto& lp : patterns_) {
    if (lp.locale != "common" && !config_.enabled_locales.count(lp.locale))
      continue;
    for (const auto& h : lp.honorifics)
      if (seen_honorific.insert(h).second) honorifics_.push_back(h);
    for (const auto& l : lp.locations) locations_.emplace_back(lp.locale, l);
  }
}

Detectors Detectors::bundled(DetectorConfig config) {
  if (config.enabled_locales.empty())
    throw ConfigError("detector config requires at least one locale");
  std::vector<LocalePatterns> patterns;
  patterns.push_back(bundled_patterns("common"));
  for (const auto& loc : config.enabled_locales) {
    if (!has_bundled_patterns(loc))
      throw ConfigError("unknown locale tag '" + loc +
                        "': no bundled pattern file");
    patterns.push_back(bundled_patterns(loc));
  }
  return Detectors(std::move(config), std::move(patterns));
}

void Detectors::run_rule(const PatternRule& rule, const std::string& locale,
                         std::string_view text,
                         std::vector<EntityMention>& out) const {
  auto begin =
      boost::cregex_iterator(text.data(), text.data() + text.size(), rule.regex);
  for (auto it = begin; it != boost::cregex_iterator(); ++it) {
    std::size_t start = static_cast<std::size_t>(it->position());
    std::size_t end = start + static_cast<std::size_t>(it->length());
    if (start == end) continue;
    std::string_view surface = text.substr(start, end - start);
    std::string digits = digits_of(surface);
    if (digits.size() < rule.min_digits || digits.size() > rule.max_digits)
      continue;
    if (!checksum_ok(rule.checksum, digits)) continue;
    EntityMention m;
    m.span = {start, end};
    m.entity_type = rule.entity_type;
    m.surface = std::string(surface);
    m.locale = locale;
    m.detector_id = rule.id;
    m.confidence = rule.confidence;
    out.push_back(std::move(m));
  }
}

std::vector<EntityMention> Detectors::detect_patterns(std::string_view text,
                                                      EntityType type) const {
  std::vector<EntityMention> out;
  for (const auto& lp : patterns_) {
    if (lp.locale != "common" && !config_.enabled_locales.count(lp.locale))
      continue;
    for (const auto& rule : lp.rules) {
      if (rule.entity_type != type) continue;
      if (rule.requires_pseudonyms && !config_.detect_pseudonyms) continue;
      run_rule(rule, lp.locale, text, out);
    }
  }
  std::sort(out.begin(), out.end(), mention_order);
  return out;
}

std::vector<EntityMention> Detectors::detect_person(std::string_view text) const {
  std::vector<EntityMention> out;
  const Gazetteer* lexicon = config_.first_name_lexicon;
  std::vector<Token> tokens = name_tokens(text);

  auto honorific_before = [&](const Token& tok) {
    if (tok.span.start == 0) return false;
    std::size_t end = tok.span.start;
    // Skip at most two spaces back to the honorific's final character.
    while (end > 0 && (text[end - 1] == ' ')) --end;
    if (end == 0 || tok.span.start - end > 2) return false;
    for (const auto& h : honorifics_) {
      if (h.size() > end) continue;
      if (text.substr(end - h.size(), h.size()) != h) continue;
      if (end > h.size()) {
        char32_t before = text::decode_before(text, end - h.size());
        if (text::is_word_char(before)) continue;
      }
      return true;
    }
    return false;
  };

  std::size_t i = 0;
  while (i < tokens.size()) {
    const Token& tok = tokens[i];
    if (!tok.name_shaped) {
      ++i;
      continue;
    }
    std::string_view word = text.substr(tok.span.start, tok.span.length());
    bool in_lexicon = lexicon && lexicon->lookup_first_name(word);
    bool honorific = !in_lexicon && honorific_before(tok);
    if (!in_lexicon && !honorific) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < tokens.size() && j - i + 1 < 4 &&
           tokens[j + 1].name_shaped && tokens[j + 1].single_space_before)
      ++j;
    EntityMention m;
    m.span = {tok.span.start, tokens[j].span.end};
    m.entity_type = EntityType::Person;
    m.surface = std::string(text.substr(m.span.start, m.span.length()));
    m.locale = "unspecified";
    if (in_lexicon) {
      for (const auto& loc : config_.enabled_locales) {
        if (lexicon->lookup_first_name(word, loc)) {
          m.locale = loc;
          break;
        }
      }
    }
    m.detector_id = in_lexicon ? "person-lexicon" : "person-honorific";
    m.confidence = in_lexicon ? 0.85 : 0.8;
    out.push_back(std::move(m));
    i = j + 1;
  }
  return out;
}

std::vector<EntityMention> Detectors::detect_location(std::string_view text) const {
  std::vector<EntityMention> out;
  for (const auto& [locale, name] : locations_) {
    std::size_t pos = 0;
    while ((pos = text.find(name, pos)) != std::string_view::npos) {
      std::size_t end = pos + name.size();
      bool ok = true;
      if (pos > 0 && text::is_word_char(text::decode_before(text, pos)))
        ok = false;
      if (ok && end < text.size()) {
        std::size_t p = end;
        if (text::is_word_char(text::decode_at(text, p))) ok = false;
      }
      if (ok) {
        EntityMention m;
        m.span = {pos, end};
        m.entity_type = EntityType::Location;
        m.surface = name;
        m.locale = locale;
        m.detector_id = "location-lexicon";
        m.confidence = 0.8;
        out.push_back(std::move(m));
      }
      pos = end;
    }
  }
  std::sort(out.begin(), out.end(), mention_order);
  return out;
}

std::vector<EntityMention> Detectors::detect_credential(
    std::string_view text) const {
  return piiguard::detect_credential(text, config_.credential_entropy_threshold);
}

std::vector<EntityMention> Detectors::detect(std::string_view text,
                                             std::span<const Chunk> chunks) const {
  (void)chunks;  // chunk context is consumed by resolver/scorer stages
  std::vector<EntityMention> out;
  auto enabled = [this](EntityType t) { return config_.enabled_types.count(t); };

  for (const auto& lp : patterns_) {
    if (lp.locale != "common" && !config_.enabled_locales.count(lp.locale))
      continue;
    for (const auto& rule : lp.rules) {
      if (!enabled(rule.entity_type)) continue;
      if (rule.requires_pseudonyms && !config_.detect_pseudonyms) continue;
      run_rule(rule, lp.locale, text, out);
    }
  }
  if (enabled(EntityType::Person)) {
    auto persons = detect_person(text);
    out.insert(out.end(), persons.begin(), persons.end());
  }
  if (enabled(EntityType::Location)) {
    auto locs = detect_location(text);
    out.insert(out.end(), locs.begin(), locs.end());
  }
  if (enabled(EntityType::CredentialToken)) {
    auto creds = detect_credential(text);
    out.insert(out.end(), creds.begin(), creds.end());
  }

  std::sort(out.begin(), out.end(), mention_order);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace piiguard
