/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace piiguard::text {

// --- UTF-8 ------------------------------------------------------------
// All spans produced by the library are byte offsets that sit on UTF-8
// character boundaries; these helpers are what enforce that.

bool utf8_valid(std::string_view s);

// True when `pos` does not point into the middle of a multi-byte sequence.
// `pos == s.size()` counts as a boundary.
bool is_char_boundary(std::string_view s, std::size_t pos);

// Decodes the code point at `pos` and advances `pos` past it. Invalid bytes
// decode as U+FFFD and advance by one.
char32_t decode_at(std::string_view s, std::size_t& pos);

// Code point starting at the largest boundary strictly before `pos`.
char32_t decode_before(std::string_view s, std::size_t pos);

// Largest character boundary <= pos (clamps into the middle of a sequence).
std::size_t floor_boundary(std::string_view s, std::size_t pos);

// --- classification ----------------------------------------------------
// Deliberately small tables: ASCII, Latin-1 letters, and the scripts the
// bundled locales need. Everything else is treated as a plain symbol.

bool is_ascii_digit(char32_t c);
bool is_letter(char32_t c);       // includes caseless-script letters
bool is_upper(char32_t c);
bool is_caseless_letter(char32_t c);  // e.g. Devanagari: letters with no case
bool is_word_char(char32_t c);    // letter, digit, or underscore

// --- case folding -------------------------------------------------------
// ASCII + Latin-1 folding only; sufficient for the bundled keyword and
// gazetteer data, and crucially stable across platforms and C locales.

char32_t fold_char(char32_t c);
std::string casefold(std::string_view s);

// Casefold + trim + collapse runs of whitespace to single spaces.
std::string normalize_ws(std::string_view s);

// --- misc ----------------------------------------------------------------

// Shannon entropy of the byte distribution, in bits per byte.
double shannon_entropy(std::string_view s);

// FNV-1a 64-bit over raw bytes.
std::uint64_t fnv1a64(std::string_view s);
std::string to_hex64(std::uint64_t v);

// Number of whitespace-separated tokens.
std::size_t count_tokens(std::string_view s);

// Deterministic 64-bit generator (splitmix64). Used wherever reproducible
// output is part of the contract; never std::mt19937, whose distributions
// are not bit-stable across standard libraries.
struct SplitMix64 {
  std::uint64_t state = 0;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  // Uniform in [0, n). n must be > 0.
  std::uint64_t below(std::uint64_t n);
  double unit();  // [0, 1)
};

}  // namespace piiguard::text
