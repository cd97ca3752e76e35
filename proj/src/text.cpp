/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "piiguard/text.hpp"

#include <array>
#include <cmath>

namespace piiguard::text {

namespace {

inline bool is_cont(unsigned char b) { return (b & 0xC0) == 0x80; }

}  // namespace

bool utf8_valid(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char b = s[i];
    std::size_t need;
    char32_t min_cp;
    if (b < 0x80) {
      ++i;
      continue;
    } else if ((b & 0xE0) == 0xC0) {
      need = 1;
      min_cp = 0x80;
    } else if ((b & 0xF0) == 0xE0) {
      need = 2;
      min_cp = 0x800;
    } else if ((b & 0xF8) == 0xF0) {
      need = 3;
      min_cp = 0x10000;
    } else {
      return false;
    }
    if (i + need >= s.size()) return false;
    char32_t cp = b & (0x3F >> need);
    for (std::size_t k = 1; k <= need; ++k) {
      unsigned char c = s[i + k];
      if (!is_cont(c)) return false;
      cp = (cp << 6) | (c & 0x3F);
    }
    if (cp < min_cp || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
      return false;
    i += need + 1;
  }
  return true;
}

bool is_char_boundary(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) return pos == s.size();
  return !is_cont(static_cast<unsigned char>(s[pos]));
}

char32_t decode_at(std::string_view s, std::size_t& pos) {
  unsigned char b = s[pos];
  if (b < 0x80) {
    ++pos;
    return b;
  }
  std::size_t need = 0;
  if ((b & 0xE0) == 0xC0)
    need = 1;
  else if ((b & 0xF0) == 0xE0)
    need = 2;
  else if ((b & 0xF8) == 0xF0)
    need = 3;
  else {
    ++pos;
    return 0xFFFD;
  }
  if (pos + need >= s.size()) {
    ++pos;
    return 0xFFFD;
  }
  char32_t cp = b & (0x3F >> need);
  for (std::size_t k = 1; k <= need; ++k) {
    unsigned char c = s[pos + k];
    if (!is_cont(c)) {
      ++pos;
      return 0xFFFD;
    }
    cp = (cp << 6) | (c & 0x3F);
  }
  pos += need + 1;
  return cp;
}

std::size_t floor_boundary(std::string_view s, std::size_t pos) {
  if (pos > s.size()) pos = s.size();
  while (pos > 0 && !is_char_boundary(s, pos)) --pos;
  return pos;
}

char32_t decode_before(std::string_view s, std::size_t pos) {
  pos = floor_boundary(s, pos);
  if (pos == 0) return 0;
  std::size_t start = floor_boundary(s, pos - 1);
  return decode_at(s, start);
}

bool is_ascii_digit(char32_t c) { return c >= '0' && c <= '9'; }

bool is_caseless_letter(char32_t c) {
  // Devanagari block (letters, matras, virama) minus the digits at 0966-096F.
  if (c >= 0x0900 && c <= 0x097F) return !(c >= 0x0966 && c <= 0x096F);
  return false;
}

bool is_letter(char32_t c) {
  if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z')) return true;
  // Latin-1 letters, skipping the multiplication/division signs.
  if (c >= 0xC0 && c <= 0xFF && c != 0xD7 && c != 0xF7) return true;
  // Latin Extended-A covers the bundled European locales' extra letters.
  if (c >= 0x100 && c <= 0x17F) return true;
  return is_caseless_letter(c);
}

bool is_upper(char32_t c) {
  if (c >= 'A' && c <= 'Z') return true;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return true;
  // Latin Extended-A alternates lower/upper; even code points are upper,
  // with a handful of exceptions that do not appear in bundled data.
  if (c >= 0x100 && c <= 0x177 && (c % 2) == 0) return true;
  return false;
}

bool is_word_char(char32_t c) {
  return c == '_' || is_ascii_digit(c) || is_letter(c);
}

char32_t fold_char(char32_t c) {
  if (c >= 'A' && c <= 'Z') return c + 0x20;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 0x20;
  return c;
}

namespace {

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline bool is_space_cp(char32_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v' || c == 0xA0;
}

}  // namespace

std::string casefold(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) append_utf8(out, fold_char(decode_at(s, i)));
  return out;
}

std::string normalize_ws(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  bool pending_space = false;
  while (i < s.size()) {
    char32_t cp = decode_at(s, i);
    if (is_space_cp(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    append_utf8(out, fold_char(cp));
  }
  return out;
}

double shannon_entropy(std::string_view s) {
  if (s.empty()) return 0.0;
  std::array<std::size_t, 256> freq{};
  for (unsigned char b : s) ++freq[b];
  double h = 0.0;
  const double n = static_cast<double>(s.size());
  for (std::size_t f : freq) {
    if (!f) continue;
    double p = static_cast<double>(f) / n;
    h -= p * std::log2(p);
  }
  return h;
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : s) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string to_hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xF];
    v >>= 4;
  }
  return out;
}

std::size_t count_tokens(std::string_view s) {
  std::size_t n = 0;
  bool in_tok = false;
  for (char c : s) {
    bool ws = c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
              c == '\v';
    if (!ws && !in_tok) ++n;
    in_tok = !ws;
  }
  return n;
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
  // Rejection sampling keeps the draw unbiased.
  std::uint64_t limit = ~0ULL - (~0ULL % n);
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % n;
}

double SplitMix64::unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

}  // namespace piiguard::text
