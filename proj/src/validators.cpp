/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "piiguard/validators.hpp"

#include <string>

#include "piiguard/errors.hpp"

namespace piiguard {

namespace {

void require_digits(std::string_view digits, const char* who) {
  if (digits.empty())
    throw ArgumentError(std::string(who) + ": empty input");
  for (char c : digits)
    if (c < '0' || c > '9')
      throw ArgumentError(std::string(who) + ": non-digit input");
}

// Verhoeff tables: d is the D5 dihedral-group multiplication, p the position
// permutation, inv the group inverse.
constexpr int kD[10][10] = {
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, {1, 2, 3, 4, 0, 6, 7, 8, 9, 5},
    {2, 3, 4, 0, 1, 7, 8, 9, 5, 6}, {3, 4, 0, 1, 2, 8, 9, 5, 6, 7},
    {4, 0, 1, 2, 3, 9, 5, 6, 7, 8}, {5, 9, 8, 7, 6, 0, 4, 3, 2, 1},
    {6, 5, 9, 8, 7, 1, 0, 4, 3, 2}, {7, 6, 5, 9, 8, 2, 1, 0, 4, 3},
    {8, 7, 6, 5, 9, 3, 2, 1, 0, 4}, {9, 8, 7, 6, 5, 4, 3, 2, 1, 0}};

constexpr int kP[8][10] = {
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, {1, 5, 7, 6, 2, 8, 3, 0, 9, 4},
    {5, 8, 0, 3, 7, 9, 6, 1, 4, 2}, {8, 9, 1, 6, 0, 4, 3, 5, 2, 7},
    {9, 4, 5, 3, 1, 2, 6, 8, 7, 0}, {4, 2, 8, 6, 5, 7, 3, 9, 0, 1},
    {2, 7, 9, 3, 8, 0, 6, 4, 1, 5}, {7, 0, 4, 6, 9, 1, 3, 2, 5, 8}};

constexpr int kInv[10] = {0, 4, 3, 2, 1, 5, 6, 7, 8, 9};

int verhoeff_c(std::string_view digits) {
  int c = 0;
  int pos = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it, ++pos)
    c = kD[c][kP[pos % 8][*it - '0']];
  return c;
}

}  // namespace

bool luhn_check(std::string_view digits) {
  require_digits(digits, "luhn_check");
  int sum = 0;
  bool dbl = false;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    int d = *it - '0';
    if (dbl) {
      d *= 2;
      if (d > 9) d -= 9;
    }
    sum += d;
    dbl = !dbl;
  }
  return sum % 10 == 0;
}

bool verhoeff_check(std::string_view digits) {
  require_digits(digits, "verhoeff_check");
  return verhoeff_c(digits) == 0;
}

bool ssn_structure_check(std::string_view digits) {
  require_digits(digits, "ssn_structure_check");
  if (digits.size() != 9)
    throw ArgumentError("ssn_structure_check: expected 9 digits, got " +
                        std::to_string(digits.size()));
  std::string_view area = digits.substr(0, 3);
  std::string_view group = digits.substr(3, 2);
  std::string_view serial = digits.substr(5, 4);
  if (area == "000" || area == "666" || area[0] == '9') return false;
  if (group == "00") return false;
  if (serial == "0000") return false;
  return true;
}

bool steuer_id_check(std::string_view digits) {
  require_digits(digits, "steuer_id_check");
  if (digits.size() != 11)
    throw ArgumentError("steuer_id_check: expected 11 digits, got " +
                        std::to_string(digits.size()));
  if (digits[0] == '0') return false;
  return steuer_id_check_digit(digits.substr(0, 10)) == digits[10];
}

char luhn_check_digit(std::string_view payload) {
  require_digits(payload, "luhn_check_digit");
  // The check digit doubles from position 1, so walk with an offset.
  int sum = 0;
  bool dbl = true;
  for (auto it = payload.rbegin(); it != payload.rend(); ++it) {
    int d = *it - '0';
    if (dbl) {
      d *= 2;
      if (d > 9) d -= 9;
    }
    sum += d;
    dbl = !dbl;
  }
  return static_cast<char>('0' + (10 - sum % 10) % 10);
}

char verhoeff_check_digit(std::string_view payload) {
  require_digits(payload, "verhoeff_check_digit");
  // Compute c over payload shifted one position left (check digit at pos 0).
  int c = 0;
  int pos = 1;
  for (auto it = payload.rbegin(); it != payload.rend(); ++it, ++pos)
    c = kD[c][kP[pos % 8][*it - '0']];
  return static_cast<char>('0' + kInv[c]);
}

char steuer_id_check_digit(std::string_view payload) {
  require_digits(payload, "steuer_id_check_digit");
  if (payload.size() != 10)
    throw ArgumentError("steuer_id_check_digit: expected 10 digits");
  // ISO 7064 MOD 11,10 hybrid.
  int product = 10;
  for (char ch : payload) {
    int sum = (ch - '0' + product) % 10;
    if (sum == 0) sum = 10;
    product = (2 * sum) % 11;
  }
  int check = 11 - product;
  if (check == 10) check = 0;
  return static_cast<char>('0' + check);
}

}  // namespace piiguard
