/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <array>
#include <string>

#include "piiguard/errors.hpp"
#include "piiguard/validators.hpp"

using namespace piiguard;

namespace {

// Independent Luhn oracle: sums via the doubled-digit lookup table instead
// of arithmetic, so a shared bug with the implementation is unlikely.
bool oracle_luhn(const std::string& s) {
  static constexpr int doubled[10] = {0, 2, 4, 6, 8, 1, 3, 5, 7, 9};
  int sum = 0;
  int n = static_cast<int>(s.size());
  for (int i = 0; i < n; ++i) {
    int d = s[n - 1 - i] - '0';
    sum += (i % 2 == 1) ? doubled[d] : d;
  }
  return sum % 10 == 0;
}

// Independent Verhoeff oracle: builds the D5 multiplication table from the
// group definition (rotations r^j, reflections sr^j) and the permutation
// table by iterating the base permutation, rather than using constants.
struct VerhoeffOracle {
  int d[10][10];
  int p[8][10];
  int inv[10];
  VerhoeffOracle() {
    for (int j = 0; j < 10; ++j)
      for (int k = 0; k < 10; ++k) {
        if (j < 5 && k < 5) d[j][k] = (j + k) % 5;
        else if (j < 5) d[j][k] = 5 + (j + (k - 5)) % 5;
        else if (k < 5) d[j][k] = 5 + ((j - 5) - k + 5) % 5;
        else d[j][k] = ((j - 5) - (k - 5) + 5) % 5;
      }
    static constexpr int base[10] = {1, 5, 7, 6, 2, 8, 3, 0, 9, 4};
    for (int k = 0; k < 10; ++k) p[0][k] = k;
    for (int i = 1; i < 8; ++i)
      for (int k = 0; k < 10; ++k) p[i][k] = base[p[i - 1][k]];
    for (int j = 0; j < 10; ++j)
      for (int k = 0; k < 10; ++k)
        if (d[j][k] == 0) inv[j] = k;
  }
  bool valid(const std::string& s) const {
    int c = 0;
    int n = static_cast<int>(s.size());
    for (int i = 0; i < n; ++i)
      c = d[c][p[i % 8][s[n - 1 - i] - '0']];
    return c == 0;
  }
};

std::string digits_of(unsigned value, int width) {
  std::string s(width, '0');
  for (int i = width - 1; i >= 0; --i) {
    s[i] = static_cast<char>('0' + value % 10);
    value /= 10;
  }
  return s;
}

}  // namespace

TEST_CASE("luhn_check frozen examples") {
  CHECK(luhn_check("4111111111111111"));
  CHECK(luhn_check("49927398716"));
  CHECK(luhn_check("1234567812345670"));
  CHECK_FALSE(luhn_check("4111111111111112"));
  CHECK_FALSE(luhn_check("49927398717"));
  CHECK(luhn_check("0"));
}

TEST_CASE("luhn_check_digit completes payloads") {
  CHECK(luhn_check_digit("411111111111111") == '1');
  CHECK(luhn_check_digit("4992739871") == '6');
  for (unsigned v = 0; v < 200; ++v) {
    std::string payload = digits_of(v, 5);
    std::string full = payload + luhn_check_digit(payload);
    CHECK(luhn_check(full));
  }
}

TEST_CASE("verhoeff_check frozen examples") {
  CHECK(verhoeff_check("2363"));
  CHECK_FALSE(verhoeff_check("2364"));
  CHECK(verhoeff_check("0"));
  // 12-digit identifiers completed by the independent oracle above.
  CHECK(verhoeff_check("234567890124"));
  CHECK(verhoeff_check("030123456788"));
  CHECK_FALSE(verhoeff_check("234567890123"));
}

TEST_CASE("verhoeff_check_digit completes payloads") {
  CHECK(verhoeff_check_digit("236") == '3');
  CHECK(verhoeff_check_digit("23456789012") == '4');
  CHECK(verhoeff_check_digit("03012345678") == '8');
  for (unsigned v = 0; v < 200; ++v) {
    std::string payload = digits_of(v, 11);
    CHECK(verhoeff_check(payload + verhoeff_check_digit(payload)));
  }
}

TEST_CASE("luhn agrees with the table oracle on all strings up to length 4") {
  for (int len = 1; len <= 4; ++len) {
    unsigned limit = 1;
    for (int i = 0; i < len; ++i) limit *= 10;
    for (unsigned v = 0; v < limit; ++v) {
      std::string s = digits_of(v, len);
      CHECK(luhn_check(s) == oracle_luhn(s));
    }
  }
}

TEST_CASE("verhoeff agrees with the constructed-group oracle up to length 4") {
  VerhoeffOracle oracle;
  for (int len = 1; len <= 4; ++len) {
    unsigned limit = 1;
    for (int i = 0; i < len; ++i) limit *= 10;
    for (unsigned v = 0; v < limit; ++v) {
      std::string s = digits_of(v, len);
      CHECK(verhoeff_check(s) == oracle.valid(s));
    }
  }
}

TEST_CASE("single-digit mutations always invalidate verhoeff") {
  // The defining property of the dihedral checksum.
  for (unsigned v = 0; v < 1000; ++v) {
    std::string payload = digits_of(v, 3);
    std::string s = payload + verhoeff_check_digit(payload);
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (char c = '0'; c <= '9'; ++c) {
        if (c == s[i]) continue;
        std::string mutated = s;
        mutated[i] = c;
        CHECK_FALSE(verhoeff_check(mutated));
      }
    }
  }
}

TEST_CASE("single-digit mutations always invalidate luhn") {
  for (unsigned v = 0; v < 1000; ++v) {
    std::string payload = digits_of(v, 3);
    std::string s = payload + luhn_check_digit(payload);
    REQUIRE(luhn_check(s));
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (char c = '0'; c <= '9'; ++c) {
        if (c == s[i]) continue;
        std::string mutated = s;
        mutated[i] = c;
        CHECK_FALSE(luhn_check(mutated));
      }
    }
  }
}

TEST_CASE("ssn structure gates") {
  CHECK(ssn_structure_check("536228726"));
  CHECK(ssn_structure_check("123456789"));
  CHECK_FALSE(ssn_structure_check("000456789"));  // area 000
  CHECK_FALSE(ssn_structure_check("666456789"));  // area 666
  CHECK_FALSE(ssn_structure_check("900456789"));  // area 9xx
  CHECK_FALSE(ssn_structure_check("123006789"));  // group 00
  CHECK_FALSE(ssn_structure_check("123450000"));  // serial 0000
  CHECK_THROWS_AS(ssn_structure_check("12345678"), ArgumentError);
  CHECK_THROWS_AS(ssn_structure_check("1234567890"), ArgumentError);
}

TEST_CASE("steuer id validation") {
  CHECK(steuer_id_check_digit("8609574271") == '9');
  CHECK(steuer_id_check_digit("1234567890") == '3');
  CHECK(steuer_id_check("86095742719"));
  CHECK(steuer_id_check("12345678903"));
  CHECK_FALSE(steuer_id_check("86095742710"));  // wrong check digit
  CHECK_FALSE(steuer_id_check("01234567893"));  // leading zero
  CHECK_THROWS_AS(steuer_id_check("123"), ArgumentError);
  CHECK_THROWS_AS(steuer_id_check_digit("123"), ArgumentError);
  // Constructor and validator agree over a dense sample.
  for (unsigned v = 1000; v < 3000; ++v) {
    std::string payload = "1" + digits_of(v, 4) + digits_of(v * 7 % 100000, 5);
    std::string full = payload + steuer_id_check_digit(payload);
    CHECK(steuer_id_check(full));
    char bumped = static_cast<char>('0' + (full[10] - '0' + 1) % 10);
    full[10] = bumped;
    CHECK_FALSE(steuer_id_check(full));
  }
}

TEST_CASE("validators reject non-digit and empty input") {
  CHECK_THROWS_AS(luhn_check(""), ArgumentError);
  CHECK_THROWS_AS(luhn_check("41x1"), ArgumentError);
  CHECK_THROWS_AS(verhoeff_check(""), ArgumentError);
  CHECK_THROWS_AS(verhoeff_check("12 34"), ArgumentError);
  CHECK_THROWS_AS(luhn_check_digit(""), ArgumentError);
  CHECK_THROWS_AS(verhoeff_check_digit("a"), ArgumentError);
}
