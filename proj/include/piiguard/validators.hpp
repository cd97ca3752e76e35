/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <string_view>

namespace piiguard {

// Checksum validators over bare digit strings. They reject rather than
// normalize: separator stripping is the caller's job.

// Luhn mod-10. Input: 1+ decimal digits. Throws ArgumentError otherwise.
bool luhn_check(std::string_view digits);

// Verhoeff dihedral-group checksum. Input: 1+ decimal digits.
bool verhoeff_check(std::string_view digits);

// US SSN structural validity: area not 000/666/900-999, group not 00,
// serial not 0000. Input: exactly 9 digits.
bool ssn_structure_check(std::string_view digits);

// German tax identifier: 11 digits, leading digit nonzero, final digit is
// the ISO 7064 MOD 11,10 check over the first ten.
bool steuer_id_check(std::string_view digits);

// Check-digit constructors; used by the corpus generator to synthesize
// valid identifiers. Payload is the digit string without its check digit.
char luhn_check_digit(std::string_view payload);
char verhoeff_check_digit(std::string_view payload);
char steuer_id_check_digit(std::string_view payload);  // payload: 10 digits

}  // namespace piiguard
