/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace piiguard {

// Error taxonomy shared by the whole library. The C ABI maps each subclass
// onto a distinct status code, so new subclasses need a matching entry there.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid engine/detector/policy configuration discovered at construction.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A caller broke a function's documented preconditions.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Malformed input data (pattern files, snapshots, corpora, JSON exports).
// Carries the 1-based line when the format is line-oriented, 0 otherwise.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_ = 0;
};

// Filesystem failures: missing files, unreadable directories, failed writes.
class IoError : public Error {
 public:
  using Error::Error;
};

// An internal invariant was violated; indicates a bug, not bad input.
class ContractError : public Error {
 public:
  using Error::Error;
};

}  // namespace piiguard
