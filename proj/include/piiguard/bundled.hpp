/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace piiguard {

namespace detail {
struct BundledEntry {
  const char* name;  // path relative to data/, e.g. "patterns/en.json"
  const char* bytes;
  std::size_t size;
};
extern const BundledEntry kBundledEntries[];
extern const std::size_t kBundledEntryCount;
}  // namespace detail

// Returns the embedded copy of a data file. Throws IoError when absent.
std::string_view bundled_resource(std::string_view name);

bool has_bundled_resource(std::string_view name);

// Names of all embedded files whose path starts with `prefix`.
std::vector<std::string> bundled_resource_names(std::string_view prefix = {});

}  // namespace piiguard
