/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "piiguard/bundled.hpp"

#include <algorithm>

#include "piiguard/errors.hpp"

namespace piiguard {

std::string_view bundled_resource(std::string_view name) {
  for (std::size_t i = 0; i < detail::kBundledEntryCount; ++i) {
    const auto& e = detail::kBundledEntries[i];
    if (name == e.name) return {e.bytes, e.size};
  }
  throw IoError("no bundled resource named '" + std::string(name) + "'");
}

bool has_bundled_resource(std::string_view name) {
  for (std::size_t i = 0; i < detail::kBundledEntryCount; ++i) {
    if (name == detail::kBundledEntries[i].name) return true;
  }
  return false;
}

std::vector<std::string> bundled_resource_names(std::string_view prefix) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < detail::kBundledEntryCount; ++i) {
    std::string_view name = detail::kBundledEntries[i].name;
    if (name.substr(0, prefix.size()) == prefix) out.emplace_back(name);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace piiguard
