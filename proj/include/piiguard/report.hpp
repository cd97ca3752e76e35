/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "piiguard/types.hpp"

namespace piiguard {

// Canonical JSON form of a report; schema documented in docs/FORMATS.md.
// indent < 0 emits compact single-line JSON.
std::string report_to_json(const GuardReport& report, int indent = -1);
GuardReport report_from_json(std::string_view json_text);

// Checks every report invariant against the source document and returns
// human-readable violation descriptions (empty = valid).
std::vector<std::string> validate_report(const GuardReport& report,
                                         std::string_view source);

}  // namespace piiguard
