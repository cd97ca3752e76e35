/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <string>

namespace acceptance {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome reference_doc_replay();   // five pinned documents, cell-exact
Outcome detection_quality();      // per-type F1 on the generated corpus
Outcome scan_latency();           // bucketed median latency budgets
Outcome triage_flag_rate();       // 200 PRs, 17 seeded violations
Outcome checksum_oracles();       // exhaustive agreement + mutation tests
Outcome invariant_suites();       // six randomized suites, >=1000 cases each
Outcome feedback_loop();          // suppression mutes one context only

}  // namespace acceptance
