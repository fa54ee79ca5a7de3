// Copyright 2026 The revsim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef REVSIM_ADEQUACY_HPP
#define REVSIM_ADEQUACY_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "revsim/metrics.hpp"

namespace revsim {

// Constructed triple families used to audit a metric. Parts declared
// disjoint are built over disjoint character alphabets, so they share no
// tokens and no characters.
enum class TripleFamily {
  SimStrings,         // long shared prefix, short disjoint tails
  AgreeingDeletions,  // leading block deleted by both revisions
  LhsRhsBalance,      // agreed deletion vs disagreeing insertion
  SharedContextPad,   // one triple plus its context-padded twin
  OriginVariants,     // chain of origins drifting away from fixed a, b
  DoNothing,          // hypothesis echoes the origin
};

struct FamilyParams {
  TripleFamily id = TripleFamily::AgreeingDeletions;
  int count = 1;           // instances to generate
  int part_tokens = 12;    // approximate tokens per part
  int context_factor = 20; // SimStrings: |shared prefix| >= factor * tail
  int chain_len = 5;       // OriginVariants chain length
  std::uint64_t seed = 0;
};

struct FamilyInstance {
  std::string reference;
  std::string hypothesis;
  std::string origin;
  // OriginVariants only: origins ordered by growing edit distance to the
  // fixed reference/hypothesis.
  std::vector<std::string> origin_chain;
  // SharedContextPad only: the same triple with a disjoint shared prefix
  // and suffix added to all three documents.
  std::string padded_reference;
  std::string padded_hypothesis;
  std::string padded_origin;
};

// Deterministic for a fixed seed; every instance is self-checked against
// the family's declared disjointness and distance relations before being
// returned. Throws BadParamsError on nonsensical sizes.
std::vector<FamilyInstance> generate(const FamilyParams& params);

struct PropertyResult {
  int trials = 0;
  int violations = 0;
  double worst_delta = 0.0;  // largest adverse margin observed
  std::string verdict;       // "pass", "partial" (criterion 5), or "fail"
};

struct AuditReport {
  std::string metric;
  std::array<PropertyResult, 5> properties;

  bool all_pass() const {
    for (const auto& p : properties)
      if (p.verdict == "fail") return false;
    return true;
  }
};

// Runs the five adequacy checks against a metric:
//   1. agreement on edits beats the do-nothing baseline,
//   2. a disagreeing edit strictly lowers the score,
//   3. disjoint shared context leaves the score unchanged (1e-9),
//   4. scores strictly rise along an origin-variant chain,
//   5. a misplaced but identical insertion beats a wrong one (partial).
AuditReport audit(const MetricId& metric, int trials, std::uint64_t seed);

std::string report_to_json(const AuditReport& report);
std::string report_to_text(const AuditReport& report);

}  // namespace revsim

#endif  // REVSIM_ADEQUACY_HPP
