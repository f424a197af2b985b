#pragma once

#include <string>
#include <vector>

#include "atomkit/theorems.hpp"

namespace atomkit {

// Groups up to this order are re-analysed by exhaustive enumeration; larger
// ones fall back to the library's min-cut engine for kappa and atoms.
inline constexpr std::size_t kCheckerBruteLimit = 20;

struct CheckResult {
  Verdict recorded = Verdict::hypothesis_not_met;
  Verdict recomputed = Verdict::hypothesis_not_met;
  std::vector<std::string> mismatches;

  bool consistent() const noexcept { return mismatches.empty(); }
};

// Re-derives every boolean of a serialized certificate from its group
// descriptor, input set and witnesses with straightforward set loops, sharing
// nothing with the verifiers beyond table construction. Throws ParseError on
// malformed documents.
CheckResult check_certificate(const Json& certificate);

}  // namespace atomkit
