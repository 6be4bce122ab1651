#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace agband {

enum class ClaimStatus { kPass, kFail, kSkipped };

std::string to_string(ClaimStatus status);

struct ClaimResult {
  std::string id;
  std::string statement;  // the claim in words
  ClaimStatus status = ClaimStatus::kSkipped;
  std::string detail;
  // Set on passing entries that carry a known, explained discrepancy.
  bool annotated = false;
};

struct VerificationReport {
  std::vector<ClaimResult> claims;

  // True iff no claim failed.
  bool overall() const noexcept;
};

// Ids of all claims, in report order.
std::vector<std::string> claim_ids();

// Replays every claim, or only `only` (ArgumentError if unknown). An
// exception inside a claim is recorded as a failure of that claim.
VerificationReport verify_claims(std::optional<std::string_view> only = {});

}  // namespace agband
