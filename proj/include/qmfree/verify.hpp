#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmfree/rational.hpp"

namespace qmfree {

struct CheckParams {
  int rank = 2;
  std::optional<int> max_len;  // each check has its own default
  std::uint64_t seed = 0;
};

struct CheckInfo {
  std::string id;
  std::string anchor;  // the statement being checked, quoted
  std::string description;
  int default_max_len;
};

/// Outcome of one brute-force check. For checks over several instances
/// (patterns, maps, ...) the report shows the instance with the largest
/// observed - claimed, so pass is always observed <= claimed.
struct VerificationReport {
  std::string lemma_id;
  std::optional<Rational> bound_claimed;  // nullopt: exact identity, bound 0
  Rational observed_sup;
  std::vector<std::string> witness;
  std::string space;
  bool pass = false;

  std::string ToJson() const;
};

/// Exhaustive enumeration is used up to this many inputs; beyond it the check
/// samples kSampleCount inputs from the seed.
inline constexpr std::uint64_t kExhaustiveBudget = 500000;
inline constexpr std::uint64_t kSampleCount = 100000;

const std::vector<CheckInfo>& ListChecks();
std::string ListChecksJson();

/// Throws Error(kUnknownCheck) for an unregistered id.
VerificationReport RunCheck(const std::string& id, const CheckParams& params = {});

}  // namespace qmfree
