#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chaircodes/exactmath.hpp"

namespace chaircodes {

enum class VerdictStatus { Ok, Fail, NoPerfectCode, Inconclusive, Found };

std::string_view verdict_status_name(VerdictStatus s) noexcept;

/// Result of a verification or nonexistence check. Failing verdicts carry
/// the witness points that refute the claim.
struct Verdict {
  VerdictStatus status = VerdictStatus::Ok;
  std::string reason;
  std::vector<RPoint> witness;
  std::uint64_t examined = 0;

  bool ok() const noexcept { return status == VerdictStatus::Ok; }

  static Verdict pass(std::string reason = {}, std::uint64_t examined = 0) {
    return {VerdictStatus::Ok, std::move(reason), {}, examined};
  }
  static Verdict fail(std::string reason, std::vector<RPoint> witness = {}, std::uint64_t examined = 0) {
    return {VerdictStatus::Fail, std::move(reason), std::move(witness), examined};
  }
};

}  // namespace chaircodes
