#include "chaircodes/verdict.hpp"

namespace chaircodes {

std::string_view verdict_status_name(VerdictStatus s) noexcept {
  switch (s) {
    case VerdictStatus::Ok: return "Ok";
    case VerdictStatus::Fail: return "Fail";
    case VerdictStatus::NoPerfectCode: return "NoPerfectCode";
    case VerdictStatus::Inconclusive: return "Inconclusive";
    case VerdictStatus::Found: return "Found";
  }
  return "Unknown";
}

}  // namespace chaircodes
