#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chaircodes {

enum class Errc {
  InvalidArgument,
  ParseError,
  InvalidChair,
  DimensionMismatch,
  NotInvertible,
  NonSquare,
  SingularMatrix,
  NotDiscrete,
  NonIntegerLattice,
  BudgetExceeded,
  BadModulus,
  HypothesisViolated,
  NotPerfect,
  NotAPacking,
  NotATiling,
  BadParameters,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Raised by general_chair_splitting; index is 0-based.
class HypothesisViolated : public Error {
 public:
  HypothesisViolated(std::size_t index, const std::string& what)
      : Error(Errc::HypothesisViolated, what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace chaircodes
