#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gnbdim {

// Every failure raised by the library carries one of these codes. The CLI
// maps them onto process exit codes (see commands.hpp).
enum class ErrorCode {
  // identifiers
  NonDigit,
  BadLength,
  OutOfRange,
  // ingest
  MissingHeader,
  BadCoordinate,
  BadRadio,
  BadNumeric,
  BadFieldCount,
  BadBbox,
  InputUnreadable,
  // density
  BadGrid,
  WindowTooLarge,
  NonPositiveScale,
  // nr model
  BadMu,
  BadFrequencyRange,
  UnsupportedBandwidth,
  BadGuardFraction,
  NoPrbFits,
  BwpExceedsChannel,
  BadLatencyBudget,
  // coverage
  NonPositiveBandwidth,
  BadLinkBudget,
  BadPropagationModel,
  NegativeMapl,
  NonPositiveDistance,
  OutOfBracket,
  NonPositiveArea,
  // capacity
  BadTrafficModel,
  NonPositiveDensity,
  ZeroSubscribers,
  // balance
  BadThresholds,
  LoadTooHigh,
  // economics
  BadCostModel,
  UndefinedCost,
  // config
  BadConfig,
};

std::string_view to_string(ErrorCode code) noexcept;

// True for codes that describe an infeasible radio design rather than a
// malformed input.
bool is_model_infeasibility(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace gnbdim
