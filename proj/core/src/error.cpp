#include "gnbdim/error.hpp"

namespace gnbdim {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonDigit: return "NonDigit";
    case ErrorCode::BadLength: return "BadLength";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::MissingHeader: return "MissingHeader";
    case ErrorCode::BadCoordinate: return "BadCoordinate";
    case ErrorCode::BadRadio: return "BadRadio";
    case ErrorCode::BadNumeric: return "BadNumeric";
    case ErrorCode::BadFieldCount: return "BadFieldCount";
    case ErrorCode::BadBbox: return "BadBbox";
    case ErrorCode::InputUnreadable: return "InputUnreadable";
    case ErrorCode::BadGrid: return "BadGrid";
    case ErrorCode::WindowTooLarge: return "WindowTooLarge";
    case ErrorCode::NonPositiveScale: return "NonPositiveScale";
    case ErrorCode::BadMu: return "BadMu";
    case ErrorCode::BadFrequencyRange: return "BadFrequencyRange";
    case ErrorCode::UnsupportedBandwidth: return "UnsupportedBandwidth";
    case ErrorCode::BadGuardFraction: return "BadGuardFraction";
    case ErrorCode::NoPrbFits: return "NoPrbFits";
    case ErrorCode::BwpExceedsChannel: return "BwpExceedsChannel";
    case ErrorCode::BadLatencyBudget: return "BadLatencyBudget";
    case ErrorCode::NonPositiveBandwidth: return "NonPositiveBandwidth";
    case ErrorCode::BadLinkBudget: return "BadLinkBudget";
    case ErrorCode::BadPropagationModel: return "BadPropagationModel";
    case ErrorCode::NegativeMapl: return "NegativeMapl";
    case ErrorCode::NonPositiveDistance: return "NonPositiveDistance";
    case ErrorCode::OutOfBracket: return "OutOfBracket";
    case ErrorCode::NonPositiveArea: return "NonPositiveArea";
    case ErrorCode::BadTrafficModel: return "BadTrafficModel";
    case ErrorCode::NonPositiveDensity: return "NonPositiveDensity";
    case ErrorCode::ZeroSubscribers: return "ZeroSubscribers";
    case ErrorCode::BadThresholds: return "BadThresholds";
    case ErrorCode::LoadTooHigh: return "LoadTooHigh";
    case ErrorCode::BadCostModel: return "BadCostModel";
    case ErrorCode::UndefinedCost: return "UndefinedCost";
    case ErrorCode::BadConfig: return "BadConfig";
  }
  return "Unknown";
}

bool is_model_infeasibility(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NegativeMapl:
    case ErrorCode::OutOfBracket:
    case ErrorCode::ZeroSubscribers:
    case ErrorCode::LoadTooHigh:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace gnbdim
