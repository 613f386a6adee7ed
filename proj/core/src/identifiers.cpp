#include "gnbdim/identifiers.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "gnbdim/error.hpp"

namespace gnbdim {
namespace {

bool all_digits(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

void require_digits(std::string_view s, std::string_view what) {
  if (!all_digits(s)) {
    fail(ErrorCode::NonDigit, fmt::format("{} '{}' contains a non-decimal character", what, s));
  }
}

}  // namespace

Mcc Mcc::parse(std::string_view digits) {
  require_digits(digits, "MCC");
  if (digits.size() != 3) {
    fail(ErrorCode::BadLength, fmt::format("MCC '{}' must have 3 digits", digits));
  }
  return Mcc(std::string(digits));
}

Mnc Mnc::parse(std::string_view digits) {
  require_digits(digits, "MNC");
  if (digits.size() != 2 && digits.size() != 3) {
    fail(ErrorCode::BadLength, fmt::format("MNC '{}' must have 2 or 3 digits", digits));
  }
  return Mnc(std::string(digits));
}

PlmnId parse_plmn(std::string_view text) {
  require_digits(text, "PLMN");
  if (text.size() != 5 && text.size() != 6) {
    fail(ErrorCode::BadLength, fmt::format("PLMN '{}' must have 5 or 6 digits", text));
  }
  return PlmnId{Mcc::parse(text.substr(0, 3)), Mnc::parse(text.substr(3))};
}

std::string Tai::to_string() const { return fmt::format("{}-{:04X}", plmn.to_string(), tac.code); }

Tai make_tai(const PlmnId& plmn, Tac tac) { return Tai{plmn, tac}; }

Eci Eci::from_value(std::uint64_t value) {
  if (value >= kEciLimit) {
    fail(ErrorCode::OutOfRange, fmt::format("ECI {} does not fit in 28 bits", value));
  }
  return Eci(static_cast<std::uint32_t>(value));
}

Eci Eci::compose(std::uint32_t enb_id, std::uint32_t cell_id) {
  if (enb_id >= (1u << 20) || cell_id > 0xFFu) {
    fail(ErrorCode::OutOfRange, fmt::format("eNB-ID {} / cell {} out of range", enb_id, cell_id));
  }
  return Eci((enb_id << 8) | cell_id);
}

EciParts split_eci(std::uint64_t value) {
  const Eci eci = Eci::from_value(value);
  return EciParts{eci.enb_id(), eci.cell_id()};
}

}  // namespace gnbdim
