#pragma once

// LTE location identifiers: MCC/MNC/PLMN-ID, TAC/TAI and the E-UTRAN cell
// identity. Digit strings are kept as strings so that leading zeros survive
// ("01" and "1" are different operators).

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace gnbdim {

class Mcc {
 public:
  // Exactly three decimal digits.
  static Mcc parse(std::string_view digits);

  const std::string& digits() const noexcept { return digits_; }
  auto operator<=>(const Mcc&) const = default;

 private:
  explicit Mcc(std::string digits) : digits_(std::move(digits)) {}
  std::string digits_;
};

class Mnc {
 public:
  // Two or three decimal digits.
  static Mnc parse(std::string_view digits);

  const std::string& digits() const noexcept { return digits_; }
  auto operator<=>(const Mnc&) const = default;

 private:
  explicit Mnc(std::string digits) : digits_(std::move(digits)) {}
  std::string digits_;
};

struct PlmnId {
  Mcc mcc;
  Mnc mnc;

  // MCC digits followed by MNC digits, e.g. "310260".
  std::string to_string() const { return mcc.digits() + mnc.digits(); }
  auto operator<=>(const PlmnId&) const = default;
};

// Splits a 5- or 6-digit PLMN string into a 3-digit MCC and the remainder.
PlmnId parse_plmn(std::string_view text);

struct Tac {
  std::uint16_t code = 0;
  auto operator<=>(const Tac&) const = default;
};

struct Tai {
  PlmnId plmn;
  Tac tac;

  // "<plmn>-<TAC as 4 uppercase hex digits>"
  std::string to_string() const;
  auto operator<=>(const Tai&) const = default;
};

Tai make_tai(const PlmnId& plmn, Tac tac);

inline constexpr std::uint32_t kEciLimit = 1u << 28;

// 28-bit E-UTRAN cell identity: upper 20 bits eNB-ID, lower 8 bits cell.
class Eci {
 public:
  static Eci from_value(std::uint64_t value);
  static Eci compose(std::uint32_t enb_id, std::uint32_t cell_id);

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t enb_id() const noexcept { return value_ >> 8; }
  std::uint32_t cell_id() const noexcept { return value_ & 0xFFu; }
  auto operator<=>(const Eci&) const = default;

 private:
  explicit Eci(std::uint32_t value) : value_(value) {}
  std::uint32_t value_;
};

struct EciParts {
  std::uint32_t enb_id;
  std::uint32_t cell_id;
  bool operator==(const EciParts&) const = default;
};

EciParts split_eci(std::uint64_t value);

// Orders by TAC first, then ECI.
struct RegionKey {
  Tac tac;
  Eci eci;
  auto operator<=>(const RegionKey&) const = default;
};

inline RegionKey region_key(Tac tac, Eci eci) { return RegionKey{tac, eci}; }

}  // namespace gnbdim
