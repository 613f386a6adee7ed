#pragma once

// Reader for the OpenCelliD public CSV export:
//
//   radio,mcc,net,area,cell,unit,lon,lat,range,samples,changeable,created,updated,averageSignal
//
// Bad rows are skipped and counted; only a missing or garbled header aborts.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gnbdim/error.hpp"
#include "gnbdim/identifiers.hpp"

namespace gnbdim {

inline constexpr std::string_view kOpenCellIdHeader =
    "radio,mcc,net,area,cell,unit,lon,lat,range,samples,changeable,created,updated,averageSignal";

enum class Radio { GSM, UMTS, LTE, NR, CDMA };

std::string_view to_string(Radio radio) noexcept;
// Case-insensitive; throws BadRadio.
Radio parse_radio(std::string_view text);

struct CellRecord {
  Radio radio;
  PlmnId plmn;
  Tac area;
  std::uint64_t cell;  // ECI for LTE
  double lon;
  double lat;
  double range_m;
  std::uint64_t samples;  // traffic-weight proxy downstream
  std::int64_t created;
  std::int64_t updated;
  std::optional<double> avg_signal;  // dBm; absent when the field is empty

  bool operator==(const CellRecord&) const = default;
};

struct IngestReport {
  std::size_t rows_read = 0;
  std::size_t rows_kept = 0;
  std::size_t rows_rejected = 0;
  std::map<ErrorCode, std::size_t> reject_reasons;

  bool operator==(const IngestReport&) const = default;
};

struct IngestResult {
  std::vector<CellRecord> records;
  IngestReport report;
};

IngestResult parse_csv(std::istream& in);
IngestResult parse_csv(std::string_view bytes);

// Parses one data row; throws Error with the row's reject reason.
CellRecord parse_row(std::string_view line);

// Reads a whole file, transparently inflating it when the name ends in ".gz".
// Throws InputUnreadable.
std::string read_input_bytes(const std::filesystem::path& path);

struct BoundingBox {
  double min_lon;
  double min_lat;
  double max_lon;
  double max_lat;

  // Throws BadBbox unless min <= max on both axes.
  void validate() const;
  bool contains(double lon, double lat) const noexcept {
    return lon >= min_lon && lon <= max_lon && lat >= min_lat && lat <= max_lat;
  }
  bool operator==(const BoundingBox&) const = default;
};

// "minlon,minlat,maxlon,maxlat"
BoundingBox parse_bbox(std::string_view text);

struct RecordFilter {
  std::optional<Radio> radio;
  std::optional<PlmnId> plmn;
  std::optional<BoundingBox> bbox;
};

// Keeps records matching every present predicate, in input order.
std::vector<CellRecord> filter_records(std::span<const CellRecord> records, const RecordFilter& filter);

// Writes records back out in the export layout. `unit` and `changeable` are
// written empty; the MNC keeps its leading zeros.
void write_records_csv(std::ostream& out, std::span<const CellRecord> records);

}  // namespace gnbdim
