#include "gnbdim/opencellid.hpp"

#include <zlib.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

namespace gnbdim {
namespace {

constexpr std::size_t kColumns = 14;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::array<std::string_view, kColumns> split_row(std::string_view line) {
  std::array<std::string_view, kColumns> out{};
  std::size_t n = 0;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    const auto field = line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (n == kColumns) fail(ErrorCode::BadFieldCount, "more than 14 columns");
    out[n++] = trim(field);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (n != kColumns) fail(ErrorCode::BadFieldCount, fmt::format("expected 14 columns, found {}", n));
  return out;
}

// Accepts U+2212 (UTF-8 E2 88 92) as a minus sign.
std::string normalize_minus(std::string_view s) {
  static constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
  std::string out(s);
  if (out.starts_with(kUnicodeMinus)) out.replace(0, kUnicodeMinus.size(), "-");
  return out;
}

template <typename T>
T parse_integer(std::string_view field, std::string_view name) {
  const std::string text = normalize_minus(field);
  T value{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    fail(ErrorCode::BadNumeric, fmt::format("{} '{}' is not an integer", name, field));
  }
  return value;
}

double parse_real(std::string_view field, std::string_view name) {
  const std::string text = normalize_minus(field);
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    fail(ErrorCode::BadNumeric, fmt::format("{} '{}' is not a number", name, field));
  }
  return value;
}

// The export stores MCC and MNC as integers, so "01" arrives as "1".
std::string zero_pad(std::string_view field, std::size_t width, std::string_view name) {
  const auto value = parse_integer<std::uint32_t>(field, name);
  if (value > 999) fail(ErrorCode::BadNumeric, fmt::format("{} '{}' exceeds 3 digits", name, field));
  std::string digits(field);
  if (digits.front() == '+') digits.erase(0, 1);
  if (digits.size() > 3) fail(ErrorCode::BadNumeric, fmt::format("{} '{}' exceeds 3 digits", name, field));
  if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
  return digits;
}

bool is_header(std::string_view line) {
  static constexpr std::string_view kBom = "\xEF\xBB\xBF";
  if (line.starts_with(kBom)) line.remove_prefix(kBom.size());
  return trim(line) == kOpenCellIdHeader;
}

}  // namespace

std::string_view to_string(Radio radio) noexcept {
  switch (radio) {
    case Radio::GSM: return "GSM";
    case Radio::UMTS: return "UMTS";
    case Radio::LTE: return "LTE";
    case Radio::NR: return "NR";
    case Radio::CDMA: return "CDMA";
  }
  return "?";
}

Radio parse_radio(std::string_view text) {
  std::string upper(trim(text));
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (Radio r : {Radio::GSM, Radio::UMTS, Radio::LTE, Radio::NR, Radio::CDMA}) {
    if (upper == to_string(r)) return r;
  }
  fail(ErrorCode::BadRadio, fmt::format("unknown radio type '{}'", text));
}

CellRecord parse_row(std::string_view line) {
  const auto f = split_row(line);

  const Radio radio = parse_radio(f[0]);
  const std::string mcc = zero_pad(f[1], 3, "mcc");
  const std::string mnc = zero_pad(f[2], 2, "net");
  const auto area = parse_integer<std::uint32_t>(f[3], "area");
  if (area > 0xFFFFu) fail(ErrorCode::BadNumeric, fmt::format("area {} exceeds the 16-bit TAC range", area));
  const auto cell = parse_integer<std::uint64_t>(f[4], "cell");
  if (radio == Radio::LTE && cell >= kEciLimit) {
    fail(ErrorCode::BadNumeric, fmt::format("LTE cell {} exceeds 28 bits", cell));
  }
  const double lon = parse_real(f[6], "lon");
  const double lat = parse_real(f[7], "lat");
  const double range = parse_real(f[8], "range");
  const auto samples = parse_integer<std::int64_t>(f[9], "samples");
  const auto created = parse_integer<std::int64_t>(f[11], "created");
  const auto updated = parse_integer<std::int64_t>(f[12], "updated");
  std::optional<double> avg_signal;
  if (!f[13].empty()) avg_signal = parse_real(f[13], "averageSignal");

  if (!std::isfinite(range) || range < 0.0) fail(ErrorCode::BadNumeric, fmt::format("range '{}' must be >= 0", f[8]));
  if (samples < 0) fail(ErrorCode::BadNumeric, fmt::format("samples '{}' must be >= 0", f[9]));
  if (avg_signal && !std::isfinite(*avg_signal)) fail(ErrorCode::BadNumeric, "averageSignal is not finite");
  if (!(lon >= -180.0 && lon <= 180.0) || !(lat >= -90.0 && lat <= 90.0)) {
    fail(ErrorCode::BadCoordinate, fmt::format("({}, {}) outside lon/lat bounds", f[6], f[7]));
  }

  PlmnId plmn{Mcc::parse(mcc), Mnc::parse(mnc)};
  return CellRecord{radio,   std::move(plmn), Tac{static_cast<std::uint16_t>(area)}, cell,
                    lon,     lat,             range,
                    static_cast<std::uint64_t>(samples),
                    created, updated,         avg_signal};
}

IngestResult parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || !is_header(line)) {
    fail(ErrorCode::MissingHeader, "first row is not the OpenCelliD header");
  }

  IngestResult result;
  auto& report = result.report;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    ++report.rows_read;
    try {
      result.records.push_back(parse_row(line));
      ++report.rows_kept;
    } catch (const Error& e) {
      ++report.rows_rejected;
      ++report.reject_reasons[e.code()];
    }
  }
  return result;
}

IngestResult parse_csv(std::string_view bytes) {
  std::istringstream in{std::string(bytes)};
  return parse_csv(in);
}

std::string read_input_bytes(const std::filesystem::path& path) {
  const std::string name = path.string();
  if (name.ends_with(".gz")) {
    gzFile gz = gzopen(name.c_str(), "rb");
    if (gz == nullptr) fail(ErrorCode::InputUnreadable, fmt::format("cannot open '{}'", name));
    std::string out;
    std::array<char, 1 << 16> buf{};
    int n = 0;
    while ((n = gzread(gz, buf.data(), static_cast<unsigned>(buf.size()))) > 0) {
      out.append(buf.data(), static_cast<std::size_t>(n));
    }
    int errnum = Z_OK;
    const char* msg = gzerror(gz, &errnum);
    const std::string detail = msg ? msg : "";
    gzclose(gz);
    if (n < 0 || (errnum != Z_OK && errnum != Z_STREAM_END)) {
      fail(ErrorCode::InputUnreadable, fmt::format("cannot inflate '{}': {}", name, detail));
    }
    return out;
  }

  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::InputUnreadable, fmt::format("cannot open '{}'", name));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void BoundingBox::validate() const {
  if (!(min_lon <= max_lon) || !(min_lat <= max_lat)) {
    fail(ErrorCode::BadBbox, fmt::format("bbox [{},{}]x[{},{}] has min > max", min_lon, max_lon, min_lat, max_lat));
  }
}

BoundingBox parse_bbox(std::string_view text) {
  std::vector<double> v;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto field = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    try {
      v.push_back(parse_real(field, "bbox"));
    } catch (const Error&) {
      fail(ErrorCode::BadBbox, fmt::format("bbox '{}' is not minlon,minlat,maxlon,maxlat", text));
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (v.size() != 4) fail(ErrorCode::BadBbox, fmt::format("bbox '{}' needs exactly 4 values", text));
  BoundingBox box{v[0], v[1], v[2], v[3]};
  box.validate();
  return box;
}

std::vector<CellRecord> filter_records(std::span<const CellRecord> records, const RecordFilter& filter) {
  if (filter.bbox) filter.bbox->validate();
  std::vector<CellRecord> out;
  for (const auto& r : records) {
    if (filter.radio && r.radio != *filter.radio) continue;
    if (filter.plmn && r.plmn != *filter.plmn) continue;
    if (filter.bbox && !filter.bbox->contains(r.lon, r.lat)) continue;
    out.push_back(r);
  }
  return out;
}

void write_records_csv(std::ostream& out, std::span<const CellRecord> records) {
  out << kOpenCellIdHeader << '\n';
  for (const auto& r : records) {
    out << fmt::format("{},{},{},{},{},,{},{},{},{},,{},{},", to_string(r.radio), r.plmn.mcc.digits(),
                       r.plmn.mnc.digits(), r.area.code, r.cell, r.lon, r.lat, r.range_m, r.samples, r.created,
                       r.updated);
    if (r.avg_signal) out << fmt::format("{}", *r.avg_signal);
    out << '\n';
  }
}

}  // namespace gnbdim
