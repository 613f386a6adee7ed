#include "gnbdim/commands.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "gnbdim/geojson.hpp"

#ifndef GNBDIM_VERSION
#define GNBDIM_VERSION "0.0.0"
#endif

namespace gnbdim {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) out += fmt::format("{:02x}", digest[i]);
  return out;
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// JSON has no infinity; an unbounded range is written as null.
ordered_json finite_or_null(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

fs::path require_out_dir(const RunConfig& config) {
  if (!config.out_dir) fail(ErrorCode::BadConfig, "an output directory is required (--out)");
  fs::path dir(*config.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) fail(ErrorCode::InputUnreadable, fmt::format("cannot create '{}': {}", dir.string(), ec.message()));
  return dir;
}

void write_file(const fs::path& path, std::string_view content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) fail(ErrorCode::InputUnreadable, fmt::format("cannot write '{}'", path.string()));
  f << content;
}

struct Loaded {
  std::string sha256;
  IngestReport report;
  std::vector<CellRecord> records;  // after filtering
};

Loaded load_records(const RunConfig& config) {
  if (!config.input) fail(ErrorCode::BadConfig, "an input file is required (--input)");
  const std::string bytes = read_input_bytes(*config.input);
  auto ingest = parse_csv(std::string_view(bytes));
  Loaded out{sha256_hex(bytes), ingest.report, filter_records(ingest.records, config.filters)};
  spdlog::info("ingested {}: {} rows, {} kept, {} rejected, {} after filters", *config.input, ingest.report.rows_read,
               ingest.report.rows_kept, ingest.report.rows_rejected, out.records.size());
  return out;
}

ordered_json report_json(const IngestReport& r) {
  ordered_json reasons = ordered_json::object();
  for (const auto& [code, n] : r.reject_reasons) reasons[std::string(to_string(code))] = n;
  return {{"rows_read", r.rows_read},
          {"rows_kept", r.rows_kept},
          {"rows_rejected", r.rows_rejected},
          {"reject_reasons", reasons}};
}

struct DensityOutcome {
  DensityGrid grid;
  DeploymentArea area;
};

DensityOutcome run_density(const RunConfig& config, std::span<const CellRecord> records) {
  GridSpec spec;
  if (config.grid.fixed) {
    spec = *config.grid.fixed;
  } else {
    spec = grid_covering(records, config.grid.tile_km);
    // A fitted grid is never smaller than the window.
    spec.n_cols = std::max(spec.n_cols, config.window.w_cols);
    spec.n_rows = std::max(spec.n_rows, config.window.h_rows);
    spec.validate();
  }
  DensityGrid grid = bin(records, spec);
  if (grid.dropped > 0) spdlog::info("{} records fell outside the grid", grid.dropped);
  const DeploymentArea area = find_5gda(grid, config.window.w_cols, config.window.h_rows);
  return {std::move(grid), area};
}

void write_density_outputs(const fs::path& dir, const DensityOutcome& d) {
  std::ostringstream csv;
  write_grid_csv(csv, d.grid);
  write_file(dir / "grid.csv", csv.str());
  write_file(dir / "grid.geojson", grid_geojson(d.grid) + "\n");
  write_file(dir / "fivegda.geojson", deployment_area_geojson(d.grid.spec(), d.area) + "\n");
}

ordered_json area_json(const DensityOutcome& d) {
  const auto& s = d.grid.spec();
  return {{"col0", d.area.col0},
          {"row0", d.area.row0},
          {"w_cols", d.area.w_cols},
          {"h_rows", d.area.h_rows},
          {"total_weight", d.area.total_weight},
          {"area_km2", d.area.area_km2},
          {"grid",
           {{"origin_lon", s.origin_lon},
            {"origin_lat", s.origin_lat},
            {"tile_km", s.tile_km},
            {"n_cols", s.n_cols},
            {"n_rows", s.n_rows},
            {"total_weight", d.grid.total_weight()},
            {"towers", d.grid.total_towers()},
            {"dropped", d.grid.dropped}}}};
}

ordered_json numerology_json(const NrConfig& nr) {
  ordered_json table = ordered_json::array();
  for (int mu = 0; mu <= kMaxMu; ++mu) {
    table.push_back({{"mu", mu}, {"scs_khz", scs_khz(mu)}, {"slot_ms", slot_ms(mu)}, {"cyclic_prefix", "normal"}});
  }
  ordered_json bwps = ordered_json::array();
  for (const auto& b : nr.bwps) {
    bwps.push_back({{"mu", b.numerology.mu()},
                    {"bw_mhz", b.bw_mhz},
                    {"n_prb", b.n_prb},
                    {"scs_khz", b.numerology.scs_khz()},
                    {"slot_ms", b.numerology.slot_ms()},
                    {"purpose", b.purpose}});
  }
  return {{"numerology_table", table},
          {"numerology_note",
           "subcarrier spacing is generated as 15*2^mu kHz, so mu=1 is 30 kHz; a 20 kHz entry for mu=1 would "
           "break the 1 ms/2^mu slot scaling that every other row follows"},
          {"bwps", bwps}};
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_model_infeasibility(e.code()) ? kExitInfeasible : kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace

std::string_view version() noexcept { return GNBDIM_VERSION; }

void configure_logging_from_env() {
  auto logger = spdlog::get("gnbdim");
  if (!logger) logger = spdlog::stderr_color_mt("gnbdim");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("GNBDIM_LOG")) {
    const auto level = spdlog::level::from_str(env);
    // from_str maps unknown names to "off"; only honour it when asked for.
    if (level != spdlog::level::off || std::string_view(env) == "off") spdlog::set_level(level);
  }
}

int cmd_ingest(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Loaded loaded = load_records(config);
    ordered_json j = report_json(loaded.report);
    j["records_after_filters"] = loaded.records.size();
    j["input_sha256"] = loaded.sha256;
    if (config.out_dir) {
      const fs::path dir = require_out_dir(config);
      std::ostringstream csv;
      write_records_csv(csv, loaded.records);
      write_file(dir / "records.csv", csv.str());
      j["records_file"] = (dir / "records.csv").string();
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  });
}

int cmd_density(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const fs::path dir = require_out_dir(config);
    const Loaded loaded = load_records(config);
    const DensityOutcome d = run_density(config, loaded.records);
    write_density_outputs(dir, d);
    out << area_json(d).dump(2) << '\n';
    return kExitOk;
  });
}

int cmd_dimension(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const fs::path dir = require_out_dir(config);
    const Loaded loaded = load_records(config);
    const DensityOutcome d = run_density(config, loaded.records);
    write_density_outputs(dir, d);

    const double rho = subscriber_density(d.area, config.traffic.subs_per_weight);
    BalanceProblem problem;
    problem.link = config.link;
    problem.model = config.propagation;
    problem.f_mhz = config.carrier_mhz();
    problem.nr = config.nr;
    problem.traffic = config.traffic;
    problem.rho_subs_per_km2 = rho;
    problem.area_km2 = d.area.area_km2;
    problem.edge = config.edge;
    const DimensioningResult r = iterate_balance(problem, config.balance);
    const CostReport cost = cost_per_bit(r, r.capacity_mbps, config.cost, config.duty_fraction);

    const std::string sites = sites_geojson(d.grid.spec(), d.area, r.plan.deployment_radius_km);
    write_file(dir / "sites.geojson", sites + "\n");
    const std::size_t lattice_points =
        hex_lattice(static_cast<double>(d.area.w_cols) * d.grid.spec().tile_km,
                    static_cast<double>(d.area.h_rows) * d.grid.spec().tile_km, r.plan.deployment_radius_km)
            .size();

    ordered_json area = area_json(d);
    area["subscriber_density_per_km2"] = rho;

    ordered_json summary;
    summary["tool"] = {{"name", "gnbdim"}, {"version", std::string(version())}};
    summary["generated_at"] = utc_now();
    summary["input"] = {{"path", *config.input}, {"sha256", loaded.sha256}};
    summary["ingest"] = report_json(loaded.report);
    summary["ingest"]["records_after_filters"] = loaded.records.size();
    summary["deployment_area"] = area;
    summary["nr"] = numerology_json(config.nr);
    summary["dimensioning"] = {
        {"link_direction", "direction-agnostic (single worst-link budget)"},
        {"edge_bandwidth_hz", edge_bandwidth_hz(config.nr, config.edge)},
        {"carrier_mhz", problem.f_mhz},
        {"mapl_db", r.mapl_db},
        {"interference_margin_db", r.interference_margin_db},
        {"r_cov_km", r.r_cov_km},
        {"r_cap_km", finite_or_null(r.r_cap_km)},
        {"assumed_load", r.assumed_load},
        {"actual_load", r.actual_load},
        {"classification", std::string(to_string(r.classification))},
        {"iterations", r.iterations},
        {"converged", r.converged},
        {"cell_capacity_mbps", r.capacity_mbps},
        {"max_subs_per_cell", r.plan.max_subs_per_cell},
        {"deployment_radius_km", r.plan.deployment_radius_km},
        {"n_sites_coverage", r.plan.n_sites_coverage},
        {"n_sites_capacity", r.plan.n_sites_capacity},
        {"n_sites_final", r.plan.n_sites_final},
        {"utilization", r.plan.utilization},
    };
    summary["cost"] = {{"annual_cost", cost.annual_cost},
                       {"annual_bits", cost.annual_bits},
                       {"cost_per_bit", cost.cost_per_bit ? ordered_json(*cost.cost_per_bit) : ordered_json(nullptr)},
                       {"mean_utilization", cost.mean_utilization},
                       {"duty_fraction", config.duty_fraction}};
    summary["sites"] = {{"file", "sites.geojson"}, {"lattice_points", lattice_points}};
    summary["config"] = ordered_json::parse(run_config_to_json(config));
    summary["config"].erase("out");

    const std::string text = summary.dump(2);
    write_file(dir / "summary.json", text + "\n");
    out << text << '\n';
    return kExitOk;
  });
}

std::string strip_timestamp(std::string_view summary_json) {
  auto j = ordered_json::parse(summary_json);
  j.erase("generated_at");
  return j.dump(2);
}

}  // namespace gnbdim
