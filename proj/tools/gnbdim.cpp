// gnbdim: 5G deployment-area selection and balanced coverage/capacity
// dimensioning from crowdsourced cell-tower data.
//
//   gnbdim ingest    --input cells.csv.gz [--out dir] [--radio LTE] [--plmn 310260] [--bbox ...]
//   gnbdim density   --input cells.csv --out dir [--config run.json] [--window 7x7]
//   gnbdim dimension --config run.json [--input cells.csv] [--out dir]

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gnbdim/commands.hpp"
#include "gnbdim/config.hpp"
#include "gnbdim/error.hpp"
#include "gnbdim/opencellid.hpp"

namespace {

struct Flags {
  std::string config;
  std::string input;
  std::string out;
  std::string radio;
  std::string plmn;
  std::string bbox;
  std::string window;
};

void add_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "JSON run configuration");
  cmd->add_option("--input", f.input, "OpenCelliD CSV export (.csv or .csv.gz)");
  cmd->add_option("--out", f.out, "Output directory");
  cmd->add_option("--radio", f.radio, "Keep one radio type (GSM, UMTS, LTE, NR, CDMA)");
  cmd->add_option("--plmn", f.plmn, "Keep one operator, e.g. 310260");
  cmd->add_option("--bbox", f.bbox, "minlon,minlat,maxlon,maxlat");
  cmd->add_option("--window", f.window, "Deployment window in tiles, e.g. 7x7");
}

gnbdim::RunConfig build_config(const Flags& f) {
  using namespace gnbdim;
  RunConfig config = f.config.empty() ? parse_run_config("{}") : parse_run_config(read_input_bytes(f.config));
  if (!f.input.empty()) config.input = f.input;
  if (!f.out.empty()) config.out_dir = f.out;
  if (!f.radio.empty()) config.filters.radio = parse_radio(f.radio);
  if (!f.plmn.empty()) config.filters.plmn = parse_plmn(f.plmn);
  if (!f.bbox.empty()) config.filters.bbox = parse_bbox(f.bbox);
  if (!f.window.empty()) config.window = parse_window(f.window);
  config.validate();
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  gnbdim::configure_logging_from_env();

  CLI::App app{"5G radio network dimensioning from crowdsourced cell-tower data"};
  app.set_version_flag("--version", std::string(gnbdim::version()));
  app.require_subcommand(1);

  Flags flags;
  auto* ingest = app.add_subcommand("ingest", "Validate and filter an OpenCelliD export");
  auto* density = app.add_subcommand("density", "Rasterize towers and locate the deployment area");
  auto* dimension = app.add_subcommand("dimension", "Run the full dimensioning pipeline");
  for (auto* cmd : {ingest, density, dimension}) add_flags(cmd, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : gnbdim::kExitInput;
  }

  gnbdim::RunConfig config;
  try {
    config = build_config(flags);
  } catch (const gnbdim::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return gnbdim::kExitInput;
  }

  if (ingest->parsed()) return gnbdim::cmd_ingest(config, std::cout, std::cerr);
  if (density->parsed()) return gnbdim::cmd_density(config, std::cout, std::cerr);
  return gnbdim::cmd_dimension(config, std::cout, std::cerr);
}
