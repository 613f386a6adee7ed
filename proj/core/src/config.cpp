#include "gnbdim/config.hpp"

#include <charconv>
#include <initializer_list>
#include <set>

#include <fmt/format.h>
#include <json.hpp>

#include "gnbdim/error.hpp"

namespace gnbdim {
namespace {

using nlohmann::ordered_json;

// Reads keys out of one JSON object and rejects anything it was not asked for.
class Section {
 public:
  Section(const ordered_json& node, std::string name) : node_(node), name_(std::move(name)) {
    if (!node_.is_object()) fail(ErrorCode::BadConfig, fmt::format("'{}' must be an object", name_));
  }

  bool has(const char* key) const { return node_.contains(key) && !node_.at(key).is_null(); }

  double number(const char* key, double fallback) {
    seen_.insert(key);
    if (!has(key)) return fallback;
    const auto& v = node_.at(key);
    if (!v.is_number()) fail(ErrorCode::BadConfig, fmt::format("{}.{} must be a number", name_, key));
    return v.get<double>();
  }

  long long integer(const char* key, long long fallback) {
    seen_.insert(key);
    if (!has(key)) return fallback;
    const auto& v = node_.at(key);
    if (!v.is_number_integer()) fail(ErrorCode::BadConfig, fmt::format("{}.{} must be an integer", name_, key));
    return v.get<long long>();
  }

  std::optional<std::string> text(const char* key) {
    seen_.insert(key);
    if (!has(key)) return std::nullopt;
    const auto& v = node_.at(key);
    if (!v.is_string()) fail(ErrorCode::BadConfig, fmt::format("{}.{} must be a string", name_, key));
    return v.get<std::string>();
  }

  const ordered_json* child(const char* key) {
    seen_.insert(key);
    return has(key) ? &node_.at(key) : nullptr;
  }

  void finish() const {
    for (const auto& [key, _] : node_.items()) {
      if (!seen_.contains(key)) fail(ErrorCode::BadConfig, fmt::format("unknown key '{}' in {}", key, name_));
    }
  }

 private:
  const ordered_json& node_;
  std::string name_;
  std::set<std::string> seen_;
};

std::vector<double> number_list(const ordered_json& node, const std::string& what) {
  if (!node.is_array()) fail(ErrorCode::BadConfig, fmt::format("{} must be an array of numbers", what));
  std::vector<double> out;
  for (const auto& v : node) {
    if (!v.is_number()) fail(ErrorCode::BadConfig, fmt::format("{} must be an array of numbers", what));
    out.push_back(v.get<double>());
  }
  return out;
}

std::size_t positive_count(long long v, const char* what) {
  if (v < 1) fail(ErrorCode::BadConfig, fmt::format("{} must be >= 1", what));
  return static_cast<std::size_t>(v);
}

NrConfig read_nr(Section s) {
  NrConfig nr = default_nr_config();
  if (auto fr = s.text("fr")) nr.range.fr = parse_fr(*fr);
  nr.range.carrier_ghz = s.number("carrier_ghz", nr.range.carrier_ghz);
  nr.guard_fraction = s.number("guard_fraction", nr.guard_fraction);
  nr.symbols_per_slot = static_cast<int>(s.integer("symbols_per_slot", nr.symbols_per_slot));
  const double channel = s.number("channel_bw_mhz", 0.0);
  if (s.has("channel_bw_mhz")) nr.channel_bw_mhz = channel;

  if (const auto* sets = s.child("bandwidth_sets")) {
    Section b(*sets, "nr.bandwidth_sets");
    if (const auto* v = b.child("FR1")) nr.bandwidth_sets.fr1_mhz = number_list(*v, "nr.bandwidth_sets.FR1");
    if (const auto* v = b.child("FR2")) nr.bandwidth_sets.fr2_mhz = number_list(*v, "nr.bandwidth_sets.FR2");
    b.finish();
  }
  if (const auto* overrides = s.child("prb_overrides")) {
    if (!overrides->is_array()) fail(ErrorCode::BadConfig, "nr.prb_overrides must be an array");
    for (const auto& o : *overrides) {
      Section e(o, "nr.prb_overrides[]");
      const double bw = e.number("bw_mhz", 0.0);
      const int mu = static_cast<int>(e.integer("mu", 0));
      const int n = static_cast<int>(e.integer("n_prb", 0));
      e.finish();
      nr.prb_overrides[{bw, mu}] = n;
    }
  }
  if (const auto* bwps = s.child("bwps")) {
    if (!bwps->is_array()) fail(ErrorCode::BadConfig, "nr.bwps must be an array");
    nr.bwps.clear();
    for (const auto& b : *bwps) {
      Section e(b, "nr.bwps[]");
      const int mu = static_cast<int>(e.integer("mu", 0));
      const double bw = e.number("bw_mhz", 0.0);
      const std::string purpose = e.text("purpose").value_or("");
      e.finish();
      nr.bwps.push_back(make_bwp(mu, bw, purpose, nr.guard_fraction, nr.prb_overrides));
    }
  } else {
    for (auto& b : nr.bwps) b = make_bwp(b.numerology.mu(), b.bw_mhz, b.purpose, nr.guard_fraction, nr.prb_overrides);
  }
  s.finish();
  return nr;
}

LinkBudget read_link(Section s, EdgeBandwidth& edge) {
  LinkBudget l;
  l.tx_power_dbm = s.number("tx_power_dbm", l.tx_power_dbm);
  l.tx_antenna_gain_dbi = s.number("tx_antenna_gain_dbi", l.tx_antenna_gain_dbi);
  l.tx_losses_db = s.number("tx_losses_db", l.tx_losses_db);
  l.rx_antenna_gain_dbi = s.number("rx_antenna_gain_dbi", l.rx_antenna_gain_dbi);
  l.rx_losses_db = s.number("rx_losses_db", l.rx_losses_db);
  l.noise_figure_db = s.number("noise_figure_db", l.noise_figure_db);
  l.required_sinr_db = s.number("required_sinr_db", l.required_sinr_db);
  l.shadow_margin_db = s.number("shadow_margin_db", l.shadow_margin_db);
  l.penetration_margin_db = s.number("penetration_margin_db", l.penetration_margin_db);
  if (auto e = s.text("edge_bandwidth")) {
    if (*e == "prb") edge = EdgeBandwidth::OnePrb;
    else if (*e == "bwp") edge = EdgeBandwidth::FullBwp;
    else fail(ErrorCode::BadConfig, fmt::format("link_budget.edge_bandwidth '{}' must be 'prb' or 'bwp'", *e));
  }
  s.finish();
  return l;
}

PropagationModel read_propagation(Section s) {
  PropagationModel m;
  const std::string kind = s.text("kind").value_or("free_space");
  if (kind == "free_space") m.kind = PropagationKind::FreeSpace;
  else if (kind == "abg") m.kind = PropagationKind::Abg;
  else fail(ErrorCode::BadPropagationModel, fmt::format("propagation.kind '{}' must be free_space or abg", kind));
  m.alpha = s.number("alpha", m.alpha);
  m.beta_db = s.number("beta_db", m.beta_db);
  m.gamma = s.number("gamma", m.gamma);
  s.finish();
  return m;
}

TrafficModel read_traffic(Section s) {
  TrafficModel t;
  t.demand_per_sub_mbps = s.number("demand_per_sub_mbps", t.demand_per_sub_mbps);
  t.target_load = s.number("target_load", t.target_load);
  t.se_bps_per_hz = s.number("se_bps_per_hz", t.se_bps_per_hz);
  t.overhead_fraction = s.number("overhead_fraction", t.overhead_fraction);
  t.subs_per_weight = s.number("subs_per_weight", t.subs_per_weight);
  s.finish();
  return t;
}

BalanceThresholds read_balance(Section s) {
  BalanceThresholds b;
  b.eps_radius = s.number("eps_radius", b.eps_radius);
  b.eps_load = s.number("eps_load", b.eps_load);
  b.max_iter = static_cast<int>(s.integer("max_iter", b.max_iter));
  b.damping = s.number("damping", b.damping);
  b.eta = s.number("eta", b.eta);
  s.finish();
  return b;
}

CostModel read_cost(Section s, double& duty) {
  CostModel c;
  c.capex_per_site = s.number("capex_per_site", c.capex_per_site);
  c.capex_amortization_years = s.number("capex_amortization_years", c.capex_amortization_years);
  c.opex_per_site_per_year = s.number("opex_per_site_per_year", c.opex_per_site_per_year);
  c.area_multiplier = s.number("area_multiplier", c.area_multiplier);
  duty = s.number("duty_fraction", duty);
  s.finish();
  return c;
}

GridOptions read_grid(Section s) {
  GridOptions g;
  g.tile_km = s.number("tile_km", g.tile_km);
  const bool any_fixed = s.has("origin_lon") || s.has("origin_lat") || s.has("n_cols") || s.has("n_rows");
  GridSpec spec;
  spec.tile_km = g.tile_km;
  spec.origin_lon = s.number("origin_lon", 0.0);
  spec.origin_lat = s.number("origin_lat", 0.0);
  spec.n_cols = positive_count(s.integer("n_cols", 1), "grid.n_cols");
  spec.n_rows = positive_count(s.integer("n_rows", 1), "grid.n_rows");
  s.finish();
  if (any_fixed) {
    if (!(s.has("origin_lon") && s.has("origin_lat") && s.has("n_cols") && s.has("n_rows"))) {
      fail(ErrorCode::BadConfig, "a fixed grid needs origin_lon, origin_lat, n_cols and n_rows");
    }
    g.fixed = spec;
  }
  return g;
}

RecordFilter read_filters(Section s) {
  RecordFilter f;
  if (auto r = s.text("radio")) f.radio = parse_radio(*r);
  if (auto p = s.text("plmn")) f.plmn = parse_plmn(*p);
  if (const auto* b = s.child("bbox")) {
    const auto v = number_list(*b, "filters.bbox");
    if (v.size() != 4) fail(ErrorCode::BadBbox, "filters.bbox needs [minlon, minlat, maxlon, maxlat]");
    f.bbox = BoundingBox{v[0], v[1], v[2], v[3]};
    f.bbox->validate();
  }
  s.finish();
  return f;
}

ordered_json numbers_json(const std::vector<double>& v) {
  ordered_json a = ordered_json::array();
  for (double x : v) a.push_back(x);
  return a;
}

}  // namespace

Window parse_window(std::string_view text) {
  const auto x = text.find_first_of("xX");
  auto parse_part = [&](std::string_view part) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size() || v == 0) {
      fail(ErrorCode::BadConfig, fmt::format("window '{}' must look like 7x7", text));
    }
    return v;
  };
  if (x == std::string_view::npos) fail(ErrorCode::BadConfig, fmt::format("window '{}' must look like 7x7", text));
  return Window{parse_part(text.substr(0, x)), parse_part(text.substr(x + 1))};
}

NrConfig default_nr_config() {
  NrConfig nr;
  nr.range = FrequencyRange{Fr::FR1, 3.5};
  nr.bwps.push_back(make_bwp(1, 100.0, "eMBB", nr.guard_fraction));
  return nr;
}

void RunConfig::validate() const {
  if (window.w_cols < 1 || window.h_rows < 1) fail(ErrorCode::BadConfig, "window must be at least 1x1");
  if (filters.bbox) filters.bbox->validate();
  if (!(grid.tile_km > 0.0)) fail(ErrorCode::BadGrid, "grid.tile_km must be > 0");
  if (grid.fixed) grid.fixed->validate();
  nr.validate();
  link.validate();
  propagation.validate();
  traffic.validate();
  balance.validate();
  cost.validate();
  if (!(duty_fraction > 0.0 && duty_fraction <= 1.0)) fail(ErrorCode::BadCostModel, "cost.duty_fraction must be in (0, 1]");
}

RunConfig parse_run_config(std::string_view json_text) {
  ordered_json root;
  try {
    root = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::BadConfig, fmt::format("config is not valid JSON: {}", e.what()));
  }
  Section s(root, "config");
  RunConfig c;
  c.input = s.text("input");
  c.out_dir = s.text("out");
  if (const auto* w = s.child("window")) {
    if (w->is_string()) {
      c.window = parse_window(w->get<std::string>());
    } else {
      Section ws(*w, "window");
      c.window.w_cols = positive_count(ws.integer("w_cols", 7), "window.w_cols");
      c.window.h_rows = positive_count(ws.integer("h_rows", 7), "window.h_rows");
      ws.finish();
    }
  }
  if (const auto* n = s.child("filters")) c.filters = read_filters(Section(*n, "filters"));
  if (const auto* n = s.child("grid")) c.grid = read_grid(Section(*n, "grid"));
  c.nr = default_nr_config();
  if (const auto* n = s.child("nr")) c.nr = read_nr(Section(*n, "nr"));
  if (const auto* n = s.child("link_budget")) c.link = read_link(Section(*n, "link_budget"), c.edge);
  if (const auto* n = s.child("propagation")) c.propagation = read_propagation(Section(*n, "propagation"));
  if (const auto* n = s.child("traffic")) c.traffic = read_traffic(Section(*n, "traffic"));
  if (const auto* n = s.child("balance")) c.balance = read_balance(Section(*n, "balance"));
  if (const auto* n = s.child("cost")) c.cost = read_cost(Section(*n, "cost"), c.duty_fraction);
  s.finish();
  c.validate();
  return c;
}

std::string run_config_to_json(const RunConfig& c) {
  ordered_json j;
  if (c.input) j["input"] = *c.input;
  if (c.out_dir) j["out"] = *c.out_dir;
  j["window"] = {{"w_cols", c.window.w_cols}, {"h_rows", c.window.h_rows}};

  ordered_json filters = ordered_json::object();
  if (c.filters.radio) filters["radio"] = std::string(to_string(*c.filters.radio));
  if (c.filters.plmn) filters["plmn"] = c.filters.plmn->to_string();
  if (c.filters.bbox) {
    const auto& b = *c.filters.bbox;
    filters["bbox"] = {b.min_lon, b.min_lat, b.max_lon, b.max_lat};
  }
  j["filters"] = filters;

  ordered_json grid{{"tile_km", c.grid.tile_km}};
  if (c.grid.fixed) {
    grid["origin_lon"] = c.grid.fixed->origin_lon;
    grid["origin_lat"] = c.grid.fixed->origin_lat;
    grid["n_cols"] = c.grid.fixed->n_cols;
    grid["n_rows"] = c.grid.fixed->n_rows;
  }
  j["grid"] = grid;

  ordered_json bwps = ordered_json::array();
  for (const auto& b : c.nr.bwps) {
    bwps.push_back({{"mu", b.numerology.mu()}, {"bw_mhz", b.bw_mhz}, {"purpose", b.purpose}});
  }
  ordered_json nr{{"fr", std::string(to_string(c.nr.range.fr))},
                  {"carrier_ghz", c.nr.range.carrier_ghz},
                  {"guard_fraction", c.nr.guard_fraction},
                  {"symbols_per_slot", c.nr.symbols_per_slot}};
  if (c.nr.channel_bw_mhz) nr["channel_bw_mhz"] = *c.nr.channel_bw_mhz;
  nr["bandwidth_sets"] = {{"FR1", numbers_json(c.nr.bandwidth_sets.fr1_mhz)},
                          {"FR2", numbers_json(c.nr.bandwidth_sets.fr2_mhz)}};
  ordered_json overrides = ordered_json::array();
  for (const auto& [key, n] : c.nr.prb_overrides) {
    overrides.push_back({{"bw_mhz", key.first}, {"mu", key.second}, {"n_prb", n}});
  }
  nr["prb_overrides"] = overrides;
  nr["bwps"] = bwps;
  j["nr"] = nr;

  const auto& l = c.link;
  j["link_budget"] = {{"tx_power_dbm", l.tx_power_dbm},
                      {"tx_antenna_gain_dbi", l.tx_antenna_gain_dbi},
                      {"tx_losses_db", l.tx_losses_db},
                      {"rx_antenna_gain_dbi", l.rx_antenna_gain_dbi},
                      {"rx_losses_db", l.rx_losses_db},
                      {"noise_figure_db", l.noise_figure_db},
                      {"required_sinr_db", l.required_sinr_db},
                      {"shadow_margin_db", l.shadow_margin_db},
                      {"penetration_margin_db", l.penetration_margin_db},
                      {"edge_bandwidth", c.edge == EdgeBandwidth::OnePrb ? "prb" : "bwp"}};

  ordered_json prop{{"kind", std::string(to_string(c.propagation.kind))}};
  if (c.propagation.kind == PropagationKind::Abg) {
    prop["alpha"] = c.propagation.alpha;
    prop["beta_db"] = c.propagation.beta_db;
    prop["gamma"] = c.propagation.gamma;
  }
  j["propagation"] = prop;

  const auto& t = c.traffic;
  j["traffic"] = {{"demand_per_sub_mbps", t.demand_per_sub_mbps},
                  {"target_load", t.target_load},
                  {"se_bps_per_hz", t.se_bps_per_hz},
                  {"overhead_fraction", t.overhead_fraction},
                  {"subs_per_weight", t.subs_per_weight}};
  const auto& b = c.balance;
  j["balance"] = {{"eps_radius", b.eps_radius},
                  {"eps_load", b.eps_load},
                  {"max_iter", b.max_iter},
                  {"damping", b.damping},
                  {"eta", b.eta}};
  const auto& k = c.cost;
  j["cost"] = {{"capex_per_site", k.capex_per_site},
               {"capex_amortization_years", k.capex_amortization_years},
               {"opex_per_site_per_year", k.opex_per_site_per_year},
               {"area_multiplier", k.area_multiplier},
               {"duty_fraction", c.duty_fraction}};
  return j.dump(2);
}

}  // namespace gnbdim
