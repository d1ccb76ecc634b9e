#include "jcsim/config.hpp"

#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

namespace jcsim {

namespace {

using json = nlohmann::json;

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw config_error("unknown key \"" + (where.empty() ? it.key() : where + "." + it.key()) +
                         "\"");
}

double as_number(const json& v, const std::string& key) {
  if (!v.is_number()) throw config_error("key \"" + key + "\" must be a number");
  return v.get<double>();
}

int as_int(const json& v, const std::string& key) {
  if (!v.is_number_integer()) throw config_error("key \"" + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<double> as_times(const json& v, const std::string& key) {
  if (!v.is_array()) throw config_error("key \"" + key + "\" must be an array of numbers");
  std::vector<double> out;
  for (const auto& e : v) out.push_back(as_number(e, key));
  return out;
}

// omega0 may be a number or a resonance label resolved against the system.
double resolve_omega0(const json& v, const SystemParams& sys, std::string& raw) {
  if (v.is_number()) {
    raw = v.dump();
    return v.get<double>();
  }
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    raw = s;
    auto [ep, em] = single_photon_resonances(sys);
    if (s == "E1+") return ep.real();
    if (s == "E1-") return em.real();
    try {  // numeric strings show up when a resolved config is parsed back
      size_t pos = 0;
      double x = std::stod(s, &pos);
      if (pos == s.size()) return x;
    } catch (const std::exception&) {
    }
    throw config_error("omega0 must be a number or one of \"E1+\", \"E1-\"");
  }
  throw config_error("omega0 must be a number or one of \"E1+\", \"E1-\"");
}

}  // namespace

FrequencyGrid RunConfig::grid() const {
  double center = gridc.center.value_or(pulse.omega0);
  double span = gridc.span.value_or(gridc.span_in_gamma0 * pulse.gamma0);
  return make_grid(center, span, gridc.n);
}

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw config_error(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw config_error("config must be a JSON object");

  static const std::set<std::string> top = {
      "system", "pulse", "grid", "run", "analysis", "units",
      // flat shortcuts
      "g", "kappa", "delta_a", "gamma0", "omega0", "t0", "photon_count",
      "n", "span", "span_in_gamma0", "center", "t_end", "output_dt", "output_times",
      "snapshot_times", "rtol", "atol", "gamma_reg", "n_modes", "omega0_scan", "scan_points"};
  check_keys(j, top, "");

  if (j.contains("units")) {
    if (!j["units"].is_string() || j["units"].get<std::string>() != "kappa=1")
      throw config_error("units must be \"kappa=1\"");
  }

  RunConfig cfg;

  json sys = j.value("system", json::object());
  check_keys(sys, {"g", "kappa", "delta_a"}, "system");
  for (const char* k : {"g", "kappa", "delta_a"})
    if (j.contains(k)) sys[k] = j[k];
  if (sys.contains("g")) cfg.system.g = as_number(sys["g"], "g");
  if (sys.contains("kappa")) cfg.system.kappa = as_number(sys["kappa"], "kappa");
  if (sys.contains("delta_a")) cfg.system.delta_a = as_number(sys["delta_a"], "delta_a");
  cfg.system.validate();

  json pu = j.value("pulse", json::object());
  check_keys(pu, {"gamma0", "omega0", "omega0_spec", "t0", "photon_count"}, "pulse");
  for (const char* k : {"gamma0", "omega0", "t0", "photon_count"})
    if (j.contains(k)) pu[k] = j[k];
  if (pu.contains("gamma0")) cfg.pulse.gamma0 = as_number(pu["gamma0"], "gamma0");
  if (pu.contains("t0")) cfg.pulse.t0 = as_number(pu["t0"], "t0");
  if (pu.contains("photon_count")) cfg.pulse.photon_count = as_int(pu["photon_count"], "photon_count");
  // omega0_spec (as emitted in resolved configs) wins over the resolved number,
  // so a resolved config parses back to the same RunConfig.
  if (pu.contains("omega0_spec"))
    cfg.pulse.omega0 = resolve_omega0(pu["omega0_spec"], cfg.system, cfg.omega0_raw);
  else if (pu.contains("omega0"))
    cfg.pulse.omega0 = resolve_omega0(pu["omega0"], cfg.system, cfg.omega0_raw);
  else
    cfg.omega0_raw = "0";
  cfg.pulse.validate();

  json gr = j.value("grid", json::object());
  check_keys(gr, {"n", "span", "span_in_gamma0", "center"}, "grid");
  for (const char* k : {"n", "span", "span_in_gamma0", "center"})
    if (j.contains(k)) gr[k] = j[k];
  if (gr.contains("n")) cfg.gridc.n = as_int(gr["n"], "n");
  if (gr.contains("span")) cfg.gridc.span = as_number(gr["span"], "span");
  if (gr.contains("span_in_gamma0"))
    cfg.gridc.span_in_gamma0 = as_number(gr["span_in_gamma0"], "span_in_gamma0");
  if (gr.contains("center")) cfg.gridc.center = as_number(gr["center"], "center");

  json rn = j.value("run", json::object());
  check_keys(rn, {"t_end", "output_dt", "output_times", "snapshot_times", "rtol", "atol"}, "run");
  for (const char* k : {"t_end", "output_dt", "output_times", "snapshot_times", "rtol", "atol"})
    if (j.contains(k)) rn[k] = j[k];
  if (rn.contains("t_end")) cfg.run.t_end = as_number(rn["t_end"], "t_end");
  if (rn.contains("output_dt")) cfg.run.output_dt = as_number(rn["output_dt"], "output_dt");
  if (rn.contains("output_times")) cfg.run.output_times = as_times(rn["output_times"], "output_times");
  if (rn.contains("snapshot_times"))
    cfg.run.snapshot_times = as_times(rn["snapshot_times"], "snapshot_times");
  if (rn.contains("rtol")) cfg.run.rtol = as_number(rn["rtol"], "rtol");
  if (rn.contains("atol")) cfg.run.atol = as_number(rn["atol"], "atol");

  json an = j.value("analysis", json::object());
  check_keys(an, {"gamma_reg", "n_modes", "omega0_scan", "scan_points"}, "analysis");
  for (const char* k : {"gamma_reg", "n_modes", "omega0_scan", "scan_points"})
    if (j.contains(k)) an[k] = j[k];
  if (an.contains("gamma_reg")) {
    cfg.analysis.gamma_reg = as_number(an["gamma_reg"], "gamma_reg");
    if (!(*cfg.analysis.gamma_reg > 0.0)) throw config_error("gamma_reg must be > 0");
  }
  if (an.contains("n_modes")) {
    cfg.analysis.n_modes = as_int(an["n_modes"], "n_modes");
    if (cfg.analysis.n_modes < 1) throw config_error("n_modes must be >= 1");
  }
  if (an.contains("scan_points")) {
    cfg.analysis.scan_points = as_int(an["scan_points"], "scan_points");
    if (cfg.analysis.scan_points < 2) throw config_error("scan_points must be >= 2");
  }
  if (an.contains("omega0_scan")) {
    auto v = as_times(an["omega0_scan"], "omega0_scan");
    if (v.size() != 2 || !(v[0] < v[1]))
      throw config_error("omega0_scan must be [lo, hi] with lo < hi");
    cfg.analysis.omega0_scan = std::make_pair(v[0], v[1]);
  }

  // Physics re-validation with everything resolved.
  cfg.grid();
  if (!(cfg.run.t_end > 0.0)) throw config_error("t_end must be > 0");
  if (!(cfg.run.rtol > 0.0) || !(cfg.run.atol > 0.0))
    throw config_error("rtol and atol must be > 0");
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_config(text);
}

std::string resolved_json(const RunConfig& cfg) {
  json j;
  j["units"] = "kappa=1";
  j["system"] = {{"g", cfg.system.g}, {"kappa", cfg.system.kappa}, {"delta_a", cfg.system.delta_a}};
  j["pulse"] = {{"gamma0", cfg.pulse.gamma0},
                {"omega0", cfg.pulse.omega0},
                {"omega0_spec", cfg.omega0_raw},
                {"t0", cfg.pulse.t0},
                {"photon_count", cfg.pulse.photon_count}};
  FrequencyGrid g = cfg.grid();
  j["grid"] = {{"n", g.n()}, {"center", g.center}, {"span", g.span}};
  j["run"] = {{"t_end", cfg.run.t_end},
              {"output_dt", cfg.run.output_dt},
              {"rtol", cfg.run.rtol},
              {"atol", cfg.run.atol}};
  if (!cfg.run.output_times.empty()) j["run"]["output_times"] = cfg.run.output_times;
  if (!cfg.run.snapshot_times.empty()) j["run"]["snapshot_times"] = cfg.run.snapshot_times;
  j["analysis"] = {{"gamma_reg", cfg.gamma_reg()}, {"n_modes", cfg.analysis.n_modes}};
  if (cfg.analysis.omega0_scan)
    j["analysis"]["omega0_scan"] = {cfg.analysis.omega0_scan->first,
                                    cfg.analysis.omega0_scan->second};
  if (cfg.analysis.omega0_scan) j["analysis"]["scan_points"] = cfg.analysis.scan_points;
  return j.dump();
}

}  // namespace jcsim
