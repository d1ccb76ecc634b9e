#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jcsim/analytic.hpp"
#include "jcsim/config.hpp"
#include "jcsim/csv.hpp"
#include "jcsim/dynamics.hpp"
#include "jcsim/entanglement.hpp"
#include "jcsim/errors.hpp"
#include "jcsim/spectrum.hpp"
#include "jcsim/validate.hpp"
#include "jcsim/version.hpp"

namespace fs = std::filesystem;
using namespace jcsim;

namespace {

std::vector<double> parse_times(const std::string& arg) {
  std::vector<double> out;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      double v = std::stod(item, &pos);
      while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
      if (pos != item.size()) throw std::invalid_argument("trailing characters");
      out.push_back(v);
    } catch (...) {
      throw config_error("invalid --snapshot-times entry: \"" + item + "\"");
    }
  }
  if (out.empty()) throw config_error("--snapshot-times: no values given");
  return out;
}

std::ofstream open_out(const fs::path& p) {
  std::ofstream os(p, std::ios::binary);
  if (!os) throw config_error("cannot open output file: " + p.string());
  return os;
}

int cmd_evolve(const RunConfig& cfg, const fs::path& out, bool quiet,
               const std::vector<std::string>& preamble, const std::vector<double>& extra_snaps) {
  EvolveOptions opts = cfg.run;
  opts.warn = !quiet;
  opts.snapshot_times.insert(opts.snapshot_times.end(), extra_snaps.begin(), extra_snaps.end());
  std::sort(opts.snapshot_times.begin(), opts.snapshot_times.end());
  opts.snapshot_times.erase(std::unique(opts.snapshot_times.begin(), opts.snapshot_times.end()),
                            opts.snapshot_times.end());

  FrequencyGrid grid = cfg.grid();
  Trajectory traj = evolve(cfg.system, cfg.pulse, grid, opts);

  fs::path main_path = out / "evolve.csv";
  {
    std::ofstream os = open_out(main_path);
    CsvWriter w(os, preamble, {"t_kappa", "n_c", "p_a", "p1", "p2", "norm2", "norm1"});
    for (size_t i = 0; i < traj.times.size(); ++i) {
      const Observables& o = traj.obs[i];
      w.row({traj.times[i], o.n_c, o.p_a, o.p1, o.p2, o.norm2, traj.norm1[i]});
    }
  }
  if (!quiet)
    std::cout << "wrote " << main_path.string() << " (" << traj.times.size() << " rows)\n";

  for (size_t s = 0; s < traj.snapshots.size(); ++s) {
    const Snapshot& snap = traj.snapshots[s];
    char name[40];
    std::snprintf(name, sizeof name, "snapshot_%02zu.csv", s);
    fs::path sp = out / name;
    std::ofstream os = open_out(sp);
    std::vector<std::string> pre = preamble;
    pre.push_back("t_kappa = " + CsvWriter::format(snap.t));
    CsvWriter w(os, pre, {"omega_kappa", "omega_prime_kappa", "re_phi", "im_phi"});
    for (int j = 0; j < grid.n(); ++j)
      for (int k = 0; k < grid.n(); ++k)
        w.row({grid.omega[j], grid.omega[k], snap.two.phi(j, k).real(),
               snap.two.phi(j, k).imag()});
    if (!quiet) std::cout << "wrote " << sp.string() << "\n";
  }
  if (!quiet && !traj.obs.empty())
    std::cout << "final two-photon norm: " << CsvWriter::format(traj.obs.back().norm2) << "\n";
  return 0;
}

// The scattered pair renormalized to the unit-norm packet sampled on the grid.
ScatteredSDF normalized_pair_sdf(const SystemParams& sys, const PulseSpec& pulse,
                                 const FrequencyGrid& grid, double gamma_reg) {
  double a2 = std::pow(pulse_grid_scale(pulse, grid), 2);
  ScatteredSDF sdf = scattered_pair_sdf(sys, pulse, grid, gamma_reg);
  sdf.elastic *= a2;
  sdf.inelastic *= a2;
  sdf.total *= a2;
  return sdf;
}

int cmd_spectrum(const RunConfig& cfg, const fs::path& out, bool quiet,
                 const std::vector<std::string>& preamble) {
  FrequencyGrid grid = cfg.grid();
  ScatteredSDF sdf = normalized_pair_sdf(cfg.system, cfg.pulse, grid, cfg.gamma_reg());
  SpectrumResult sp = output_spectrum(sdf);
  sp.tail_estimate = input_tail_estimate(cfg.pulse, grid);

  fs::path path = out / "spectrum.csv";
  {
    std::ofstream os = open_out(path);
    std::vector<std::string> pre = preamble;
    pre.push_back("int_s_in = " + CsvWriter::format(sp.int_s_in));
    pre.push_back("int_s_out = " + CsvWriter::format(sp.int_s_out));
    pre.push_back("input_tail_outside_window = " + CsvWriter::format(sp.tail_estimate));
    CsvWriter w(os, pre, {"omega_kappa", "varpi", "s_in", "s_out", "s_inel", "s_el_in"});
    for (int k = 0; k < grid.n(); ++k)
      w.row({grid.omega[k], (grid.omega[k] - cfg.pulse.omega0) / cfg.pulse.gamma0, sp.s_in[k],
             sp.s_out[k], sp.s_inel[k], sp.s_el_in[k]});
  }
  if (!quiet) {
    std::cout << "wrote " << path.string() << "\n";
    char line[160];
    std::snprintf(line, sizeof line,
                  "int s_in = %.6f, int s_out = %.6f, input tail outside window = %.3e\n",
                  sp.int_s_in, sp.int_s_out, sp.tail_estimate);
    std::cout << line;
  }

  if (cfg.analysis.omega0_scan) {
    auto [lo, hi] = *cfg.analysis.omega0_scan;
    int pts = cfg.analysis.scan_points;
    fs::path spath = out / "spectrum_scan.csv";
    std::ofstream os = open_out(spath);
    CsvWriter w(os, preamble, {"omega0_kappa", "omega_kappa", "s_out"});
    for (int i = 0; i < pts; ++i) {
      double o0 = (pts == 1) ? lo : lo + (hi - lo) * i / (pts - 1);
      PulseSpec p2 = cfg.pulse;
      p2.omega0 = o0;
      SpectrumResult r2 = output_spectrum(normalized_pair_sdf(cfg.system, p2, grid,
                                                              cfg.gamma_reg()));
      for (int k = 0; k < grid.n(); ++k) w.row({o0, grid.omega[k], r2.s_out[k]});
    }
    if (!quiet) std::cout << "wrote " << spath.string() << " (" << pts << " carriers)\n";
  }
  return 0;
}

int cmd_schmidt(const RunConfig& cfg, const fs::path& out, bool quiet,
                const std::vector<std::string>& preamble) {
  FrequencyGrid grid = cfg.grid();
  ScatteredSDF sdf = normalized_pair_sdf(cfg.system, cfg.pulse, grid, cfg.gamma_reg());
  SchmidtResult res = schmidt(build_kernel(sdf), grid, cfg.analysis.n_modes);

  fs::path lpath = out / "schmidt.csv";
  {
    std::ofstream os = open_out(lpath);
    std::vector<std::string> pre = preamble;
    pre.push_back("entropy_bits = " + CsvWriter::format(res.entropy));
    CsvWriter w(os, pre, {"mode", "lambda"});
    for (int j = 0; j < res.lambdas.size(); ++j)
      w.row({static_cast<double>(j + 1), res.lambdas[j]});
  }

  fs::path mpath = out / "schmidt_modes.csv";
  {
    std::ofstream os = open_out(mpath);
    std::vector<std::string> cols = {"omega_kappa", "varpi"};
    const int m = static_cast<int>(res.modes.cols());
    for (int j = 0; j < m; ++j) {
      cols.push_back("re_mode" + std::to_string(j + 1));
      cols.push_back("im_mode" + std::to_string(j + 1));
    }
    CsvWriter w(os, preamble, cols);
    for (int k = 0; k < grid.n(); ++k) {
      std::vector<double> vals = {grid.omega[k],
                                  (grid.omega[k] - cfg.pulse.omega0) / cfg.pulse.gamma0};
      for (int j = 0; j < m; ++j) {
        vals.push_back(res.modes(k, j).real());
        vals.push_back(res.modes(k, j).imag());
      }
      w.row(vals);
    }
  }

  if (!quiet) {
    std::cout << "wrote " << lpath.string() << "\n";
    std::cout << "wrote " << mpath.string() << "\n";
    char line[120];
    std::snprintf(line, sizeof line, "entanglement entropy: %.6f bits (lambda_1 = %.6f)\n",
                  res.entropy, res.lambdas.size() ? res.lambdas[0] : 0.0);
    std::cout << line;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("jcsim ") + version +
               " - photon pairs scattering off a waveguide-coupled Jaynes-Cummings system"};
  app.require_subcommand(1);

  std::string config_path, snap_arg;
  std::string out_dir = ".";
  bool quiet = false;

  CLI::App* ev = app.add_subcommand("evolve", "integrate the driven system, write observables");
  CLI::App* spc = app.add_subcommand("spectrum", "long-time spectra of the scattered pair");
  CLI::App* sch = app.add_subcommand("schmidt", "Schmidt modes and entanglement entropy");
  CLI::App* val = app.add_subcommand("validate", "run the built-in oracle suite");

  for (CLI::App* sub : {ev, spc, sch}) {
    sub->add_option("--config", config_path, "JSON configuration file")->required();
    sub->add_option("--out", out_dir, "output directory (created if missing)");
    sub->add_flag("--quiet", quiet, "suppress informational output");
  }
  ev->add_option("--snapshot-times", snap_arg, "comma-separated capture times (1/kappa units)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*val) return run_validation(std::cout) == 0 ? 0 : 3;

    RunConfig cfg = load_config(config_path);
    std::vector<std::string> preamble = {std::string("jcsim ") + version,
                                         "config: " + resolved_json(cfg)};
    fs::path out(out_dir);
    std::error_code ec;
    fs::create_directories(out, ec);  // failure surfaces when opening files

    if (*ev) {
      std::vector<double> extra;
      if (!snap_arg.empty()) extra = parse_times(snap_arg);
      return cmd_evolve(cfg, out, quiet, preamble, extra);
    }
    if (*spc) return cmd_spectrum(cfg, out, quiet, preamble);
    return cmd_schmidt(cfg, out, quiet, preamble);
  } catch (const config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const numerical_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
