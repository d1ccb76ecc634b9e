// Config parsing, resolved-config round trip, CSV writing, and end-to-end CLI runs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "jcsim/config.hpp"
#include "jcsim/csv.hpp"
#include "jcsim/errors.hpp"
#include "jcsim/model.hpp"

using namespace jcsim;
namespace fs = std::filesystem;

// ---------------------------------------------------------------- parsing

TEST_CASE("empty config yields the documented defaults") {
  RunConfig cfg = parse_config("{}");
  CHECK(cfg.system.g == 2.0);
  CHECK(cfg.system.kappa == 1.0);
  CHECK(cfg.system.delta_a == 0.0);
  CHECK(cfg.pulse.gamma0 == 0.2);
  CHECK(cfg.pulse.omega0 == 0.0);
  CHECK(cfg.pulse.t0 == 0.0);
  CHECK(cfg.pulse.photon_count == 2);
  CHECK(cfg.run.t_end == 60.0);
  CHECK(cfg.run.output_dt == 0.25);
  CHECK(cfg.run.rtol == 1e-8);
  CHECK(cfg.run.atol == 1e-10);
  CHECK(cfg.analysis.n_modes == 5);
  CHECK(cfg.gamma_reg() == 0.2);  // defaults to gamma0

  // Default grid: centered on the carrier, half-width 25*gamma0.
  FrequencyGrid g = cfg.grid();
  CHECK(g.n() == 100);
  CHECK(g.center == 0.0);
  CHECK(g.span == 5.0);
}

TEST_CASE("flat shortcuts and nested sections parse to the same configuration") {
  const char* flat = R"({"g": 3.0, "delta_a": 0.5, "gamma0": 0.4, "omega0": "E1+",
                         "n": 64, "span": 7.0, "t_end": 30.0, "rtol": 1e-9,
                         "gamma_reg": 0.3, "n_modes": 4})";
  const char* nested = R"({"system": {"g": 3.0, "delta_a": 0.5},
                           "pulse": {"gamma0": 0.4, "omega0": "E1+"},
                           "grid": {"n": 64, "span": 7.0},
                           "run": {"t_end": 30.0, "rtol": 1e-9},
                           "analysis": {"gamma_reg": 0.3, "n_modes": 4}})";
  CHECK(resolved_json(parse_config(flat)) == resolved_json(parse_config(nested)));
}

TEST_CASE("omega0 accepts resonance labels and keeps the raw spelling") {
  RunConfig cfg = parse_config(R"({"g": 2.0, "omega0": "E1+"})");
  auto [ep, em] = single_photon_resonances(cfg.system);
  CHECK(cfg.pulse.omega0 == ep.real());
  CHECK(cfg.omega0_raw == "E1+");
  CHECK(resolved_json(cfg).find("\"omega0_spec\":\"E1+\"") != std::string::npos);

  RunConfig lo = parse_config(R"({"g": 2.0, "omega0": "E1-"})");
  CHECK(lo.pulse.omega0 == em.real());
  CHECK(lo.pulse.omega0 < 0.0);

  CHECK_THROWS_WITH_AS(parse_config(R"({"omega0": "E2+"})"),
                       "omega0 must be a number or one of \"E1+\", \"E1-\"", config_error);
}

TEST_CASE("resolved config parses back to itself") {
  for (const char* text :
       {"{}", R"({"g": 3.0, "omega0": "E1+", "gamma0": 0.4, "n": 32})",
        R"({"omega0": 1.25, "t_end": 10.0, "run": {"snapshot_times": [1.0, 2.0]},
            "analysis": {"omega0_scan": [-1.0, 1.0], "scan_points": 5}})"}) {
    std::string once = resolved_json(parse_config(text));
    std::string twice = resolved_json(parse_config(once));
    CHECK(once == twice);
  }
}

TEST_CASE("unknown keys are rejected by name") {
  CHECK_THROWS_WITH_AS(parse_config(R"({"gg": 1.0})"), "unknown key \"gg\"", config_error);
  CHECK_THROWS_WITH_AS(parse_config(R"({"system": {"q": 1.0}})"), "unknown key \"system.q\"",
                       config_error);
  CHECK_THROWS_WITH_AS(parse_config(R"({"analysis": {"modes": 3}})"),
                       "unknown key \"analysis.modes\"", config_error);
}

TEST_CASE("physics validation happens at parse time") {
  CHECK_THROWS_WITH_AS(parse_config(R"({"g": -1.0})"), "g must be >= 0", config_error);
  CHECK_THROWS_WITH_AS(parse_config(R"({"units": "SI"})"), "units must be \"kappa=1\"",
                       config_error);
  CHECK_THROWS_WITH_AS(parse_config(R"({"gamma0": 0.0})"), "gamma0 must be > 0", config_error);
  CHECK_THROWS_WITH_AS(parse_config(R"({"photon_count": 3})"), "photon_count must be 1 or 2",
                       config_error);
  CHECK_THROWS_WITH_AS(parse_config(R"({"n": 1})"), "grid n must be >= 2", config_error);
  CHECK_THROWS_WITH_AS(parse_config(R"({"t_end": -1.0})"), "t_end must be > 0", config_error);
  CHECK_THROWS_WITH_AS(parse_config(R"({"rtol": 0.0})"), "rtol and atol must be > 0",
                       config_error);
  CHECK_THROWS_WITH_AS(parse_config(R"({"gamma_reg": 0.0})"), "gamma_reg must be > 0",
                       config_error);
  CHECK_THROWS_WITH_AS(parse_config(R"({"analysis": {"omega0_scan": [2.0, 1.0]}})"),
                       "omega0_scan must be [lo, hi] with lo < hi", config_error);
  CHECK_THROWS_WITH_AS(parse_config(R"({"g": "big"})"), "key \"g\" must be a number",
                       config_error);
  CHECK_THROWS_WITH_AS(parse_config(R"({"n_modes": 2.5})"), "key \"n_modes\" must be an integer",
                       config_error);
}

TEST_CASE("malformed input is reported as a configuration error") {
  CHECK_THROWS_AS(parse_config("{nope"), config_error);
  try {
    parse_config("{nope");
  } catch (const config_error& e) {
    CHECK(std::string(e.what()).rfind("config is not valid JSON", 0) == 0);
  }
  CHECK_THROWS_WITH_AS(parse_config("[1, 2]"), "config must be a JSON object", config_error);
  CHECK_THROWS_WITH_AS(load_config("no_such_file.json"),
                       "cannot open config file: no_such_file.json", config_error);
}

// ---------------------------------------------------------------- CSV

TEST_CASE("csv writer emits CRLF rows with a commented preamble") {
  std::ostringstream os;
  CsvWriter w(os, {"first", "second"}, {"a", "b"});
  w.row(std::vector<double>{1.5, 2.0});
  w.row(std::vector<std::string>{"he,llo", "qu\"ote"});
  CHECK(os.str() ==
        "# first\r\n# second\r\na,b\r\n1.5,2\r\n\"he,llo\",\"qu\"\"ote\"\r\n");
}

TEST_CASE("csv numeric formatting is compact and stable") {
  CHECK(CsvWriter::format(0.1) == "0.1");
  CHECK(CsvWriter::format(2.0) == "2");
  CHECK(CsvWriter::format(1.0 / 3.0) == "0.333333333333");
  CHECK(CsvWriter::format(1e-300) == "1e-300");
  CHECK(CsvWriter::format(-1.984313483298443) == "-1.9843134833");
}

TEST_CASE("csv writer enforces the column count") {
  std::ostringstream os;
  CsvWriter w(os, {}, {"a", "b"});
  CHECK_THROWS_AS(w.row(std::vector<double>{1.0}), std::logic_error);
}

// ---------------------------------------------------------------- CLI

namespace {

struct CmdResult {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

fs::path work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "jcsim_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

CmdResult run_cli(const std::string& args) {
  fs::path of = work_dir() / "stdout.txt";
  fs::path ef = work_dir() / "stderr.txt";
  std::string cmd = std::string("\"") + JCSIM_BIN + "\" " + args + " > " + of.string() + " 2> " +
                    ef.string();
  int status = std::system(cmd.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, slurp(of), slurp(ef)};
}

fs::path write_config(const std::string& name, const std::string& text) {
  fs::path p = work_dir() / name;
  std::ofstream(p) << text;
  return p;
}

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n') + 1);
}

}  // namespace

TEST_CASE("cli rejects missing subcommands and honors --help") {
  CHECK(run_cli("").code == 2);
  CmdResult help = run_cli("--help");
  CHECK(help.code == 0);
  CHECK(help.out.find("evolve") != std::string::npos);
  CHECK(help.out.find("spectrum") != std::string::npos);
  CHECK(help.out.find("schmidt") != std::string::npos);
  CHECK(help.out.find("validate") != std::string::npos);
}

TEST_CASE("cli maps configuration problems to exit code 2") {
  CmdResult missing = run_cli("evolve --config " + (work_dir() / "absent.json").string());
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot open config file") != std::string::npos);

  fs::path bad = write_config("bad_g.json", R"({"g": -1.0})");
  CmdResult r = run_cli("evolve --config " + bad.string());
  CHECK(r.code == 2);
  CHECK(r.err.find("g must be >= 0") != std::string::npos);

  fs::path ok = write_config("tiny.json",
                             R"({"g": 2.0, "gamma0": 0.2, "n": 16, "span": 4.0,
                                 "t_end": 1.0, "output_dt": 0.5})");
  CmdResult snap = run_cli("evolve --config " + ok.string() + " --snapshot-times 1,abc");
  CHECK(snap.code == 2);
  CHECK(snap.err.find("invalid --snapshot-times entry") != std::string::npos);

  CmdResult late = run_cli("evolve --config " + ok.string() + " --snapshot-times 5.0");
  CHECK(late.code == 2);
  CHECK(late.err.find("snapshot_times must lie in [0, t_end]") != std::string::npos);
}

TEST_CASE("cli evolve writes a versioned csv and is deterministic") {
  fs::path cfg = write_config("evolve.json",
                              R"({"g": 2.0, "gamma0": 0.2, "n": 16, "span": 4.0,
                                  "t_end": 1.0, "output_dt": 0.5})");
  fs::path out1 = work_dir() / "run1";
  fs::path out2 = work_dir() / "run2";

  CmdResult r1 = run_cli("evolve --config " + cfg.string() + " --out " + out1.string() +
                         " --snapshot-times 0.5");
  CHECK(r1.code == 0);
  CHECK(r1.out.find("wrote") != std::string::npos);
  CHECK(r1.out.find("final two-photon norm") != std::string::npos);

  std::string main_csv = slurp(out1 / "evolve.csv");
  CHECK(first_line(main_csv) == "# jcsim 1.0.0\r\n");
  CHECK(main_csv.find("# config: {\"analysis\"") != std::string::npos);
  CHECK(main_csv.find("t_kappa,n_c,p_a,p1,p2,norm2,norm1\r\n") != std::string::npos);

  std::string snap_csv = slurp(out1 / "snapshot_00.csv");
  CHECK(snap_csv.find("# t_kappa = 0.5\r\n") != std::string::npos);
  CHECK(snap_csv.find("omega_kappa,omega_prime_kappa,re_phi,im_phi\r\n") != std::string::npos);

  CmdResult r2 = run_cli("evolve --config " + cfg.string() + " --out " + out2.string() +
                         " --snapshot-times 0.5");
  CHECK(r2.code == 0);
  CHECK(slurp(out2 / "evolve.csv") == main_csv);
  CHECK(slurp(out2 / "snapshot_00.csv") == snap_csv);
}

TEST_CASE("cli spectrum writes the decomposition and optional carrier scan") {
  fs::path cfg = write_config("spectrum.json",
                              R"({"g": 1.0, "gamma0": 0.5, "n": 24, "span": 4.0,
                                  "omega0_scan": [-1.0, 1.0], "scan_points": 3})");
  fs::path out = work_dir() / "spec";
  CmdResult r = run_cli("spectrum --config " + cfg.string() + " --out " + out.string());
  CHECK(r.code == 0);

  std::string csv = slurp(out / "spectrum.csv");
  CHECK(first_line(csv) == "# jcsim 1.0.0\r\n");
  CHECK(csv.find("# int_s_in = ") != std::string::npos);
  CHECK(csv.find("# int_s_out = ") != std::string::npos);
  CHECK(csv.find("# input_tail_outside_window = ") != std::string::npos);
  CHECK(csv.find("omega_kappa,varpi,s_in,s_out,s_inel,s_el_in\r\n") != std::string::npos);

  std::string scan = slurp(out / "spectrum_scan.csv");
  CHECK(scan.find("omega0_kappa,omega_kappa,s_out\r\n") != std::string::npos);
}

TEST_CASE("cli schmidt reports the entropy") {
  fs::path cfg = write_config("schmidt.json",
                              R"({"g": 2.0, "gamma0": 0.2, "omega0": "E1+",
                                  "n": 40, "n_modes": 3})");
  fs::path out = work_dir() / "schmidt";
  CmdResult r = run_cli("schmidt --config " + cfg.string() + " --out " + out.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("entanglement entropy:") != std::string::npos);
  CHECK(r.out.find("lambda_1 =") != std::string::npos);

  std::string csv = slurp(out / "schmidt.csv");
  CHECK(csv.find("# entropy_bits = ") != std::string::npos);
  CHECK(csv.find("mode,lambda\r\n") != std::string::npos);
  std::string modes = slurp(out / "schmidt_modes.csv");
  CHECK(modes.find("re_mode1") != std::string::npos);
  CHECK(modes.find("im_mode3") != std::string::npos);
}

TEST_CASE("cli maps integration failure to exit code 3") {
  fs::path cfg = write_config("stiff.json",
                              R"({"g": 2.0, "gamma0": 0.2, "n": 8, "span": 4.0, "t_end": 1.0,
                                  "rtol": 1e-300, "atol": 1e-300})");
  CmdResult r = run_cli("evolve --config " + cfg.string() + " --out " +
                        (work_dir() / "stiff").string());
  CHECK(r.code == 3);
  CHECK(r.err.find("error:") != std::string::npos);
}
