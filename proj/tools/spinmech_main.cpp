// spinmech — command-line front end for the spin–oscillator thermal-machine
// simulator. Subcommands: battery | cool | cool-map | otto | otto-sweep |
// validate. Exit codes: 0 success, 1 configuration error, 2 invariant breach
// or failed validation.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "spinmech/battery.hpp"
#include "spinmech/config.hpp"
#include "spinmech/cooling.hpp"
#include "spinmech/csv.hpp"
#include "spinmech/dynamics.hpp"
#include "spinmech/model.hpp"
#include "spinmech/otto.hpp"
#include "spinmech/selfcheck.hpp"
#include "spinmech/states.hpp"
#include "spinmech/thermo.hpp"

namespace {

using nlohmann::json;
using namespace spinmech;

struct CliArgs {
  std::string config_path;
  std::string out_dir;
  std::string format_name;
  int workers = -1;      // -1 = not given
  int fock_cutoff = -1;  // -1 = not given
};

json health_json(const HealthStats& h, double trunc_tol) {
  return {{"max_trace_dev", h.max_trace_dev},
          {"max_herm_dev", h.max_herm_dev},
          {"min_eigenvalue", h.min_eigenvalue},
          {"max_toptwo_population", h.max_toptwo},
          {"truncation_tol", trunc_tol}};
}

bool health_bad(const HealthStats& h, double trunc_tol) {
  return h.max_trace_dev > 1e-8 || h.min_eigenvalue < -1e-8 ||
         h.max_toptwo > trunc_tol;
}

std::string data_path(const RunConfig& cfg, const char* stem) {
  return (std::filesystem::path(cfg.output.path) /
          (std::string(stem) + "." + output_format_extension(cfg.output.format)))
      .string();
}

void write_summary(const RunConfig& cfg, const char* protocol, json metrics,
                   json diagnostics, double wall_seconds) {
  json summary;
  summary["protocol"] = protocol;
  summary["config"] = json::parse(describe_config(cfg));
  summary["metrics"] = std::move(metrics);
  summary["diagnostics"] = std::move(diagnostics);
  summary["wall_seconds"] = wall_seconds;
  const std::string path =
      (std::filesystem::path(cfg.output.path) / "summary.json").string();
  write_text_file(path, summary.dump(2) + "\n");
}

RunConfig make_config(const CliArgs& args, ProtocolKind kind) {
  RunConfig cfg;
  if (!args.config_path.empty()) {
    cfg = load_config(args.config_path);
    if (kind != ProtocolKind::none && cfg.protocol != kind) {
      throw config_error(std::string("config selects protocol '") +
                         protocol_name(cfg.protocol) + "' but the subcommand is '" +
                         protocol_name(kind) + "'");
    }
  } else {
    if (kind == ProtocolKind::otto) {
      throw config_error("the otto subcommand needs --config (a stroke time is required)");
    }
    cfg.protocol = kind;
    cfg.workers = std::max(1u, std::thread::hardware_concurrency());
    // defaults a config parse would have filled in
    cfg.battery.tau1 = 2.0 * pi / cfg.model.omega_m / 128.0;
    cfg.map.delta_max = 4.0 * cfg.model.omega_m;
    cfg.map.g_max = 1.0 * cfg.model.omega_m;
    cfg.map.workers = cfg.workers;
  }
  if (!args.out_dir.empty()) cfg.output.path = args.out_dir;
  if (args.workers != -1) {
    if (args.workers < 1) throw config_error("--workers must be at least 1");
    cfg.workers = args.workers;
    cfg.map.workers = args.workers;
  }
  if (args.fock_cutoff != -1) {
    if (args.fock_cutoff < 1) throw config_error("--fock-cutoff must be at least 1");
    cfg.numerics.fock_cutoff = args.fock_cutoff;
  }
  if (!args.format_name.empty()) cfg.output.format = parse_output_format(args.format_name);
  std::filesystem::create_directories(cfg.output.path);
  return cfg;
}

int run_battery_cmd(const CliArgs& args) {
  const auto t0 = std::chrono::steady_clock::now();
  const RunConfig cfg = make_config(args, ProtocolKind::battery);
  const Space sp = make_space(cfg.numerics.fock_cutoff);
  const BatteryReport rep = run_battery(sp, cfg.model, cfg.battery);

  write_text_file(data_path(cfg, "trajectory"),
                  format_trajectory(rep.trajectory.samples, cfg.output.format));
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  json metrics = {{"stored_energy_j", rep.stored_energy_j},
                  {"retrieved_energy_j", rep.retrieved_energy_j},
                  {"charge_efficiency", rep.charge_efficiency},
                  {"discharge_efficiency", rep.discharge_efficiency},
                  {"final_mech_fidelity", rep.final_fidelity},
                  {"n_initial", rep.n_initial},
                  {"n_after_charge", rep.n_after_charge},
                  {"n_before_discharge", rep.n_before_discharge},
                  {"n_final", rep.n_final},
                  {"max_phonon_gain", rep.max_phonon_gain},
                  {"kick_displacement", rep.kick_displacement},
                  {"single_cell_peak_gain", rep.single_cell_peak_gain},
                  {"quoted_peak_formula", rep.quoted_peak_formula}};
  write_summary(cfg, "battery", metrics,
                health_json(rep.health, cfg.numerics.truncation_tol), wall);
  std::printf("battery: charge efficiency %.4f, discharge efficiency %.4f, "
              "final fidelity %.6f (wall %.2f s)\n",
              rep.charge_efficiency, rep.discharge_efficiency, rep.final_fidelity,
              wall);
  std::printf("wrote %s and summary.json in %s\n", data_path(cfg, "trajectory").c_str(),
              cfg.output.path.c_str());
  return health_bad(rep.health, cfg.numerics.truncation_tol) ? 2 : 0;
}

int run_cool_cmd(const CliArgs& args) {
  const auto t0 = std::chrono::steady_clock::now();
  const RunConfig cfg = make_config(args, ProtocolKind::cool);
  const Space sp = make_space(cfg.numerics.fock_cutoff);
  const CoolingReport rep = run_cooling(sp, cfg.model, cfg.cool);

  write_text_file(data_path(cfg, "trajectory"),
                  format_trajectory(rep.trajectory.samples, cfg.output.format));
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const double n0 = rep.n_bar_per_cycle.front();
  json metrics = {{"n_bar_initial", n0},
                  {"n_bar_stationary", rep.n_stationary},
                  {"cooling_ratio", n0 > 0 ? rep.n_stationary / n0 : 1.0},
                  {"beta_h_omega", rep.beta_h_omega},
                  {"t_effective_scaled", rep.t_effective_scaled},
                  {"cycles", int(rep.n_bar_per_cycle.size()) - 1}};
  write_summary(cfg, "cool", metrics,
                health_json(rep.health, cfg.numerics.truncation_tol), wall);
  std::printf("cool: n̄ %.4f → %.4f over %d cycles (wall %.2f s)\n", n0,
              rep.n_stationary, int(rep.n_bar_per_cycle.size()) - 1, wall);
  std::printf("wrote %s and summary.json in %s\n", data_path(cfg, "trajectory").c_str(),
              cfg.output.path.c_str());
  return health_bad(rep.health, cfg.numerics.truncation_tol) ? 2 : 0;
}

int run_cool_map_cmd(const CliArgs& args) {
  const auto t0 = std::chrono::steady_clock::now();
  const RunConfig cfg = make_config(args, ProtocolKind::cool_map);
  const Space sp = make_space(cfg.numerics.fock_cutoff);
  const CoolingMapResult map = cooling_map(sp, cfg.model, cfg.map);

  write_text_file(data_path(cfg, "map"),
                  format_cooling_map(map, cfg.model.omega_m, cfg.output.format));
  write_text_file(data_path(cfg, "contour"),
                  format_unit_contour(map, cfg.model.omega_m, cfg.output.format));
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  int failures = 0;
  double best = std::numeric_limits<double>::infinity();
  for (const double r : map.ratio) {
    if (std::isnan(r)) {
      ++failures;
    } else {
      best = std::min(best, r);
    }
  }
  json metrics = {{"resolution", map.resolution},
                  {"best_ratio", best},
                  {"failed_points", failures},
                  {"contour_points", int(map.unit_contour.size())}};
  write_summary(cfg, "cool_map", metrics, json::object(), wall);
  std::printf("cool-map: %dx%d grid, best ratio %.4f, %d failed points (wall %.1f s)\n",
              map.resolution, map.resolution, best, failures, wall);
  std::printf("wrote %s, %s and summary.json in %s\n", data_path(cfg, "map").c_str(),
              data_path(cfg, "contour").c_str(), cfg.output.path.c_str());
  return 0;
}

json ledger_json(const CycleLedger& led) {
  return {{"lambda", led.lambda},
          {"omega_hot_rad_per_s", led.omega_hot},
          {"omega_cold_rad_per_s", led.omega_cold},
          {"w_e_j", led.w_e},
          {"q_c_j", led.q_c},
          {"w_c_j", led.w_c},
          {"q_h_j", led.q_h},
          {"closure_j", led.closure},
          {"closure_over_qh", led.q_h != 0 ? led.closure / led.q_h : 0.0},
          {"eta", led.eta},
          {"eta_c", led.eta_c},
          {"eta_ca", led.eta_ca},
          {"t3_over_t4", led.t3_over_t4},
          {"engine", led.engine},
          {"cycles_run", led.cycles_run},
          {"n1", led.n1},
          {"n2", led.n2},
          {"n3", led.n3},
          {"n4", led.n4}};
}

int run_otto_cmd(const CliArgs& args) {
  const auto t0 = std::chrono::steady_clock::now();
  const RunConfig cfg = make_config(args, ProtocolKind::otto);
  const Space sp = make_space(cfg.numerics.fock_cutoff);
  const CycleLedger ledger = run_otto(sp, cfg.model, cfg.otto);

  write_text_file(data_path(cfg, "ts_points"),
                  format_ts_points(ts_points(ledger), cfg.output.format));
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_summary(cfg, "otto", ledger_json(ledger),
                health_json(ledger.health, cfg.numerics.truncation_tol), wall);
  std::printf("otto: lambda %.4f, eta %.4f (Otto bound %.4f, CA %.4f), %s, "
              "%d cycles (wall %.1f s)\n",
              ledger.lambda, ledger.eta, ledger.eta_c, ledger.eta_ca,
              ledger.engine ? "engine" : "not an engine", ledger.cycles_run, wall);
  std::printf("wrote %s and summary.json in %s\n", data_path(cfg, "ts_points").c_str(),
              cfg.output.path.c_str());
  return health_bad(ledger.health, cfg.numerics.truncation_tol) ? 2 : 0;
}

int run_otto_sweep_cmd(const CliArgs& args) {
  const auto t0 = std::chrono::steady_clock::now();
  const RunConfig cfg = make_config(args, ProtocolKind::otto_sweep);
  const Space sp = make_space(cfg.numerics.fock_cutoff);

  std::vector<double> t_strokes;
  const OttoSweepSpec& sw = cfg.sweep;
  for (int i = 0; i < sw.points; ++i) {
    const double frac = sw.points > 1 ? double(i) / (sw.points - 1) : 0.0;
    const double omega_m_t = sw.omega_m_t_min + frac * (sw.omega_m_t_max - sw.omega_m_t_min);
    t_strokes.push_back(omega_m_t / cfg.model.omega_m);
  }
  const std::vector<OttoSweepRow> rows =
      otto_sweep(sp, cfg.model, t_strokes, sw.d_t_omega, cfg.otto, cfg.workers);

  write_text_file(data_path(cfg, "sweep"), format_otto_sweep(rows, cfg.output.format));
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  int engines = 0;
  for (const auto& r : rows) {
    if (r.engine) ++engines;
  }
  json rows_json = json::array();
  for (const auto& r : rows) {
    rows_json.push_back({{"omega_m_T", r.omega_m_t},
                         {"lambda", r.lambda},
                         {"eta", r.eta},
                         {"eta_ca", r.eta_ca},
                         {"engine", r.engine},
                         {"cycles_run", r.cycles_run}});
  }
  json metrics = {{"points", int(rows.size())}, {"engine_points", engines},
                  {"rows", rows_json}};
  write_summary(cfg, "otto_sweep", metrics, json::object(), wall);
  std::printf("otto-sweep: %d points, %d operating as engines (wall %.1f s)\n",
              int(rows.size()), engines, wall);
  std::printf("wrote %s and summary.json in %s\n", data_path(cfg, "sweep").c_str(),
              cfg.output.path.c_str());
  return 0;
}

int run_validate_cmd(const CliArgs& args) {
  const auto t0 = std::chrono::steady_clock::now();
  RunConfig cfg;
  if (!args.config_path.empty()) cfg = load_config(args.config_path);  // validated, unused
  if (!args.out_dir.empty()) cfg.output.path = args.out_dir;
  std::filesystem::create_directories(cfg.output.path);

  const std::vector<CheckResult> results = run_validation_suite();
  bool all = true;
  json arr = json::array();
  for (const auto& r : results) {
    std::printf("%s %s — %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str());
    arr.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    all = all && r.pass;
  }
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  json summary = {{"protocol", "validate"},
                  {"checks", arr},
                  {"all_pass", all},
                  {"wall_seconds", wall}};
  write_text_file(
      (std::filesystem::path(cfg.output.path) / "summary.json").string(),
      summary.dump(2) + "\n");
  std::printf("%s (%zu checks, wall %.1f s)\n", all ? "all checks passed" : "FAILURES",
              results.size(), wall);
  return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simulator for a two-level spin coupled to a mechanical oscillator: "
               "phonon battery, engineered-bath cooling, and an Otto engine"};
  app.require_subcommand(1);

  CliArgs args;
  app.add_option("--config", args.config_path, "JSON run configuration file");
  app.add_option("--out", args.out_dir, "output directory (default from config or .)");
  app.add_option("--workers", args.workers, "worker threads for sweeps");
  app.add_option("--fock-cutoff", args.fock_cutoff, "highest retained Fock level");
  app.add_option("--format", args.format_name, "data file format")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* cmd_battery =
      app.add_subcommand("battery", "charge and discharge the mechanical flywheel");
  CLI::App* cmd_cool =
      app.add_subcommand("cool", "drive-and-reset cooling of the mechanical mode");
  CLI::App* cmd_map =
      app.add_subcommand("cool-map", "cooling-ratio grid over detuning and coupling");
  CLI::App* cmd_otto = app.add_subcommand("otto", "four-stroke engine, single sweep point");
  CLI::App* cmd_sweep =
      app.add_subcommand("otto-sweep", "engine efficiency across stroke times");
  CLI::App* cmd_validate =
      app.add_subcommand("validate", "run the oracle and invariant suite");
  for (CLI::App* sub :
       {cmd_battery, cmd_cool, cmd_map, cmd_otto, cmd_sweep, cmd_validate}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // bad usage is a configuration error
  }

  try {
    if (cmd_battery->parsed()) return run_battery_cmd(args);
    if (cmd_cool->parsed()) return run_cool_cmd(args);
    if (cmd_map->parsed()) return run_cool_map_cmd(args);
    if (cmd_otto->parsed()) return run_otto_cmd(args);
    if (cmd_sweep->parsed()) return run_otto_sweep_cmd(args);
    return run_validate_cmd(args);
  } catch (const config_error& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return 1;
  } catch (const invariant_violation& e) {
    std::fprintf(stderr, "invariant breach: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
