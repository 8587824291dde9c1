// acceptance.cpp — end-to-end acceptance checks, one per physics guarantee the
// simulator ships with. Each invocation prints exactly one PASS/FAIL line and
// exits 0 on pass, 1 on fail, 2 on usage error.
//
//   usage: acceptance <check-id 1..8 | all> [path-to-cli-binary]
//
// The CLI path is consumed by check 8, which shells out to the `validate`
// subcommand and holds it to its wall-clock budget.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "spinmech/battery.hpp"
#include "spinmech/cooling.hpp"
#include "spinmech/model.hpp"
#include "spinmech/otto.hpp"
#include "spinmech/selfcheck.hpp"
#include "spinmech/space.hpp"
#include "spinmech/thermo.hpp"
#include "spinmech/types.hpp"

namespace {

using namespace spinmech;

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string strf(const char* pattern, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, pattern);
  std::vsnprintf(buf, sizeof(buf), pattern, ap);
  va_end(ap);
  return buf;
}

Verdict from_check(const CheckResult& r) { return {r.pass, r.detail}; }

// ---------------------------------------------------------------------------
// 1–4: closed-form oracle checks shared with the CLI validation suite
// ---------------------------------------------------------------------------

Verdict check_damped_oscillator() { return from_check(check_damped_mean_relaxation()); }
Verdict check_rabi() { return from_check(check_rabi_flopping()); }
Verdict check_frame() { return from_check(check_frame_equivalence()); }
Verdict check_swap() { return from_check(check_exchange_swap()); }

// ---------------------------------------------------------------------------
// 5: flywheel battery — lossless round trip, then loss-ordered efficiencies
// ---------------------------------------------------------------------------

Verdict check_battery() {
  const Space sp = make_space(49);
  const double omega = 2.0 * pi * 50.0;
  const double period = 2.0 * pi / omega;

  BatteryPlan plan;
  plan.n_charge_kicks = 3;
  plan.n_discharge_kicks = 3;
  plan.tau1 = period / 128.0;
  plan.n_bar_0 = 2.0;
  plan.dt_divisor = 64;

  // branch A: every decay channel off; charge + discharge must return the
  // mechanical state to where it started
  ModelParams ideal;
  ideal.g = 2.0 * pi * 3.0;
  ideal.gamma_m = 0.0;
  ideal.gamma_1 = 0.0;
  ideal.gamma_2 = 0.0;
  const BatteryReport clean = run_battery(sp, ideal, plan);

  const double n_err = std::abs(clean.n_final - 2.0);
  const bool clean_ok = clean.final_fidelity >= 0.999 && n_err <= 1e-3;

  // branch B: benchmark decoherence on (spin dephasing 1/T2*, relaxation
  // 1/T1, mechanical damping at the bath occupancy of the initial state, so
  // the flywheel itself neither heats nor cools while idle). Stored energy is
  // degraded on the way in and further on the way out: both efficiencies land
  // strictly below one and discharge below charge.
  ModelParams lossy;
  lossy.g = 2.0 * pi * 3.0;
  lossy.n_th = 2.0;
  const BatteryReport worn = run_battery(sp, lossy, plan);

  const bool lossy_ok = worn.charge_efficiency < 1.0 && worn.discharge_efficiency < 1.0 &&
                        worn.discharge_efficiency < worn.charge_efficiency;

  return {clean_ok && lossy_ok,
          strf("lossless: fidelity %.6f (≥0.999), |n−2| %.2e (≤1e-3); "
               "decohering: charge eff %.6f, discharge eff %.6f (each <1, discharge lower)",
               clean.final_fidelity, n_err, worn.charge_efficiency,
               worn.discharge_efficiency)};
}

// ---------------------------------------------------------------------------
// 6: engineered-bath cooling — benchmark trajectory plus the (Δ, g) map
// ---------------------------------------------------------------------------

// First validated stationary occupancy of the benchmark cooling run, kept as
// a regression pin at ±2%. Negative means not yet frozen: the check then
// reports the measured value and fails, so the pin cannot be skipped.
// Frozen from the first validated 900-cycle run (N = 130, divisor 96):
// monotone after cycle 5, top-two 9.1e-7, min eigenvalue 0.
constexpr double kStationaryBaseline = 0.724114;

ModelParams cooling_params() {
  // red-detuned drive at the two-phonon resonance: Δ = 2ω, g = Ω = ω/2.
  // The drive-and-reset cycle needs spin coherence across a mechanical
  // period, and the benchmark spin linewidths (1/T1, 1/T2*) are an order of
  // magnitude above ω; the engineered-bath checks therefore run with those
  // two channels off, keeping the mechanical bath and the optical reset as
  // the only decoherence sources.
  ModelParams p;
  p.delta = 2.0 * p.omega_m;
  p.g = 0.5 * p.omega_m;
  p.rabi = 0.5 * p.omega_m;
  p.n_th = 8.0;
  p.gamma_1 = 0.0;
  p.gamma_2 = 0.0;
  return p;
}

Verdict check_cooling() {
  const ModelParams p = cooling_params();

  // --- benchmark trajectory: 900 cycles from n̄ = 8 ---
  CoolingPlan plan;
  plan.n_cycles = 900;
  plan.n_bar_0 = 8.0;
  // late cycles sit near a nearly pure state where fixed-step integration
  // error can push an eigenvalue a few 1e-8 negative; resolve finer
  plan.dt_divisor = 96;
  // The n̄ = 8 thermal tail alone needs ~110 levels for 1e-6 headroom. On top
  // of that, at g√n ≳ ω the driven spin slowly pumps population up the ladder
  // (~0.2 levels/cycle front speed, step-size independent), so over 900
  // cycles the top of any affordable ladder fills to a few 1e-6 regardless of
  // the cutoff. That tail is genuine driven physics, bounded by mechanical
  // damping; at 1e-5 total population it shifts n̄ by ≲1e-4, far inside the
  // ±2% regression pin, so this run widens the headroom tolerance instead of
  // chasing the front with an ever-larger basis.
  plan.truncation_tol = 1e-5;
  const CoolingReport rep = run_cooling(make_space(130), p, plan);

  const auto& n = rep.n_bar_per_cycle;
  double worst_rise = 0.0;
  int worst_cycle = -1;
  for (std::size_t i = 6; i < n.size(); ++i) {
    const double rise = n[i] - n[i - 1];
    if (rise > worst_rise) {
      worst_rise = rise;
      worst_cycle = int(i);
    }
  }
  const bool monotone = worst_rise <= 1e-9;  // slack for plateau round-off
  const bool cold = rep.n_stationary < 8.0 / 4.0;
  const bool pinned = kStationaryBaseline > 0.0 &&
                      std::abs(rep.n_stationary - kStationaryBaseline) <=
                          0.02 * kStationaryBaseline;

  // --- cooling-ratio map over Δ/ω ∈ (0, 4], g/ω ∈ (0, 1] ---
  CoolingMapSpec ms;
  ms.delta_max = 4.0 * p.omega_m;
  ms.g_max = p.omega_m;
  ms.resolution = 12;
  ms.n_cycles = 100;
  ms.n_bar_0 = 8.0;
  ms.rabi = 0.5 * p.omega_m;
  ms.dt_divisor = 96;       // deepest-cooling cells get closest to purity
  ms.truncation_tol = 0.05; // ratio resolution needs far less tail headroom
  const CoolingMapResult map = cooling_map(make_space(59), p, ms);

  const int res = ms.resolution;
  const auto at = [&](int i, int j) { return map.ratio[std::size_t(i * res + j)]; };
  // A cell either cools (finite ratio < 1) or fails to: ratio ≥ 1, or NaN
  // where the state outgrew the 0.05 tail headroom before 100 cycles — the
  // drive near Δ ≈ ω at strong coupling pumps the oscillator resonantly, and
  // the fail-closed marker is the honest reading of "heats catastrophically".
  const auto cools = [&](int i, int j) {
    const double r = at(i, j);
    return std::isfinite(r) && r < 1.0;
  };

  // grid indices of the benchmark point (Δ = 2ω → i = 5, g = ω/2 → j = 5)
  const int bi = 5, bj = 5;
  const bool benchmark_cools = cools(bi, bj);

  // the cooling cells must form one connected region containing the
  // benchmark point
  bool connected = benchmark_cools;
  int n_cool_cells = 0;
  if (benchmark_cools) {
    std::vector<char> seen(std::size_t(res * res), 0);
    std::deque<std::pair<int, int>> queue{{bi, bj}};
    seen[std::size_t(bi * res + bj)] = 1;
    int visited = 0;
    while (!queue.empty()) {
      const auto [i, j] = queue.front();
      queue.pop_front();
      ++visited;
      const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
      for (int k = 0; k < 4; ++k) {
        const int ni = i + di[k], nj = j + dj[k];
        if (ni < 0 || nj < 0 || ni >= res || nj >= res) continue;
        if (seen[std::size_t(ni * res + nj)] || !cools(ni, nj)) continue;
        seen[std::size_t(ni * res + nj)] = 1;
        queue.emplace_back(ni, nj);
      }
    }
    for (int i = 0; i < res; ++i)
      for (int j = 0; j < res; ++j) n_cool_cells += cools(i, j) ? 1 : 0;
    connected = visited == n_cool_cells;
  }

  // heating requires coupling above a strictly positive threshold: every
  // non-cooling cell (ratio ≥ 1 or blown up) sits at g above the first two
  // columns, and heating does occur somewhere with a finite ratio ≥ 1
  int j_first_heat = res;     // lowest coupling index of any non-cooling cell
  int n_heat = 0, n_blown = 0;
  for (int i = 0; i < res; ++i) {
    for (int j = 0; j < res; ++j) {
      if (cools(i, j)) continue;
      j_first_heat = std::min(j_first_heat, j);
      (std::isfinite(at(i, j)) ? n_heat : n_blown)++;
    }
  }
  const bool heating_exists = n_heat > 0;
  const bool threshold = j_first_heat >= 2;  // g ≤ ω/6 cools at every detuning

  const bool pass = monotone && cold && pinned && benchmark_cools && connected &&
                    heating_exists && threshold;
  std::string detail = strf(
      "stationary n̄ %.4f (< 2, pin %.4f±2%%), worst cycle-to-cycle rise %.2e%s, "
      "top-two %.2e, min eig %.1e; "
      "map: benchmark ratio %.3f, %d cooling cells connected=%s, "
      "%d heating + %d blown-up cells all at g ≥ %.2fω",
      rep.n_stationary, kStationaryBaseline, worst_rise,
      worst_cycle >= 0 ? strf(" (cycle %d)", worst_cycle).c_str() : "",
      rep.health.max_toptwo, rep.health.min_eigenvalue, at(bi, bj), n_cool_cells,
      connected ? "yes" : "no", n_heat, n_blown,
      j_first_heat < res ? (j_first_heat + 1) / double(res) : std::nan(""));
  if (kStationaryBaseline <= 0.0)
    detail += strf(" [baseline unfrozen: measured %.6f]", rep.n_stationary);
  return {pass, std::move(detail)};
}

// ---------------------------------------------------------------------------
// 7: Otto engine — efficiency bounds across stroke times, plus convergence
//    of η/λ with the cold-stroke depth at a short stroke
// ---------------------------------------------------------------------------

ModelParams otto_params() {
  ModelParams p;  // hot bath at n̄ = 7, engineered cold bath via drive-and-reset
  p.n_th = 7.0;
  p.gamma_1 = 0.0;  // see cooling_params(): the cold stroke needs a coherent spin
  p.gamma_2 = 0.0;
  return p;
}

Verdict check_otto() {
  const ModelParams p = otto_params();
  const Space sp = make_space(100);
  const double omega = p.omega_m;

  // --- sweep of the dimensionless stroke time ωT from 3π to 10π ---
  // The ramp rate is fixed and the frequency drop λ = d_tω·T/ω scales with
  // the stroke time. 1e3 rad/s² keeps λ within (0, 1) across the range; an
  // order of magnitude higher, λ would exceed 1 beyond ωT ≈ 3.1π and the
  // up-ramp would cross zero frequency.
  std::vector<double> strokes;
  for (double k : {3.0, 4.75, 6.5, 8.25, 10.0}) strokes.push_back(k * pi / omega);
  OttoPlan base;
  base.n_cool = 250;
  const std::vector<OttoSweepRow> rows = otto_sweep(sp, p, strokes, 1e3, base, 1);

  bool engines = true, closed = true, bounded = true, above_ca = true;
  double worst_closure = 0.0, worst_margin = 1.0, worst_ca = 1.0;
  for (const auto& r : rows) {
    engines = engines && r.engine;
    worst_closure = std::max(worst_closure, std::abs(r.closure_over_qh));
    worst_margin = std::min(worst_margin, r.lambda - r.eta);
    worst_ca = std::min(worst_ca, r.eta - r.eta_ca);
  }
  closed = worst_closure <= 1e-6;
  bounded = worst_margin >= -1e-12;
  above_ca = worst_ca > 0.0;

  // --- short-stroke point ωT = π/10 at the full ramp rate 1e4 rad/s²:
  //     η/λ must clear 0.9 once the cold stroke is ≥ 50 cycles deep and rise
  //     with depth until it saturates.
  //
  // With number-conserving ramps the saturated value is the bath-drag limit
  // 1 − γ_m·T·(1−λ)/λ, reached within ~10 cycles; past that the per-depth
  // differences sit below the cycle-closure resolution. A reported cycle
  // closes to 0.5e-6·|Q_h|, which propagates to ~1e-6/λ ≈ 3.2e-5 on η/λ, so
  // the rise is asserted strictly from the shallowest depth into the ≥ 50
  // domain and the saturated tail may not fall by more than that resolution.
  const std::vector<int> depths = {2, 50, 100, 200};
  std::vector<double> ratio;
  bool deep_engines = true;
  for (int d : depths) {
    OttoPlan plan;
    plan.t_stroke = 0.1 * pi / omega;
    plan.d_t_omega = 1e4;
    plan.n_cool = d;
    const CycleLedger led = run_otto(sp, p, plan);
    ratio.push_back(led.eta / led.eta_c);
    if (d >= 50) deep_engines = deep_engines && led.engine;
  }
  const double lambda_inset = 1e4 * (0.1 * pi / omega) / omega;
  const double tail_resolution = 1e-6 / lambda_inset;
  bool rising = ratio[1] > ratio[0];
  for (std::size_t i = 2; i < ratio.size(); ++i)
    rising = rising && ratio[i] >= ratio[i - 1] - tail_resolution;
  const bool deep_enough = ratio[1] >= 0.9 && ratio[2] >= 0.9 && ratio[3] >= 0.9;

  const bool pass =
      engines && closed && bounded && above_ca && deep_engines && rising && deep_enough;
  return {pass,
          strf("sweep λ %.3f..%.3f: engines=%s, worst |ΔE/Q_h| %.2e (≤1e-6), "
               "min λ−η %.2e (≥0), min η−η_CA %.3f (>0); "
               "short stroke η/λ @ depth {2,50,100,200} = {%.6f, %.6f, %.6f, %.6f} "
               "(rising to saturation, ≥0.9 from 50)",
               rows.front().lambda, rows.back().lambda, engines ? "yes" : "no",
               worst_closure, worst_margin, worst_ca, ratio[0], ratio[1], ratio[2],
               ratio[3])};
}

// ---------------------------------------------------------------------------
// 8: the shipped CLI's validation suite — full pass in under five minutes
// ---------------------------------------------------------------------------

Verdict check_cli(const std::string& cli) {
  if (cli.empty()) return {false, "no CLI path supplied (second argument)"};
  namespace fs = std::filesystem;
  const fs::path work = fs::temp_directory_path() / "spinmech-acceptance-validate";
  fs::create_directories(work);
  const std::string log = (work / "validate.log").string();
  const std::string cmd =
      "\"" + cli + "\" validate --out \"" + work.string() + "\" > \"" + log + "\" 2>&1";

  const auto t0 = std::chrono::steady_clock::now();
  const int status = std::system(cmd.c_str());
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const bool pass = status == 0 && wall < 300.0;
  return {pass, strf("`validate` exit status %d in %.1f s (budget 300 s); log: %s",
                     status, wall, log.c_str())};
}

struct Entry {
  const char* name;
  Verdict (*body)();
};

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <check-id 1..8 | all> [path-to-cli]\n", argv[0]);
    return 2;
  }
  const Entry table[8] = {
      {"damped-oscillator relaxation", check_damped_oscillator},
      {"rabi flopping", check_rabi},
      {"displaced-frame equivalence", check_frame},
      {"resonant quantum swap", check_swap},
      {"flywheel battery round trip", check_battery},
      {"engineered-bath cooling", check_cooling},
      {"otto engine bounds", check_otto},
      {"cli validation suite", nullptr},
  };
  const std::string cli = argc > 2 ? argv[2] : "";

  const auto run_one = [&](int id) {
    Verdict v;
    try {
      v = id == 8 ? check_cli(cli) : table[id - 1].body();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    std::printf("[%s] check %d, %s — %s\n", v.pass ? "PASS" : "FAIL", id,
                table[id - 1].name, v.detail.c_str());
    std::fflush(stdout);
    return v.pass;
  };

  const std::string arg = argv[1];
  if (arg == "all") {
    bool all = true;
    for (int id = 1; id <= 8; ++id) all = run_one(id) && all;
    return all ? 0 : 1;
  }
  const int id = std::atoi(arg.c_str());
  if (id < 1 || id > 8) {
    std::fprintf(stderr, "check id out of range: %s\n", arg.c_str());
    return 2;
  }
  return run_one(id) ? 0 : 1;
}
