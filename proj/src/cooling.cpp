#include "spinmech/cooling.hpp"

#include <cmath>
#include <limits>

#include "spinmech/states.hpp"
#include "spinmech/sweep.hpp"
#include "spinmech/thermo.hpp"

namespace spinmech {

namespace {

struct ResolvedCooling {
  ModelParams params;   // overrides folded in
  double omega = 0;     // protocol mechanical frequency
  double t_interact = 0;
};

ResolvedCooling resolve(const ModelParams& p, const CoolingPlan& plan) {
  ResolvedCooling r;
  r.params = p;
  if (plan.delta >= 0) r.params.delta = plan.delta;
  if (plan.g >= 0) r.params.g = plan.g;
  if (plan.rabi >= 0) r.params.rabi = plan.rabi;
  r.omega = plan.omega > 0 ? plan.omega : p.omega_m;
  r.t_interact = plan.t_interact > 0 ? plan.t_interact : pi / r.omega;
  return r;
}

}  // namespace

CoolingReport run_cooling(const Space& sp, const ModelParams& p, const CoolingPlan& plan) {
  const double n0 = plan.n_bar_0 >= 0 ? plan.n_bar_0 : p.n_th;
  return run_cooling(sp, p, plan, thermal_state(sp, n0, plan.truncation_tol));
}

CoolingReport run_cooling(const Space& sp, const ModelParams& p, const CoolingPlan& plan,
                          const Matrix& rho0) {
  if (plan.n_cycles < 1) throw config_error("cooling: n_cycles must be at least 1");
  const ResolvedCooling r = resolve(p, plan);

  Segment drive;
  drive.duration = r.t_interact;
  drive.omega_start = drive.omega_end = r.omega;
  drive.drive_amplitude = r.params.rabi;
  drive.detuning = r.params.delta;
  drive.dissipators = physical_dissipators(r.params);
  drive.sample_every = plan.sample_every;
  drive.resolution_divisor = plan.dt_divisor;
  drive.truncation_tol = plan.truncation_tol;

  Segment pump;  // used only in rate_integration reset mode
  pump = drive;
  pump.duration = r.params.t_laser;
  pump.drive_amplitude = 0;
  pump.dissipators = physical_dissipators(r.params, /*include_pump=*/true);
  pump.sample_every = 0;

  CoolingReport rep;
  Matrix state = rho0;
  double t = 0;
  ObservableRecord rec0 = make_record(state, sp, t);
  rep.trajectory.samples.push_back(rec0);
  rep.n_bar_per_cycle.push_back(rec0.n_fluct);

  for (int c = 0; c < plan.n_cycles; ++c) {
    // the O(d³) positivity check runs every tenth cycle and at the end; the
    // cheap trace/hermiticity/truncation checks run at every sample
    drive.full_check_at_end = (c % 10 == 9) || (c + 1 == plan.n_cycles);
    pump.full_check_at_end = drive.full_check_at_end;
    Trajectory tr = evolve_segment(sp, r.params, state, drive, 0, t, false);
    merge(rep.health, tr.health);
    state = std::move(tr.final_state);
    t += drive.duration;
    if (plan.sample_every > 0) {
      rep.trajectory.samples.insert(rep.trajectory.samples.end(), tr.samples.begin(),
                                    tr.samples.end());
    }
    if (plan.reset_mode == ResetMode::instant_channel) {
      state = apply_spin_reset(state, sp, ResetMode::instant_channel, r.params);
    } else {
      Trajectory pr = evolve_segment(sp, r.params, state, pump, 0, t, false);
      merge(rep.health, pr.health);
      state = std::move(pr.final_state);
      t += pump.duration;
    }
    ObservableRecord rec = make_record(state, sp, t);
    if (plan.sample_every <= 0) rep.trajectory.samples.push_back(rec);
    rep.n_bar_per_cycle.push_back(rec.n_fluct);
  }
  rep.trajectory.final_state = state;
  rep.n_stationary = rep.n_bar_per_cycle.back();
  if (rep.n_stationary > 0) {
    const EffectiveTemperature te = effective_temperature(rep.n_stationary, r.omega);
    rep.beta_h_omega = te.beta_h_omega;
    rep.t_effective_scaled = te.t_scaled;
  }
  return rep;
}

CoolingMapResult cooling_map(const Space& sp, const ModelParams& p,
                             const CoolingMapSpec& spec) {
  if (spec.resolution < 1) throw config_error("cooling_map: resolution must be >= 1");
  if (!(spec.delta_max > 0) || !(spec.g_max > 0)) {
    throw config_error("cooling_map: grid bounds must be positive");
  }
  const int res = spec.resolution;
  CoolingMapResult out;
  out.resolution = res;
  out.deltas.resize(res);
  out.gs.resize(res);
  for (int i = 0; i < res; ++i) {
    out.deltas[i] = (i + 1) * spec.delta_max / res;
    out.gs[i] = (i + 1) * spec.g_max / res;
  }
  out.ratio.assign(std::size_t(res) * res, std::numeric_limits<double>::quiet_NaN());

  const Matrix rho0 = thermal_state(sp, spec.n_bar_0, spec.truncation_tol);
  const double n0 = make_record(rho0, sp, 0).n_fluct;

  parallel_for_indexed(res * res, spec.workers, [&](int idx) {
    const int i = idx / res;
    const int j = idx % res;
    CoolingPlan plan;
    plan.n_cycles = spec.n_cycles;
    plan.delta = out.deltas[i];
    plan.g = out.gs[j];
    plan.rabi = spec.rabi >= 0 ? spec.rabi : p.rabi;
    plan.n_bar_0 = spec.n_bar_0;
    plan.dt_divisor = spec.dt_divisor;
    plan.truncation_tol = spec.truncation_tol;
    try {
      const CoolingReport rep = run_cooling(sp, p, plan, rho0);
      out.ratio[idx] = rep.n_stationary / n0;
    } catch (const std::exception&) {
      // per-point failure: ratio stays NaN
    }
  });

  // interpolated unit-ratio crossings along grid edges
  auto at = [&](int i, int j) { return out.ratio[std::size_t(i) * res + j]; };
  for (int i = 0; i < res; ++i) {
    for (int j = 0; j < res; ++j) {
      const double v = at(i, j);
      if (!std::isfinite(v)) continue;
      if (i + 1 < res && std::isfinite(at(i + 1, j)) && (v - 1) * (at(i + 1, j) - 1) < 0) {
        const double f = (1 - v) / (at(i + 1, j) - v);
        out.unit_contour.emplace_back(out.deltas[i] + f * (out.deltas[i + 1] - out.deltas[i]),
                                      out.gs[j]);
      }
      if (j + 1 < res && std::isfinite(at(i, j + 1)) && (v - 1) * (at(i, j + 1) - 1) < 0) {
        const double f = (1 - v) / (at(i, j + 1) - v);
        out.unit_contour.emplace_back(out.deltas[i],
                                      out.gs[j] + f * (out.gs[j + 1] - out.gs[j]));
      }
    }
  }
  return out;
}

}  // namespace spinmech
