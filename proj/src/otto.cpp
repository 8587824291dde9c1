#include "spinmech/otto.hpp"

#include <cmath>
#include <limits>

#include "spinmech/dynamics.hpp"
#include "spinmech/states.hpp"
#include "spinmech/sweep.hpp"

namespace spinmech {

namespace {

double vertex_temperature(double n_fluct, double omega, double omega_ref) {
  if (n_fluct <= 0) return 0;
  return (omega / omega_ref) / std::log1p(1.0 / n_fluct);
}

void push_ts(std::vector<TSPoint>& pts, int stroke, const ObservableRecord& rec,
             double omega, double omega_ref) {
  TSPoint q;
  q.stroke = stroke;
  q.t_seconds = rec.t;
  q.omega = omega;
  q.n_fluct = rec.n_fluct;
  q.entropy_nats = rec.entropy;
  q.temperature_ref = vertex_temperature(rec.n_fluct, omega, omega_ref);
  pts.push_back(q);
}

}  // namespace

CycleLedger run_otto(const Space& sp, const ModelParams& p, const OttoPlan& plan) {
  if (!(plan.t_stroke > 0)) throw config_error("otto: t_stroke must be positive");
  double lambda = plan.lambda;
  if (lambda < 0) {
    if (!(plan.d_t_omega > 0)) {
      throw config_error("otto: either lambda or d_t_omega must be given");
    }
    lambda = plan.d_t_omega * plan.t_stroke / p.omega_m;
  }
  if (!(lambda > 0 && lambda < 1)) {
    throw config_error("otto: lambda must lie strictly between 0 and 1");
  }
  if (plan.n_cool < 0) throw config_error("otto: n_cool must be non-negative");

  const double omega1 = p.omega_m;
  const double omega2 = omega1 * (1.0 - lambda);
  const double n_init = plan.n_bar_init >= 0 ? plan.n_bar_init : p.n_th;

  CoolingPlan cool;
  cool.n_cycles = std::max(plan.n_cool, 1);
  cool.g = (plan.cool_g_over_omega1 >= 0 ? plan.cool_g_over_omega1 : 0.25) * omega1;
  cool.delta =
      (plan.cool_delta_over_omega2 >= 0 ? plan.cool_delta_over_omega2 : 3.0) * omega2;
  cool.rabi =
      (plan.cool_rabi_over_omega2 >= 0 ? plan.cool_rabi_over_omega2 : 0.5) * omega2;
  cool.t_interact =
      (plan.cool_t_interact_periods2 > 0 ? plan.cool_t_interact_periods2 : 0.5) * 2.0 *
      pi / omega2;
  cool.omega = omega2;
  cool.dt_divisor = plan.dt_divisor;
  cool.truncation_tol = plan.truncation_tol;

  std::vector<DissipatorSpec> bath = {
      {DissipatorSpec::Kind::mechanical_thermal, p.gamma_m, p.n_th, true}};

  auto ramp_segment = [&](double from, double to) {
    Segment s;
    s.duration = plan.t_stroke;
    s.omega_start = from;
    s.omega_end = to;
    s.dissipators = bath;
    s.spin_parked = true;
    s.resolution_divisor = plan.dt_divisor;
    s.truncation_tol = plan.truncation_tol;
    const StepPlan sp_plan = plan_steps(sp, p, s);
    s.sample_every =
        std::max(1, sp_plan.steps / std::max(plan.ts_samples_per_stroke, 1));
    return s;
  };

  Matrix state = thermal_state(sp, n_init, plan.truncation_tol);
  CycleLedger ledger;
  ledger.omega_hot = omega1;
  ledger.omega_cold = omega2;
  ledger.lambda = lambda;

  const double hb = hbar_si;
  double t = 0;

  for (int cycle = 1; cycle <= plan.max_cycles; ++cycle) {
    std::vector<TSPoint> ts;
    HealthStats health;

    const ObservableRecord rec1 = make_record(state, sp, t);
    push_ts(ts, 1, rec1, omega1, omega1);
    const double e1 = hb * omega1 * rec1.n_mean;

    // stroke 1→2: expansion ramp, number-conserving up to the bath
    Segment down = ramp_segment(omega1, omega2);
    Trajectory tr = evolve_segment(sp, p, state, down, 0, t, false);
    for (const auto& r : tr.samples) {
      const double frac = (r.t - t) / plan.t_stroke;
      push_ts(ts, 1, r, omega1 + frac * (omega2 - omega1), omega1);
    }
    merge(health, tr.health);
    state = std::move(tr.final_state);
    t += down.duration;
    const ObservableRecord rec2 = make_record(state, sp, t);
    const double e2 = hb * omega2 * rec2.n_mean;

    // stroke 2→3: engineered cold contact at fixed ω₂
    double t_cold_end = t;
    if (plan.n_cool > 0) {
      CoolingReport cr = run_cooling(sp, p, cool, state);
      merge(health, cr.health);
      // cooling trajectory timestamps are protocol-local; re-stamp
      for (std::size_t i = 1; i < cr.trajectory.samples.size(); ++i) {
        ObservableRecord r = cr.trajectory.samples[i];
        r.t += t;
        push_ts(ts, 2, r, omega2, omega1);
        t_cold_end = r.t;
      }
      state = std::move(cr.trajectory.final_state);
      t = t_cold_end;
    }
    const ObservableRecord rec3 = make_record(state, sp, t);
    const double e3 = hb * omega2 * rec3.n_mean;

    // stroke 3→4: compression ramp
    Segment up = ramp_segment(omega2, omega1);
    tr = evolve_segment(sp, p, state, up, 0, t, false);
    for (const auto& r : tr.samples) {
      const double frac = (r.t - t) / plan.t_stroke;
      push_ts(ts, 3, r, omega2 + frac * (omega1 - omega2), omega1);
    }
    merge(health, tr.health);
    state = std::move(tr.final_state);
    t += up.duration;
    const ObservableRecord rec4 = make_record(state, sp, t);
    const double e4 = hb * omega1 * rec4.n_mean;

    // stroke 4→1: hot-bath contact until the occupation returns to n̄_th
    double n_now = rec4.n_mean;
    if (p.gamma_m > 0 && p.n_th > 0) {
      const double t_max = 10.0 / p.gamma_m;
      const double chunk = 0.1 / p.gamma_m;
      double elapsed = 0;
      while (std::abs(n_now - p.n_th) > 1e-3 * p.n_th && elapsed < t_max) {
        Segment hot;
        hot.duration = std::min(chunk, t_max - elapsed);
        hot.omega_start = hot.omega_end = omega1;
        hot.dissipators = bath;
        hot.spin_parked = true;
        hot.resolution_divisor = plan.dt_divisor;
        hot.truncation_tol = plan.truncation_tol;
        hot.sample_every = 0;
        hot.full_check_at_end = false;  // one full check after the loop instead
        Trajectory hr = evolve_segment(sp, p, state, hot, 0, t, false);
        merge(health, hr.health);
        state = std::move(hr.final_state);
        t += hot.duration;
        elapsed += hot.duration;
        const ObservableRecord r = hr.samples.back();
        push_ts(ts, 4, r, omega1, omega1);
        n_now = r.n_mean;
      }
      check_state_full(state, sp, plan.truncation_tol, health);
    }
    const ObservableRecord rec1p = make_record(state, sp, t);
    const double e1p = hb * omega1 * rec1p.n_mean;

    ledger.e1 = e1;
    ledger.e2 = e2;
    ledger.e3 = e3;
    ledger.e4 = e4;
    ledger.e1_return = e1p;
    ledger.w_e = e2 - e1;
    ledger.q_c = e3 - e2;
    ledger.w_c = e4 - e3;
    ledger.q_h = e1p - e4;
    ledger.closure = e1p - e1;
    ledger.n1 = rec1.n_fluct;
    ledger.n2 = rec2.n_fluct;
    ledger.n3 = rec3.n_fluct;
    ledger.n4 = rec4.n_fluct;
    ledger.t1 = vertex_temperature(rec1.n_fluct, omega1, omega1);
    ledger.t2 = vertex_temperature(rec2.n_fluct, omega2, omega1);
    ledger.t3 = vertex_temperature(rec3.n_fluct, omega2, omega1);
    ledger.t4 = vertex_temperature(rec4.n_fluct, omega1, omega1);
    ledger.s1 = rec1.entropy;
    ledger.s2 = rec2.entropy;
    ledger.s3 = rec3.entropy;
    ledger.s4 = rec4.entropy;
    ledger.t3_over_t4 = ledger.t4 > 0 ? ledger.t3 / ledger.t4
                                      : std::numeric_limits<double>::quiet_NaN();
    ledger.cycles_run = cycle;
    ledger.stroke_points = std::move(ts);
    ledger.health = health;

    const EfficiencyResult eff = efficiency(ledger);
    ledger.eta = eff.eta;
    ledger.eta_c = eff.eta_c;
    ledger.eta_ca = eff.eta_ca;
    ledger.engine = eff.engine;
    if (ledger.engine && ledger.eta > ledger.lambda + 1e-12) {
      throw invariant_violation("otto: efficiency exceeded the ideal Otto bound");
    }

    if (ledger.q_h > 0 && std::abs(ledger.closure) <= 0.5e-6 * std::abs(ledger.q_h)) {
      break;
    }
    // degenerate (non-engine) cycles still settle to a periodic state
    if (std::abs(ledger.closure) <= 1e-12 * std::max(std::abs(ledger.e1), hb * omega1)) {
      break;
    }
  }
  return ledger;
}

std::vector<OttoSweepRow> otto_sweep(const Space& sp, const ModelParams& p,
                                     const std::vector<double>& t_strokes,
                                     double d_t_omega, const OttoPlan& base,
                                     int workers) {
  std::vector<OttoSweepRow> rows(t_strokes.size());
  parallel_for_indexed(int(t_strokes.size()), workers, [&](int i) {
    OttoPlan plan = base;
    plan.t_stroke = t_strokes[std::size_t(i)];
    plan.d_t_omega = d_t_omega;
    plan.lambda = -1;
    const CycleLedger ledger = run_otto(sp, p, plan);
    OttoSweepRow& row = rows[std::size_t(i)];
    row.omega_m_t = p.omega_m * plan.t_stroke;
    row.lambda = ledger.lambda;
    row.t3_over_t4 = ledger.t3_over_t4;
    row.eta = ledger.eta;
    row.eta_c = ledger.eta_c;
    row.eta_ca = ledger.eta_ca;
    row.engine = ledger.engine;
    row.closure_over_qh = ledger.q_h != 0 ? ledger.closure / ledger.q_h : 0;
    row.cycles_run = ledger.cycles_run;
  });
  return rows;
}

}  // namespace spinmech
