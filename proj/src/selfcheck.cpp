#include "spinmech/selfcheck.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include <Eigen/Eigenvalues>

#include "spinmech/battery.hpp"
#include "spinmech/cooling.hpp"
#include "spinmech/csv.hpp"
#include "spinmech/dynamics.hpp"
#include "spinmech/model.hpp"
#include "spinmech/observables.hpp"
#include "spinmech/otto.hpp"
#include "spinmech/states.hpp"

namespace spinmech {

namespace {

std::string fmt(const char* pattern, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), pattern, a, b);
  return buf;
}

CheckResult guarded(const std::string& name, CheckResult (*body)()) {
  try {
    CheckResult r = body();
    r.name = name;
    return r;
  } catch (const std::exception& e) {
    return {name, false, std::string("threw: ") + e.what()};
  }
}

Vector evolve_closed(const Matrix& h, const Vector& psi0, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  Vector phases(h.rows());
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    phases(i) = std::polar(1.0, -es.eigenvalues()(i) * t);
  }
  return es.eigenvectors() * (phases.asDiagonal() * (es.eigenvectors().adjoint() * psi0));
}

CheckResult damped_mean_relaxation_body() {
  const Space sp = make_space(40);
  ModelParams p;
  p.g = 0;
  p.rabi = 0;
  p.delta = 0;
  p.n_th = 0.25;
  p.gamma_m = p.omega_m / 50.0;  // fast decay so three decay times stay cheap

  Segment seg;
  seg.duration = 3.0 / p.gamma_m;
  seg.omega_start = seg.omega_end = p.omega_m;
  seg.dissipators = physical_dissipators(p);
  seg.sample_every = 1;
  seg.spin_parked = true;

  const Matrix rho0 = thermal_state(sp, 1.0, seg.truncation_tol);
  const Trajectory tr = evolve_segment(sp, p, rho0, seg, 0, 0, true);

  const double n0 = tr.samples.front().n_mean;
  double worst = 0;
  for (const auto& r : tr.samples) {
    const double expected = p.n_th + (n0 - p.n_th) * std::exp(-p.gamma_m * r.t);
    worst = std::max(worst, std::abs(r.n_mean - expected) / expected);
  }
  CheckResult out;
  out.pass = worst <= 1e-6;
  out.detail = fmt("max relative error %.3g (tolerance %.0e)", worst, 1e-6);
  return out;
}

CheckResult rabi_flopping_body() {
  const Space sp = make_space(3);
  ModelParams p;
  p.g = 0;
  p.delta = 0;
  const double omega_r = 2.0 * pi * 100.0;

  Segment seg;
  seg.duration = 10.0 * pi / omega_r;  // ten periods of cos(2Ωt)
  seg.omega_start = seg.omega_end = p.omega_m;
  seg.drive_amplitude = omega_r;
  seg.dissipators = {};
  seg.sample_every = 1;
  seg.resolution_divisor = 256;

  const Matrix rho0 = thermal_state(sp, 0.0, seg.truncation_tol);
  const Trajectory tr = evolve_segment(sp, p, rho0, seg, 0, 0, true);

  double worst = 0;
  for (const auto& r : tr.samples) {
    worst = std::max(worst, std::abs(r.sigma_z - std::cos(2.0 * omega_r * r.t)));
  }
  CheckResult out;
  out.pass = worst <= 1e-6;
  out.detail = fmt("max |⟨σ_z⟩ − cos| %.3g (tolerance %.0e)", worst, 1e-6);
  return out;
}

CheckResult frame_equivalence_body() {
  const int n_max = 60;
  const Space sp = make_space(n_max);
  ModelParams p;
  p.delta = 2.0 * p.omega_m;
  p.g = 0.5 * p.omega_m;
  p.rabi = 0.5 * p.omega_m;

  const Matrix h_lab = lab_hamiltonian(sp, p);
  const Matrix t = frame_transform(sp, p);
  const Matrix h_bar = dressed_hamiltonian(sp, p);
  const Matrix diff = t * h_lab * t.adjoint() - h_bar;
  const FrameParams f = frame_params(p);

  // interior block: both spin sectors, Fock levels ≤ n_max − 15. The depth
  // must clear the displacement bandwidth: rows within ~2β√N of the cutoff
  // feel the truncated ladder algebra, and that band widens with N. Fifteen
  // levels puts the equality at machine precision here, where a five-level
  // margin would leave ~1e-5 of boundary leakage.
  std::vector<int> keep;
  for (int s = 0; s < 2; ++s) {
    for (int n = 0; n <= n_max - 15; ++n) keep.push_back(sp.index(s, n));
  }
  const int k = int(keep.size());
  Matrix sub(k, k), ref(k, k);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) {
      sub(r, c) = diff(keep[std::size_t(r)], keep[std::size_t(c)]);
      ref(r, c) = h_bar(keep[std::size_t(r)], keep[std::size_t(c)]);
    }
  }
  const double c_fit = sub.diagonal().real().mean();
  sub.diagonal().array() -= c_fit;
  const double rel = sub.norm() / ref.norm();
  const double shift_err = std::abs(c_fit - f.energy_shift) /
                           std::max(std::abs(f.energy_shift), 1e-300);

  CheckResult out;
  out.pass = rel <= 1e-8 && shift_err <= 1e-6;
  out.detail = fmt("interior relative Frobenius %.3g (tolerance 1e-8), "
                   "constant-shift mismatch %.3g",
                   rel, shift_err);
  return out;
}

CheckResult exchange_swap_body() {
  ModelParams p;
  p.g = 0.1 * p.omega_m;
  p.rabi = 0.1 * p.omega_m;
  // place the dressed splitting exactly at ω_m so the single-quantum
  // exchange |n=1, lower⟩ ↔ |n=0, upper⟩ is resonant
  const double delta_star =
      std::sqrt(p.omega_m * p.omega_m - 4.0 * p.rabi * p.rabi);
  p.delta = delta_star + p.g * p.g / p.omega_m;

  const FrameParams f = frame_params(p);
  const double t_swap = 0.5 * pi / f.g_eff;

  // exchange-only evolution
  const Space sp_x = make_space(6);
  Vector psi0 = Vector::Zero(sp_x.dim());
  psi0(sp_x.index(0, 1)) = 1.0;
  const Vector psi_x = evolve_closed(jc_hamiltonian(sp_x, p), psi0, t_swap);
  const double p_x = std::norm(psi_x(sp_x.index(1, 0)));

  // full dressed evolution, counter-rotating terms kept
  const Space sp_f = make_space(15);
  Vector phi0 = Vector::Zero(sp_f.dim());
  phi0(sp_f.index(0, 1)) = 1.0;
  const Vector psi_f = evolve_closed(dressed_hamiltonian(sp_f, p), phi0, t_swap);
  const double p_f = std::norm(psi_f(sp_f.index(1, 0)));

  const double err_x = std::abs(p_x - 1.0);  // sin²(g̃·t_swap) = 1
  const double err_f = std::abs(p_f - p_x);
  CheckResult out;
  out.pass = err_x <= 1e-6 && err_f <= 0.02;
  out.detail = fmt("exchange |P−1| %.3g (tolerance 1e-6), full-model deviation "
                   "%.3g (tolerance 0.02)",
                   err_x, err_f);
  return out;
}

BatteryReport small_battery_run() {
  const Space sp = make_space(30);
  ModelParams p;
  p.g = 2.0 * pi * 3.0;
  p.n_th = 1.0;
  BatteryPlan plan;
  plan.n_charge_kicks = 2;
  plan.n_discharge_kicks = 2;
  plan.tau1 = 2.0 * pi / p.omega_m / 128.0;
  return run_battery(sp, p, plan);
}

CheckResult health_verdict(const char* label, const HealthStats& h, double trunc_tol) {
  CheckResult out;
  out.name = label;
  out.pass = h.max_trace_dev <= 1e-8 && h.min_eigenvalue >= -1e-8 &&
             h.max_toptwo <= trunc_tol;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "max |Tr−1| %.2e, min eigenvalue %.2e, top-two population %.2e",
                h.max_trace_dev, h.min_eigenvalue, h.max_toptwo);
  out.detail = buf;
  return out;
}

CheckResult determinism_body() {
  const std::string a = format_trajectory(small_battery_run().trajectory.samples,
                                          OutputFormat::csv);
  const std::string b = format_trajectory(small_battery_run().trajectory.samples,
                                          OutputFormat::csv);
  CheckResult out;
  out.pass = a == b;
  out.detail = out.pass ? "two identical runs serialized to byte-identical text"
                        : "reruns differed";
  return out;
}

}  // namespace

CheckResult check_damped_mean_relaxation() {
  return guarded("damped_mean_relaxation", damped_mean_relaxation_body);
}

CheckResult check_rabi_flopping() {
  return guarded("rabi_flopping", rabi_flopping_body);
}

CheckResult check_frame_equivalence() {
  return guarded("frame_equivalence", frame_equivalence_body);
}

CheckResult check_exchange_swap() {
  return guarded("exchange_swap", exchange_swap_body);
}

std::vector<CheckResult> check_protocol_health() {
  std::vector<CheckResult> out;

  try {
    const BatteryReport rep = small_battery_run();
    out.push_back(health_verdict("battery_health", rep.health, 1e-6));
  } catch (const std::exception& e) {
    out.push_back({"battery_health", false, std::string("threw: ") + e.what()});
  }

  try {
    const Space sp = make_space(40);
    ModelParams p;
    p.delta = 2.0 * p.omega_m;
    p.g = 0.5 * p.omega_m;
    p.rabi = 0.5 * p.omega_m;
    p.n_th = 1.5;
    // drive-and-reset cooling needs the spin's coherence to survive a cycle;
    // at this mechanical frequency the hardware dephasing rate would swamp
    // the exchange entirely, so the protocol runs with an ideal spin
    p.gamma_1 = 0;
    p.gamma_2 = 0;
    CoolingPlan plan;
    plan.n_cycles = 30;
    const CoolingReport rep = run_cooling(sp, p, plan);
    CheckResult r = health_verdict("cooling_health", rep.health, 1e-6);
    if (!(rep.n_stationary < rep.n_bar_per_cycle.front())) {
      r.pass = false;
      r.detail += "; occupation failed to drop";
    }
    out.push_back(r);
  } catch (const std::exception& e) {
    out.push_back({"cooling_health", false, std::string("threw: ") + e.what()});
  }

  try {
    const Space sp = make_space(40);
    ModelParams p;
    p.n_th = 2.0;
    OttoPlan plan;
    plan.t_stroke = pi / (10.0 * p.omega_m);
    plan.lambda = 0.2;
    plan.n_cool = 10;
    plan.max_cycles = 3;
    plan.ts_samples_per_stroke = 8;
    const CycleLedger ledger = run_otto(sp, p, plan);
    out.push_back(health_verdict("otto_health", ledger.health, 1e-6));
  } catch (const std::exception& e) {
    out.push_back({"otto_health", false, std::string("threw: ") + e.what()});
  }

  return out;
}

CheckResult check_determinism() { return guarded("determinism", determinism_body); }

std::vector<CheckResult> run_validation_suite() {
  std::vector<CheckResult> out;
  out.push_back(check_damped_mean_relaxation());
  out.push_back(check_rabi_flopping());
  out.push_back(check_frame_equivalence());
  out.push_back(check_exchange_swap());
  for (auto& r : check_protocol_health()) out.push_back(std::move(r));
  out.push_back(check_determinism());
  return out;
}

}  // namespace spinmech
