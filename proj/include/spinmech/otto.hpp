// otto.hpp — four-stroke mechanical engine with an engineered cold bath
#pragma once

#include <vector>

#include "spinmech/cooling.hpp"
#include "spinmech/model.hpp"
#include "spinmech/space.hpp"
#include "spinmech/thermo.hpp"

namespace spinmech {

// Strokes of one cycle at reference frequency ω₁ = p.omega_m and hot-bath
// occupation p.n_th:
//   1→2 linear down-ramp ω₁ → ω₂ = ω₁(1−λ) over t_stroke, hot bath on;
//   2→3 n_cool drive-and-reset cooling cycles at fixed ω₂, hot bath on;
//   3→4 linear up-ramp back to ω₁, hot bath on;
//   4→1 hot-bath contact at ω₁ until |⟨a†a⟩ − n̄_th| ≤ 1e-3·n̄_th or 10/γ_m.
// Cycles repeat from the previous end state until the energy ledger closes.
struct OttoPlan {
  double t_stroke = 0;          // T, s (required)
  double d_t_omega = -1;        // rad/s² ramp rate; sets λ = d_tω·T/ω₁ when λ < 0
  double lambda = -1;           // direct fractional frequency drop ∈ (0, 1)
  int n_cool = 250;             // cooling cycles per cold stroke
  double n_bar_init = -1;       // initial occupancy (<0 → p.n_th)
  // cold-stroke drive parameters as frequency ratios, so one plan scales
  // across sweep points where ω₂ varies with λ
  double cool_g_over_omega1 = -1;        // <0 → 0.25
  double cool_delta_over_omega2 = -1;    // <0 → 3
  double cool_rabi_over_omega2 = -1;     // <0 → 0.5
  double cool_t_interact_periods2 = -1;  // in units of 2π/ω₂; <0 → 0.5
  int max_cycles = 20;
  int ts_samples_per_stroke = 24;
  int dt_divisor = 40;          // steps per fastest coherent period
  double truncation_tol = 1e-6;
};

CycleLedger run_otto(const Space& sp, const ModelParams& p, const OttoPlan& plan);

struct OttoSweepRow {
  double omega_m_t = 0;  // dimensionless stroke time ω₁·T
  double lambda = 0;
  double t3_over_t4 = 0;
  double eta = 0;
  double eta_c = 0;
  double eta_ca = 0;
  bool engine = false;
  double closure_over_qh = 0;
  int cycles_run = 0;
};

// one engine run per stroke time; λ set through the fixed ramp rate d_tω
std::vector<OttoSweepRow> otto_sweep(const Space& sp, const ModelParams& p,
                                     const std::vector<double>& t_strokes,
                                     double d_t_omega, const OttoPlan& base,
                                     int workers = 1);

}  // namespace spinmech
