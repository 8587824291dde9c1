// cooling.hpp — repeated drive-and-reset cooling of the mechanical mode
#pragma once

#include <utility>
#include <vector>

#include "spinmech/dynamics.hpp"
#include "spinmech/model.hpp"
#include "spinmech/space.hpp"

namespace spinmech {

// One cooling cycle: evolve for t_interact under the driven Hamiltonian with
// all physical dissipators, then reset the spin. Negative fields fall back
// to the model parameters (t_interact → π/ω, occupancy → n_th, ω → ω_m).
struct CoolingPlan {
  int n_cycles = 900;
  double t_interact = -1;    // s
  double delta = -1;         // rad/s override of p.delta (negative = keep)
  double g = -1;             // rad/s override of p.g
  double rabi = -1;          // rad/s override of p.rabi
  double omega = -1;         // rad/s mechanical frequency during the protocol
  double n_bar_0 = -1;       // initial thermal occupancy
  ResetMode reset_mode = ResetMode::instant_channel;
  int sample_every = 0;      // within-segment sampling (0 = cycle ends only)
  int dt_divisor = 40;       // steps per fastest coherent period
  double truncation_tol = 1e-6;
};

struct CoolingReport {
  Trajectory trajectory;                // cycle-end records
  std::vector<double> n_bar_per_cycle;  // fluctuation n̄; entry 0 is the initial value
  double n_stationary = 0;
  double beta_h_omega = 0;
  double t_effective_scaled = 0;        // units ħω/k_B at the protocol frequency
  HealthStats health;
};

CoolingReport run_cooling(const Space& sp, const ModelParams& p, const CoolingPlan& plan,
                          const Matrix& rho0);
// initial state thermal at plan occupancy with the spin in the reset level
CoolingReport run_cooling(const Space& sp, const ModelParams& p, const CoolingPlan& plan);

// grid sweep of the cooling ratio n̄(N_c)/n̄(0) over drive detuning and
// coupling; axis values are (i+1)·max/resolution, i = 0..resolution−1
struct CoolingMapSpec {
  double delta_max = 0;      // rad/s
  double g_max = 0;          // rad/s
  int resolution = 32;
  int n_cycles = 100;
  double n_bar_0 = 8;
  double rabi = -1;          // rad/s; negative = p.rabi
  int dt_divisor = 40;       // steps per fastest coherent period
  double truncation_tol = 1e-6;
  int workers = 1;
};

struct CoolingMapResult {
  int resolution = 0;
  std::vector<double> deltas;  // rad/s, size resolution
  std::vector<double> gs;      // rad/s, size resolution
  // ratio[i·resolution + j] for detuning index i, coupling index j;
  // NaN records a per-point failure
  std::vector<double> ratio;
  // interpolated crossings of ratio = 1 on grid edges, as (Δ, g) pairs
  std::vector<std::pair<double, double>> unit_contour;
};

CoolingMapResult cooling_map(const Space& sp, const ModelParams& p,
                             const CoolingMapSpec& spec);

}  // namespace spinmech
