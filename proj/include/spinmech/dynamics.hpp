// dynamics.hpp — Lindblad generator, fixed-step RK4 segment evolution,
// pulse schedules, and instantaneous events (π pulse, spin reset)
#pragma once

#include <variant>
#include <vector>

#include "spinmech/model.hpp"
#include "spinmech/observables.hpp"
#include "spinmech/space.hpp"
#include "spinmech/types.hpp"

namespace spinmech {

// One dissipation channel of the master equation
//   dρ/dt = −i[H,ρ] + Σ_c (rate_c/2)·ℒ[x_c]ρ,  ℒ[x]ρ = 2xρx† − x†xρ − ρx†x.
// mechanical_thermal contributes (γ/2)[(n̄+1)ℒ[a] + n̄ℒ[a†]];
// spin_damping contributes (γ/2)[(n+1)ℒ[σ₋] + n·ℒ[σ₊]] with bath occupation n;
// spin_dephasing is (γ/2)ℒ[σ_z]; optical_reset is (Γ/2)ℒ[σ₋].
struct DissipatorSpec {
  enum class Kind { mechanical_thermal, spin_damping, spin_dephasing, optical_reset };
  Kind kind = Kind::mechanical_thermal;
  double rate = 0;        // γ_m, γ_1, γ_2, or Γ respectively (1/s)
  double occupation = 0;  // bath occupation (mechanical_thermal / spin_damping only)
  bool enabled = true;
};

// the standard physical channel set of the model, optionally with the
// optical pumping channel added
std::vector<DissipatorSpec> physical_dissipators(const ModelParams& p,
                                                 bool include_pump = false);

// effective per-channel rates after folding occupations together; the basis
// of both the integrator fast path and the step-size stability bound
struct ReducedRates {
  double mech_down = 0;  // γ_m(n̄+1)
  double mech_up = 0;    // γ_m n̄
  double spin_down = 0;  // γ_1(n+1) + Γ
  double spin_up = 0;    // γ_1 n
  double dephasing = 0;  // γ_2
};
ReducedRates reduce_rates(const std::vector<DissipatorSpec>& dissipators);

// dense reference evaluation of the master-equation right-hand side
Matrix lindblad_rhs(const Space& sp, const Matrix& h,
                    const std::vector<DissipatorSpec>& dissipators, const Matrix& rho);

// One piecewise-constant-drive interval of a pulse schedule. The mechanical
// frequency may ramp linearly from omega_start to omega_end; drive amplitude
// and detuning are constant over the interval.
struct Segment {
  double duration = 0;          // s
  double omega_start = 0;       // rad/s, > 0
  double omega_end = 0;         // rad/s; equal to omega_start for a flat segment
  double drive_amplitude = 0;   // Ω during this segment, rad/s
  double detuning = 0;          // Δ during this segment, rad/s
  std::vector<DissipatorSpec> dissipators;
  int sample_every = 1;         // record observables every this many steps
  int steps_override = 0;       // 0 = automatic step planning
  int resolution_divisor = 40;  // steps per fastest coherent period
  double truncation_tol = 1e-6; // cap on combined top-two Fock populations
  // spin known to sit exactly in the reset level with the drive off: evolve
  // only the occupied mechanical block (requires drive_amplitude = 0 and no
  // upward spin channel)
  bool spin_parked = false;
  // run the O(d³) eigenvalue positivity check at the segment end (cheap
  // checks always run at the sample cadence); long cycle loops thin this out
  bool full_check_at_end = true;
};

// automatic step planning: resolve the fastest coherent frequency with
// resolution_divisor steps per period, subject to dissipative and
// Hamiltonian-norm stability caps, never fewer than min_steps
struct StepPlan {
  int steps = 0;
  double dt = 0;
};
StepPlan plan_steps(const Space& sp, const ModelParams& p, const Segment& seg,
                    int min_steps = 32);

struct Trajectory {
  std::vector<ObservableRecord> samples;
  Matrix final_state;
  HealthStats health;
};

// Evolve rho over one segment with fixed-step RK4. dt_request ≤ 0 selects
// automatic step planning; a positive dt_request is rounded so an integer
// number of steps lands exactly on the segment end. Samples are stamped
// t0 + local time; the t0 sample itself is recorded only when
// include_initial is set. Throws invariant_violation on a trace, positivity,
// or truncation-tolerance breach.
Trajectory evolve_segment(const Space& sp, const ModelParams& p, const Matrix& rho,
                          const Segment& seg, double dt_request = 0, double t0 = 0,
                          bool include_initial = false);

// right-hand side the integrator actually applies, evaluated at local time t
// inside the segment (test hook: interaction-picture generator, exactly the
// master equation minus the instantaneous ω(t)a†a rotation)
Matrix segment_generator_rhs(const Space& sp, const ModelParams& p, const Segment& seg,
                             const Matrix& rho, double t_local);

// accumulated mechanical phase ∫₀ᵗ ω(t')dt' of a segment's frequency ramp
double segment_phase(const Segment& seg, double t_local);

enum class ResetMode { instant_channel, rate_integration };

// conjugation by exp(−i(π/2)σ_x): swaps the two spin levels, mechanics untouched
Matrix apply_pi_pulse(const Matrix& rho, const Space& sp);

// Spin reset to the reset level. instant_channel applies the exact amplitude
// damping channel (Kraus |0⟩⟨0|⊗I, |0⟩⟨1|⊗I), preserving the mechanical
// state. rate_integration evolves for p.t_laser with the optical pumping
// channel and all physical generators active.
Matrix apply_spin_reset(const Matrix& rho, const Space& sp, ResetMode mode,
                        const ModelParams& p);

struct InstantEvent {
  enum class Kind { pi_pulse, spin_reset };
  Kind kind = Kind::pi_pulse;
  ResetMode reset_mode = ResetMode::instant_channel;
};

using ScheduleItem = std::variant<Segment, InstantEvent>;
using PulseSchedule = std::vector<ScheduleItem>;

// sequence segments and events, concatenating trajectories with strictly
// increasing timestamps (the initial state is sampled once, at t0 = 0)
Trajectory run_schedule(const Space& sp, const ModelParams& p, const Matrix& rho0,
                        const PulseSchedule& schedule, double dt_request = 0);

}  // namespace spinmech
