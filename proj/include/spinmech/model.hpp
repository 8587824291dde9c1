// model.hpp — physical parameters, Hamiltonians, and frame transformations
#pragma once

#include "spinmech/space.hpp"
#include "spinmech/types.hpp"

namespace spinmech {

// Every physical input of the simulator. Frequencies and couplings are
// angular (rad/s); decay constants are plain rates (1/s). Defaults are the
// benchmark hardware parameter set used throughout the protocols.
struct ModelParams {
  double omega_m = 2 * pi * 50;          // mechanical angular frequency
  double g = 0;                          // spin–position coupling
  double delta = 0;                      // drive detuning Δ
  double rabi = 0;                       // transverse drive amplitude Ω

  double gamma_m = 2 * pi * 50 / 1e4;    // mechanical damping ω_m/Q, Q = 10⁴
  double n_th = 0;                       // mechanical bath occupation
  double gamma_1 = 1.0 / 2e-3;           // spin energy relaxation 1/T_1
  double gamma_2 = 1.0 / 1e-3;           // spin pure dephasing 1/T_2*
  double n_spin = 0;                     // spin bath occupation
  double gamma_gl = 1e5;                 // optical reset pumping rate
  double t_laser = 5e-5;                 // optical reset pulse duration, s

  // optional magnetic-gradient inputs (0 = absent); used to derive g and z0
  double gyro = 0;      // gyromagnetic ratio, rad/(s·T)
  double gradient = 0;  // field gradient G_z, T/m
  double mass = 0;      // oscillator mass, kg
};

// g = γ·G_z·z_zpf with z_zpf = √(ħ/(m·ω))
double coupling_from_gradient(double gyro, double gradient, double mass, double omega);

// Closed-form dressed-spin characterization used for protocol tuning.
// These are the standard leading-order expressions built on the full
// displacement g/ω; see FrameParams for the frame the simulator actually
// uses when exact equivalence with the lab Hamiltonian is required.
struct DerivedParams {
  double delta = 0;      // effective detuning δ = Δ − 2g²/ω
  double delta_bar = 0;  // dressed splitting Δ̄ = √(δ² + 4Ω²)
  double theta = 0;      // dressing angle, atan2(−2Ω, δ)
  double g_tilde = 0;    // beam-splitter coupling gΩ/Δ̄ = (g/2)|sin θ|
  double period = 0;     // mechanical period 2π/ω
  double z0 = 0;         // spin-dependent equilibrium shift, m (NaN without gradient inputs)
};

DerivedParams derive(const ModelParams& p, double omega_current, double rabi_current);
inline DerivedParams derive(const ModelParams& p) { return derive(p, p.omega_m, p.rabi); }

// Exact displaced-and-rotated frame. With T = frame_transform(space, p),
// T·H_lab·T† = dressed_hamiltonian(space, p) + energy_shift·I holds to
// truncation accuracy; the displacement is g/(2ω) and δ* = Δ − g²/ω.
struct FrameParams {
  double beta = 0;          // mechanical displacement g/(2ω)
  double delta = 0;         // δ* = Δ − g²/ω
  double delta_bar = 0;     // dressed splitting √(δ*² + 4Ω²)
  double theta = 0;         // dressing angle atan2(−2Ω, δ*)
  double g_eff = 0;         // beam-splitter coupling gΩ/Δ̄* = (g/2)|sin θ|
  double energy_shift = 0;  // scalar dropped from the frame Hamiltonian, Δ/2 − g²/(4ω)
};

FrameParams frame_params(const ModelParams& p, double omega_current, double rabi_current);
inline FrameParams frame_params(const ModelParams& p) {
  return frame_params(p, p.omega_m, p.rabi);
}

// H/ħ = ω_t·a†a + (Δ/2)(1−σ_z) − (g/2)(a+a†)(1−σ_z) + Ω·σ_x
Matrix lab_hamiltonian(const Space& sp, const ModelParams& p, double omega_t,
                       double drive_amplitude);
inline Matrix lab_hamiltonian(const Space& sp, const ModelParams& p) {
  return lab_hamiltonian(sp, p, p.omega_m, p.rabi);
}

// exp(−i(θ/2)σ_y), exact 2×2
Eigen::Matrix2cd spin_rotation(double theta);

// unitary T with T·H_lab·T† = dressed_hamiltonian + shift; the product of the
// inverse spin rotation and the inverse mechanical displacement of the frame
Matrix frame_transform(const Space& sp, const ModelParams& p);

// H̄/ħ = ω a†a − (Δ̄*/2)σ_z + (g/2)(a+a†)(cos θ*·σ_z − sin θ*·σ_x),
// expressed in the dressed spin basis (index 0 = dressed ground)
Matrix dressed_hamiltonian(const Space& sp, const ModelParams& p);

// rotating-wave form of the frame Hamiltonian:
// H_eff/ħ = ω a†a − (Δ̄*/2)σ_z + g̃*(a σ₊ + a† σ₋)
Matrix jc_hamiltonian(const Space& sp, const ModelParams& p);

}  // namespace spinmech
