// thermo.hpp — effective temperatures, entropies, and the four-stroke
// cycle energy ledger shared by the engine protocols
#pragma once

#include <vector>

#include "spinmech/observables.hpp"
#include "spinmech/types.hpp"

namespace spinmech {

// β·ħω = ln((n̄+1)/n̄); t_scaled = 1/(βħω) is the temperature in units of
// ħω/k_B at the supplied frequency, kelvin the absolute equivalent
struct EffectiveTemperature {
  double beta_h_omega = 0;
  double t_scaled = 0;
  double kelvin = 0;
};
EffectiveTemperature effective_temperature(double n_bar, double omega);

// inverse map: occupation with ln((n̄+1)/n̄) = beta_h_omega
double occupation_from_beta(double beta_h_omega);

// entropy of a thermal oscillator state, (n̄+1)ln(n̄+1) − n̄·ln n̄, in nats
double thermal_entropy(double n_bar);

// one sampled point of the temperature–entropy diagram; temperature_ref is
// in units of ħω_ref/k_B (reference = the engine's hot-side frequency), so
// points taken at different instantaneous frequencies are comparable
struct TSPoint {
  int stroke = 0;          // 1: expansion, 2: cold contact, 3: compression, 4: hot contact
  double t_seconds = 0;
  double omega = 0;        // instantaneous mechanical frequency, rad/s
  double n_fluct = 0;      // n̄ = ⟨a†a⟩ − |⟨a⟩|²
  double entropy_nats = 0; // mechanical reduced-state entropy
  double temperature_ref = 0;
};

// Energy bookkeeping of one steady-state engine cycle. Energies are
// mechanical only, E_k = ħω_k⟨a†a⟩_k with the zero-point term dropped.
// Signs in engine operation: W_e < 0 (work extracted in expansion),
// Q_c < 0 (heat dumped to the engineered cold bath), W_c > 0, Q_h > 0.
struct CycleLedger {
  double omega_hot = 0;  // ω_1, rad/s
  double omega_cold = 0; // ω_2 = ω_1(1−λ), rad/s
  double lambda = 0;

  double e1 = 0, e2 = 0, e3 = 0, e4 = 0, e1_return = 0;  // J
  double w_e = 0, q_c = 0, w_c = 0, q_h = 0;             // J
  double n1 = 0, n2 = 0, n3 = 0, n4 = 0;                 // fluctuation occupations
  double t1 = 0, t2 = 0, t3 = 0, t4 = 0;                 // units ħω_hot/k_B
  double s1 = 0, s2 = 0, s3 = 0, s4 = 0;                 // nats
  double t3_over_t4 = 0;

  double eta = 0, eta_c = 0, eta_ca = 0;
  bool engine = false;    // Q_h > 0 with net work extracted
  double closure = 0;     // E_1' − E_1 of the reported cycle, J
  int cycles_run = 0;
  std::vector<TSPoint> stroke_points;  // ordered samples, vertices included
  HealthStats health;                  // of the reported (last) cycle
};

struct EfficiencyResult {
  double eta = 0;     // 1 + Q_c/Q_h
  double eta_c = 0;   // λ
  double eta_ca = 0;  // 1 − √(T_3/T_4)
  bool engine = false;
};
EfficiencyResult efficiency(const CycleLedger& ledger);

// the ordered (S, T) samples of the cycle diagram
const std::vector<TSPoint>& ts_points(const CycleLedger& ledger);

}  // namespace spinmech
