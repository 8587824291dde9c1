#include "spinmech/thermo.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace spinmech {

EffectiveTemperature effective_temperature(double n_bar, double omega) {
  if (n_bar < 0) throw config_error("effective_temperature: occupation must be >= 0");
  EffectiveTemperature out;
  if (n_bar == 0) {
    out.beta_h_omega = std::numeric_limits<double>::infinity();
    out.t_scaled = 0;
    out.kelvin = 0;
    return out;
  }
  out.beta_h_omega = std::log1p(1.0 / n_bar);
  out.t_scaled = 1.0 / out.beta_h_omega;
  out.kelvin = hbar_si * omega / (kb_si * out.beta_h_omega);
  return out;
}

double occupation_from_beta(double beta_h_omega) {
  if (!(beta_h_omega > 0)) {
    throw config_error("occupation_from_beta: beta must be positive");
  }
  return 1.0 / std::expm1(beta_h_omega);
}

double thermal_entropy(double n_bar) {
  if (n_bar < 0) throw config_error("thermal_entropy: occupation must be >= 0");
  if (n_bar == 0) return 0;
  return (n_bar + 1) * std::log(n_bar + 1) - n_bar * std::log(n_bar);
}

EfficiencyResult efficiency(const CycleLedger& ledger) {
  EfficiencyResult out;
  out.eta_c = ledger.lambda;
  out.eta_ca = ledger.t3_over_t4 > 0 ? 1.0 - std::sqrt(ledger.t3_over_t4)
                                     : std::numeric_limits<double>::quiet_NaN();
  if (ledger.q_h > 0) {
    out.eta = 1.0 + ledger.q_c / ledger.q_h;
    out.engine = (ledger.w_e + ledger.w_c) < 0;
  } else {
    out.eta = std::numeric_limits<double>::quiet_NaN();
    out.engine = false;
  }
  return out;
}

const std::vector<TSPoint>& ts_points(const CycleLedger& ledger) {
  return ledger.stroke_points;
}

}  // namespace spinmech
