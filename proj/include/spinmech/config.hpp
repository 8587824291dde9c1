// config.hpp — JSON run configuration: parsing, validation, defaults
#pragma once

#include <string>

#include "spinmech/battery.hpp"
#include "spinmech/cooling.hpp"
#include "spinmech/csv.hpp"
#include "spinmech/model.hpp"
#include "spinmech/otto.hpp"

namespace spinmech {

enum class ProtocolKind { none, battery, cool, cool_map, otto, otto_sweep };

const char* protocol_name(ProtocolKind k);

struct NumericsConfig {
  int fock_cutoff = 49;         // highest retained Fock level
  int dt_divisor = 40;          // integrator steps per fastest coherent period
  double truncation_tol = 1e-6; // cap on combined top-two Fock populations
};

struct OutputConfig {
  std::string path = ".";      // directory for data files and the run summary
  OutputFormat format = OutputFormat::csv;
  int sample_stride = 0;       // within-segment sampling stride (0 = protocol default)
};

struct OttoSweepSpec {
  double omega_m_t_min = 3.0 * pi;  // dimensionless stroke time ω_m·T range
  double omega_m_t_max = 10.0 * pi;
  int points = 5;
  double d_t_omega = 1e3;           // rad/s² ramp rate shared by all points
};

// a fully validated run description; every quantity in internal units
// (rad/s, s) with defaults applied
struct RunConfig {
  ModelParams model;
  NumericsConfig numerics;
  OutputConfig output;
  int workers = 1;
  ProtocolKind protocol = ProtocolKind::none;
  BatteryPlan battery;
  CoolingPlan cool;
  CoolingMapSpec map;
  OttoPlan otto;
  OttoSweepSpec sweep;
};

// parse + validate a JSON document; unknown keys anywhere are rejected, unit
// alternatives (x_hz vs x_over_omega_m, q_factor vs gamma_m_per_s, t1_s vs
// gamma_1_per_s, ...) conflict when both given; exactly one protocol block
// is required
RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::string& path);

// resolved-units echo of the configuration (JSON text), sufficient to
// reproduce the run exactly
std::string describe_config(const RunConfig& cfg);

}  // namespace spinmech
