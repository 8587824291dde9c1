// csv.hpp — deterministic text serialization of run outputs
#pragma once

#include <string>
#include <vector>

#include "spinmech/cooling.hpp"
#include "spinmech/observables.hpp"
#include "spinmech/otto.hpp"
#include "spinmech/thermo.hpp"

namespace spinmech {

enum class OutputFormat { csv, json };

OutputFormat parse_output_format(const std::string& name);
const char* output_format_name(OutputFormat f);
// "csv" or "json", used as the output-file extension
const char* output_format_extension(OutputFormat f);

// every number is rendered with %.17g so identical runs produce
// byte-identical files and values survive a text round trip exactly
std::string format_double(double v);

// columns: t_seconds, n_mean, re_a, im_a, sigma_z, z_over_zpf, n_fluct,
// trace, entropy
std::string format_trajectory(const std::vector<ObservableRecord>& samples,
                              OutputFormat f);

// columns: Delta_over_wm, g_over_wm, ratio (stationary n̄ over initial n̄);
// row-major over the detuning axis, omega_m converts rad/s to grid units
std::string format_cooling_map(const CoolingMapResult& map, double omega_m,
                               OutputFormat f);

// columns: Delta_over_wm, g_over_wm of the interpolated ratio = 1 crossings
std::string format_unit_contour(const CoolingMapResult& map, double omega_m,
                                OutputFormat f);

// columns: lambda, T3_over_T4, eta, eta_C, eta_CA
std::string format_otto_sweep(const std::vector<OttoSweepRow>& rows, OutputFormat f);

// columns: stroke, t_seconds, omega_rad_per_s, n_fluct, entropy_nats,
// T_over_hw1_kb
std::string format_ts_points(const std::vector<TSPoint>& points, OutputFormat f);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace spinmech
