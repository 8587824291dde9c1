#include "spinmech/csv.hpp"

#include <cstdio>
#include <fstream>

#include "json.hpp"

namespace spinmech {

namespace {

using nlohmann::json;

void append_row(std::string& out, const std::vector<double>& vals) {
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i) out += ',';
    out += format_double(vals[i]);
  }
  out += '\n';
}

json trajectory_json(const std::vector<ObservableRecord>& samples) {
  json arr = json::array();
  for (const auto& r : samples) {
    arr.push_back({{"t_seconds", r.t},
                   {"n_mean", r.n_mean},
                   {"re_a", r.a_mean.real()},
                   {"im_a", r.a_mean.imag()},
                   {"sigma_z", r.sigma_z},
                   {"z_over_zpf", r.z_over_zpf},
                   {"n_fluct", r.n_fluct},
                   {"trace", r.trace},
                   {"entropy", r.entropy}});
  }
  return arr;
}

}  // namespace

OutputFormat parse_output_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw config_error("unknown output format '" + name + "' (expected csv or json)");
}

const char* output_format_name(OutputFormat f) {
  return f == OutputFormat::csv ? "csv" : "json";
}

const char* output_format_extension(OutputFormat f) {
  return output_format_name(f);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_trajectory(const std::vector<ObservableRecord>& samples,
                              OutputFormat f) {
  if (f == OutputFormat::json) return trajectory_json(samples).dump(2) + "\n";
  std::string out = "t_seconds,n_mean,re_a,im_a,sigma_z,z_over_zpf,n_fluct,trace,entropy\n";
  for (const auto& r : samples) {
    append_row(out, {r.t, r.n_mean, r.a_mean.real(), r.a_mean.imag(), r.sigma_z,
                     r.z_over_zpf, r.n_fluct, r.trace, r.entropy});
  }
  return out;
}

std::string format_cooling_map(const CoolingMapResult& map, double omega_m,
                               OutputFormat f) {
  if (f == OutputFormat::json) {
    json arr = json::array();
    for (int i = 0; i < map.resolution; ++i) {
      for (int j = 0; j < map.resolution; ++j) {
        const double r = map.ratio[std::size_t(i) * map.resolution + j];
        arr.push_back({{"Delta_over_wm", map.deltas[std::size_t(i)] / omega_m},
                       {"g_over_wm", map.gs[std::size_t(j)] / omega_m},
                       {"ratio", r}});
      }
    }
    return arr.dump(2) + "\n";
  }
  std::string out = "Delta_over_wm,g_over_wm,ratio\n";
  for (int i = 0; i < map.resolution; ++i) {
    for (int j = 0; j < map.resolution; ++j) {
      append_row(out, {map.deltas[std::size_t(i)] / omega_m,
                       map.gs[std::size_t(j)] / omega_m,
                       map.ratio[std::size_t(i) * map.resolution + j]});
    }
  }
  return out;
}

std::string format_unit_contour(const CoolingMapResult& map, double omega_m,
                                OutputFormat f) {
  if (f == OutputFormat::json) {
    json arr = json::array();
    for (const auto& pt : map.unit_contour) {
      arr.push_back(
          {{"Delta_over_wm", pt.first / omega_m}, {"g_over_wm", pt.second / omega_m}});
    }
    return arr.dump(2) + "\n";
  }
  std::string out = "Delta_over_wm,g_over_wm\n";
  for (const auto& pt : map.unit_contour) {
    append_row(out, {pt.first / omega_m, pt.second / omega_m});
  }
  return out;
}

std::string format_otto_sweep(const std::vector<OttoSweepRow>& rows, OutputFormat f) {
  if (f == OutputFormat::json) {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"lambda", r.lambda},
                     {"T3_over_T4", r.t3_over_t4},
                     {"eta", r.eta},
                     {"eta_C", r.eta_c},
                     {"eta_CA", r.eta_ca},
                     {"omega_m_T", r.omega_m_t},
                     {"engine", r.engine},
                     {"closure_over_qh", r.closure_over_qh},
                     {"cycles_run", r.cycles_run}});
    }
    return arr.dump(2) + "\n";
  }
  std::string out = "lambda,T3_over_T4,eta,eta_C,eta_CA\n";
  for (const auto& r : rows) {
    append_row(out, {r.lambda, r.t3_over_t4, r.eta, r.eta_c, r.eta_ca});
  }
  return out;
}

std::string format_ts_points(const std::vector<TSPoint>& points, OutputFormat f) {
  if (f == OutputFormat::json) {
    json arr = json::array();
    for (const auto& q : points) {
      arr.push_back({{"stroke", q.stroke},
                     {"t_seconds", q.t_seconds},
                     {"omega_rad_per_s", q.omega},
                     {"n_fluct", q.n_fluct},
                     {"entropy_nats", q.entropy_nats},
                     {"T_over_hw1_kb", q.temperature_ref}});
    }
    return arr.dump(2) + "\n";
  }
  std::string out = "stroke,t_seconds,omega_rad_per_s,n_fluct,entropy_nats,T_over_hw1_kb\n";
  for (const auto& q : points) {
    out += std::to_string(q.stroke);
    out += ',';
    out += format_double(q.t_seconds);
    out += ',';
    out += format_double(q.omega);
    out += ',';
    out += format_double(q.n_fluct);
    out += ',';
    out += format_double(q.entropy_nats);
    out += ',';
    out += format_double(q.temperature_ref);
    out += '\n';
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw config_error("cannot open output file '" + path + "'");
  f << content;
  if (!f) throw config_error("failed writing output file '" + path + "'");
}

}  // namespace spinmech
