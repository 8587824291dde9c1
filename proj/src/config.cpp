#include "spinmech/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

namespace spinmech {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw config_error(msg); }

void require_object(const json& j, const std::string& ctx) {
  if (!j.is_object()) fail(ctx + " must be a JSON object");
}

// fail-closed key filter: anything not explicitly allowed is an error
void check_keys(const json& obj, const std::string& ctx,
                std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) {
      if (item.key() == a) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      std::string list;
      for (const char* a : allowed) {
        if (!list.empty()) list += ", ";
        list += a;
      }
      fail("unknown key '" + item.key() + "' in " + ctx + " (allowed: " + list + ")");
    }
  }
}

double get_number(const json& obj, const std::string& ctx, const char* key) {
  const json& v = obj.at(key);
  if (!v.is_number()) fail(ctx + "." + key + " must be a number");
  return v.get<double>();
}

int get_int(const json& obj, const std::string& ctx, const char* key) {
  const json& v = obj.at(key);
  if (!v.is_number_integer()) fail(ctx + "." + key + " must be an integer");
  return v.get<int>();
}

std::string get_string(const json& obj, const std::string& ctx, const char* key) {
  const json& v = obj.at(key);
  if (!v.is_string()) fail(ctx + "." + key + " must be a string");
  return v.get<std::string>();
}

bool has(const json& obj, const char* key) { return obj.contains(key); }

// picks between an absolute-frequency key (Hz, converted to rad/s) and a
// ratio-to-ω_m key; both present is a conflict, neither keeps fallback
double hz_or_ratio(const json& obj, const std::string& ctx, const char* hz_key,
                   const char* ratio_key, double omega_m, double fallback) {
  const bool a = has(obj, hz_key), b = has(obj, ratio_key);
  if (a && b) fail(ctx + ": give either " + hz_key + " or " + ratio_key + ", not both");
  if (a) return 2.0 * pi * get_number(obj, ctx, hz_key);
  if (b) return get_number(obj, ctx, ratio_key) * omega_m;
  return fallback;
}

ResetMode get_reset_mode(const json& obj, const std::string& ctx) {
  const std::string v = get_string(obj, ctx, "reset_mode");
  if (v == "instant_channel") return ResetMode::instant_channel;
  if (v == "rate_integration") return ResetMode::rate_integration;
  fail(ctx + ".reset_mode must be 'instant_channel' or 'rate_integration'");
}

void parse_model(const json& obj, ModelParams& p) {
  const std::string ctx = "model";
  require_object(obj, ctx);
  check_keys(obj, ctx,
             {"omega_m_hz", "q_factor", "gamma_m_per_s", "n_th", "g_hz",
              "g_over_omega_m", "delta_hz", "delta_over_omega_m", "rabi_hz",
              "rabi_over_omega_m", "t1_s", "gamma_1_per_s", "t2_s", "gamma_2_per_s",
              "n_spin", "gamma_gl_per_s", "t_laser_s", "gyro_rad_per_s_per_t",
              "gradient_t_per_m", "mass_kg"});

  if (has(obj, "omega_m_hz")) p.omega_m = 2.0 * pi * get_number(obj, ctx, "omega_m_hz");
  if (!(p.omega_m > 0)) fail("model.omega_m_hz must be positive");

  if (has(obj, "q_factor") && has(obj, "gamma_m_per_s")) {
    fail("model: give either q_factor or gamma_m_per_s, not both");
  }
  if (has(obj, "q_factor")) {
    const double q = get_number(obj, ctx, "q_factor");
    if (!(q > 0)) fail("model.q_factor must be positive");
    p.gamma_m = p.omega_m / q;
  } else if (has(obj, "gamma_m_per_s")) {
    p.gamma_m = get_number(obj, ctx, "gamma_m_per_s");
  } else {
    // keep the default quality factor tied to a possibly overridden ω_m
    p.gamma_m = p.omega_m / 1e4;
  }

  if (has(obj, "n_th")) p.n_th = get_number(obj, ctx, "n_th");

  const bool g_direct = has(obj, "g_hz") || has(obj, "g_over_omega_m");
  const bool grad_any = has(obj, "gyro_rad_per_s_per_t") ||
                        has(obj, "gradient_t_per_m") || has(obj, "mass_kg");
  if (g_direct && grad_any) {
    fail("model: give the coupling either directly (g_hz / g_over_omega_m) or "
         "through gyro/gradient/mass, not both");
  }
  if (grad_any) {
    if (!(has(obj, "gyro_rad_per_s_per_t") && has(obj, "gradient_t_per_m") &&
          has(obj, "mass_kg"))) {
      fail("model: gradient coupling needs all of gyro_rad_per_s_per_t, "
           "gradient_t_per_m, mass_kg");
    }
    p.gyro = get_number(obj, ctx, "gyro_rad_per_s_per_t");
    p.gradient = get_number(obj, ctx, "gradient_t_per_m");
    p.mass = get_number(obj, ctx, "mass_kg");
    p.g = coupling_from_gradient(p.gyro, p.gradient, p.mass, p.omega_m);
  } else {
    p.g = hz_or_ratio(obj, ctx, "g_hz", "g_over_omega_m", p.omega_m, p.g);
  }

  p.delta = hz_or_ratio(obj, ctx, "delta_hz", "delta_over_omega_m", p.omega_m, p.delta);
  p.rabi = hz_or_ratio(obj, ctx, "rabi_hz", "rabi_over_omega_m", p.omega_m, p.rabi);

  if (has(obj, "t1_s") && has(obj, "gamma_1_per_s")) {
    fail("model: give either t1_s or gamma_1_per_s, not both");
  }
  if (has(obj, "t1_s")) {
    const double t1 = get_number(obj, ctx, "t1_s");
    if (!(t1 > 0)) fail("model.t1_s must be positive");
    p.gamma_1 = 1.0 / t1;
  } else if (has(obj, "gamma_1_per_s")) {
    p.gamma_1 = get_number(obj, ctx, "gamma_1_per_s");
  }

  if (has(obj, "t2_s") && has(obj, "gamma_2_per_s")) {
    fail("model: give either t2_s or gamma_2_per_s, not both");
  }
  if (has(obj, "t2_s")) {
    const double t2 = get_number(obj, ctx, "t2_s");
    if (!(t2 > 0)) fail("model.t2_s must be positive");
    p.gamma_2 = 1.0 / t2;
  } else if (has(obj, "gamma_2_per_s")) {
    p.gamma_2 = get_number(obj, ctx, "gamma_2_per_s");
  }

  if (has(obj, "n_spin")) p.n_spin = get_number(obj, ctx, "n_spin");
  if (has(obj, "gamma_gl_per_s")) p.gamma_gl = get_number(obj, ctx, "gamma_gl_per_s");
  if (has(obj, "t_laser_s")) p.t_laser = get_number(obj, ctx, "t_laser_s");

  if (p.gamma_m < 0 || p.gamma_1 < 0 || p.gamma_2 < 0 || p.gamma_gl < 0) {
    fail("model: decay rates must be non-negative");
  }
  if (p.n_th < 0 || p.n_spin < 0) fail("model: occupations must be non-negative");
  if (p.t_laser < 0) fail("model.t_laser_s must be non-negative");
}

void parse_numerics(const json& obj, NumericsConfig& n) {
  const std::string ctx = "numerics";
  require_object(obj, ctx);
  check_keys(obj, ctx, {"fock_cutoff", "dt_divisor", "truncation_tol"});
  if (has(obj, "fock_cutoff")) n.fock_cutoff = get_int(obj, ctx, "fock_cutoff");
  if (has(obj, "dt_divisor")) n.dt_divisor = get_int(obj, ctx, "dt_divisor");
  if (has(obj, "truncation_tol")) n.truncation_tol = get_number(obj, ctx, "truncation_tol");
  if (n.fock_cutoff < 1) fail("numerics.fock_cutoff must be at least 1");
  if (n.dt_divisor < 1) fail("numerics.dt_divisor must be at least 1");
  if (!(n.truncation_tol > 0)) fail("numerics.truncation_tol must be positive");
}

void parse_output(const json& obj, OutputConfig& o) {
  const std::string ctx = "output";
  require_object(obj, ctx);
  check_keys(obj, ctx, {"path", "format", "sample_stride"});
  if (has(obj, "path")) o.path = get_string(obj, ctx, "path");
  if (has(obj, "format")) o.format = parse_output_format(get_string(obj, ctx, "format"));
  if (has(obj, "sample_stride")) o.sample_stride = get_int(obj, ctx, "sample_stride");
  if (o.sample_stride < 0) fail("output.sample_stride must be non-negative");
}

void parse_battery(const json& obj, const ModelParams& p, BatteryPlan& b) {
  const std::string ctx = "protocol.battery";
  require_object(obj, ctx);
  check_keys(obj, ctx,
             {"n_charge_kicks", "n_discharge_kicks", "tau1_s", "tau1_over_period", "k",
              "discharge_delay_s", "discharge_delay_over_period", "storage_periods",
              "reset_mode", "n_bar_0", "sample_every"});
  const double period = 2.0 * pi / p.omega_m;
  if (has(obj, "n_charge_kicks")) b.n_charge_kicks = get_int(obj, ctx, "n_charge_kicks");
  if (has(obj, "n_discharge_kicks")) {
    b.n_discharge_kicks = get_int(obj, ctx, "n_discharge_kicks");
  }
  if (has(obj, "tau1_s") && has(obj, "tau1_over_period")) {
    fail(ctx + ": give either tau1_s or tau1_over_period, not both");
  }
  if (has(obj, "tau1_s")) {
    b.tau1 = get_number(obj, ctx, "tau1_s");
  } else if (has(obj, "tau1_over_period")) {
    b.tau1 = get_number(obj, ctx, "tau1_over_period") * period;
  } else {
    b.tau1 = period / 128.0;  // short-kick default
  }
  if (has(obj, "k")) b.k = get_int(obj, ctx, "k");
  if (has(obj, "discharge_delay_s") && has(obj, "discharge_delay_over_period")) {
    fail(ctx + ": give either discharge_delay_s or discharge_delay_over_period, not both");
  }
  if (has(obj, "discharge_delay_s")) {
    b.discharge_delay = get_number(obj, ctx, "discharge_delay_s");
  } else if (has(obj, "discharge_delay_over_period")) {
    b.discharge_delay = get_number(obj, ctx, "discharge_delay_over_period") * period;
  }
  if (has(obj, "storage_periods")) b.storage_periods = get_int(obj, ctx, "storage_periods");
  if (has(obj, "reset_mode")) b.reset_mode = get_reset_mode(obj, ctx);
  if (has(obj, "n_bar_0")) b.n_bar_0 = get_number(obj, ctx, "n_bar_0");
  if (has(obj, "sample_every")) b.sample_every = get_int(obj, ctx, "sample_every");
}

void parse_cool(const json& obj, const ModelParams& p, CoolingPlan& c) {
  const std::string ctx = "protocol.cool";
  require_object(obj, ctx);
  check_keys(obj, ctx,
             {"n_cycles", "t_interact_s", "t_interact_over_period", "delta_hz",
              "delta_over_omega_m", "g_hz", "g_over_omega_m", "rabi_hz",
              "rabi_over_omega_m", "n_bar_0", "reset_mode", "sample_every"});
  if (has(obj, "n_cycles")) c.n_cycles = get_int(obj, ctx, "n_cycles");
  if (has(obj, "t_interact_s") && has(obj, "t_interact_over_period")) {
    fail(ctx + ": give either t_interact_s or t_interact_over_period, not both");
  }
  if (has(obj, "t_interact_s")) {
    c.t_interact = get_number(obj, ctx, "t_interact_s");
  } else if (has(obj, "t_interact_over_period")) {
    c.t_interact = get_number(obj, ctx, "t_interact_over_period") * 2.0 * pi / p.omega_m;
  }
  c.delta = hz_or_ratio(obj, ctx, "delta_hz", "delta_over_omega_m", p.omega_m, c.delta);
  c.g = hz_or_ratio(obj, ctx, "g_hz", "g_over_omega_m", p.omega_m, c.g);
  c.rabi = hz_or_ratio(obj, ctx, "rabi_hz", "rabi_over_omega_m", p.omega_m, c.rabi);
  if (has(obj, "n_bar_0")) c.n_bar_0 = get_number(obj, ctx, "n_bar_0");
  if (has(obj, "reset_mode")) c.reset_mode = get_reset_mode(obj, ctx);
  if (has(obj, "sample_every")) c.sample_every = get_int(obj, ctx, "sample_every");
}

void parse_cool_map(const json& obj, const ModelParams& p, CoolingMapSpec& m) {
  const std::string ctx = "protocol.cool_map";
  require_object(obj, ctx);
  check_keys(obj, ctx,
             {"delta_max_over_omega_m", "g_max_over_omega_m", "resolution", "n_cycles",
              "n_bar_0", "rabi_hz", "rabi_over_omega_m"});
  const double dmax =
      has(obj, "delta_max_over_omega_m") ? get_number(obj, ctx, "delta_max_over_omega_m") : 4.0;
  const double gmax =
      has(obj, "g_max_over_omega_m") ? get_number(obj, ctx, "g_max_over_omega_m") : 1.0;
  m.delta_max = dmax * p.omega_m;
  m.g_max = gmax * p.omega_m;
  if (has(obj, "resolution")) m.resolution = get_int(obj, ctx, "resolution");
  if (has(obj, "n_cycles")) m.n_cycles = get_int(obj, ctx, "n_cycles");
  if (has(obj, "n_bar_0")) m.n_bar_0 = get_number(obj, ctx, "n_bar_0");
  m.rabi = hz_or_ratio(obj, ctx, "rabi_hz", "rabi_over_omega_m", p.omega_m, m.rabi);
}

void parse_otto_common(const json& obj, const std::string& ctx, OttoPlan& o) {
  if (has(obj, "n_cool")) o.n_cool = get_int(obj, ctx, "n_cool");
  if (has(obj, "n_bar_1")) o.n_bar_init = get_number(obj, ctx, "n_bar_1");
  if (has(obj, "cool_g_over_omega_m")) {
    o.cool_g_over_omega1 = get_number(obj, ctx, "cool_g_over_omega_m");
  }
  if (has(obj, "cool_delta_over_omega2")) {
    o.cool_delta_over_omega2 = get_number(obj, ctx, "cool_delta_over_omega2");
  }
  if (has(obj, "cool_rabi_over_omega2")) {
    o.cool_rabi_over_omega2 = get_number(obj, ctx, "cool_rabi_over_omega2");
  }
  if (has(obj, "cool_t_interact_periods2")) {
    o.cool_t_interact_periods2 = get_number(obj, ctx, "cool_t_interact_periods2");
  }
  if (has(obj, "max_cycles")) o.max_cycles = get_int(obj, ctx, "max_cycles");
  if (has(obj, "ts_samples_per_stroke")) {
    o.ts_samples_per_stroke = get_int(obj, ctx, "ts_samples_per_stroke");
  }
}

void parse_otto(const json& obj, const ModelParams& p, OttoPlan& o) {
  const std::string ctx = "protocol.otto";
  require_object(obj, ctx);
  check_keys(obj, ctx,
             {"t_stroke_s", "omega_m_t", "d_t_omega_rad_s2", "lambda", "n_cool",
              "n_bar_1", "cool_g_over_omega_m", "cool_delta_over_omega2",
              "cool_rabi_over_omega2", "cool_t_interact_periods2", "max_cycles",
              "ts_samples_per_stroke"});
  if (has(obj, "t_stroke_s") && has(obj, "omega_m_t")) {
    fail(ctx + ": give either t_stroke_s or omega_m_t, not both");
  }
  if (has(obj, "t_stroke_s")) {
    o.t_stroke = get_number(obj, ctx, "t_stroke_s");
  } else if (has(obj, "omega_m_t")) {
    o.t_stroke = get_number(obj, ctx, "omega_m_t") / p.omega_m;
  } else {
    fail(ctx + ": a stroke time is required (t_stroke_s or omega_m_t)");
  }
  if (has(obj, "d_t_omega_rad_s2") && has(obj, "lambda")) {
    fail(ctx + ": give either d_t_omega_rad_s2 or lambda, not both");
  }
  if (has(obj, "d_t_omega_rad_s2")) o.d_t_omega = get_number(obj, ctx, "d_t_omega_rad_s2");
  if (has(obj, "lambda")) o.lambda = get_number(obj, ctx, "lambda");
  if (o.d_t_omega < 0 && o.lambda < 0) {
    fail(ctx + ": a frequency drop is required (d_t_omega_rad_s2 or lambda)");
  }
  parse_otto_common(obj, ctx, o);
}

void parse_otto_sweep(const json& obj, OttoSweepSpec& s, OttoPlan& base) {
  const std::string ctx = "protocol.otto_sweep";
  require_object(obj, ctx);
  check_keys(obj, ctx,
             {"omega_m_t_min", "omega_m_t_max", "points", "d_t_omega_rad_s2", "n_cool",
              "n_bar_1", "cool_g_over_omega_m", "cool_delta_over_omega2",
              "cool_rabi_over_omega2", "cool_t_interact_periods2", "max_cycles",
              "ts_samples_per_stroke"});
  if (has(obj, "omega_m_t_min")) s.omega_m_t_min = get_number(obj, ctx, "omega_m_t_min");
  if (has(obj, "omega_m_t_max")) s.omega_m_t_max = get_number(obj, ctx, "omega_m_t_max");
  if (has(obj, "points")) s.points = get_int(obj, ctx, "points");
  if (has(obj, "d_t_omega_rad_s2")) s.d_t_omega = get_number(obj, ctx, "d_t_omega_rad_s2");
  if (!(s.omega_m_t_min > 0) || !(s.omega_m_t_max >= s.omega_m_t_min)) {
    fail(ctx + ": need 0 < omega_m_t_min <= omega_m_t_max");
  }
  if (s.points < 1) fail(ctx + ".points must be at least 1");
  if (!(s.d_t_omega > 0)) fail(ctx + ".d_t_omega_rad_s2 must be positive");
  parse_otto_common(obj, ctx, base);
}

}  // namespace

const char* protocol_name(ProtocolKind k) {
  switch (k) {
    case ProtocolKind::battery: return "battery";
    case ProtocolKind::cool: return "cool";
    case ProtocolKind::cool_map: return "cool_map";
    case ProtocolKind::otto: return "otto";
    case ProtocolKind::otto_sweep: return "otto_sweep";
    default: return "none";
  }
}

RunConfig parse_config_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("config is not valid JSON: ") + e.what());
  }
  require_object(root, "config");
  check_keys(root, "config", {"model", "numerics", "protocol", "output", "workers"});

  RunConfig cfg;
  if (has(root, "model")) parse_model(root.at("model"), cfg.model);
  if (has(root, "numerics")) parse_numerics(root.at("numerics"), cfg.numerics);
  if (has(root, "output")) parse_output(root.at("output"), cfg.output);

  if (has(root, "workers")) {
    const json& w = root.at("workers");
    if (!w.is_number_integer()) fail("workers must be an integer");
    cfg.workers = w.get<int>();
    if (cfg.workers < 1) fail("workers must be at least 1");
  } else {
    cfg.workers = std::max(1u, std::thread::hardware_concurrency());
  }

  if (!has(root, "protocol")) fail("config needs a protocol block");
  const json& proto = root.at("protocol");
  require_object(proto, "protocol");
  check_keys(proto, "protocol", {"battery", "cool", "cool_map", "otto", "otto_sweep"});
  if (proto.size() != 1) {
    fail("protocol must contain exactly one of: battery, cool, cool_map, otto, "
         "otto_sweep");
  }

  // protocol plans inherit the shared numerics knobs before overrides
  cfg.battery.truncation_tol = cfg.numerics.truncation_tol;
  cfg.battery.dt_divisor = cfg.numerics.dt_divisor;
  cfg.cool.truncation_tol = cfg.numerics.truncation_tol;
  cfg.cool.dt_divisor = cfg.numerics.dt_divisor;
  cfg.map.truncation_tol = cfg.numerics.truncation_tol;
  cfg.map.dt_divisor = cfg.numerics.dt_divisor;
  cfg.otto.truncation_tol = cfg.numerics.truncation_tol;
  cfg.otto.dt_divisor = cfg.numerics.dt_divisor;

  if (has(proto, "battery")) {
    cfg.protocol = ProtocolKind::battery;
    parse_battery(proto.at("battery"), cfg.model, cfg.battery);
  } else if (has(proto, "cool")) {
    cfg.protocol = ProtocolKind::cool;
    parse_cool(proto.at("cool"), cfg.model, cfg.cool);
  } else if (has(proto, "cool_map")) {
    cfg.protocol = ProtocolKind::cool_map;
    parse_cool_map(proto.at("cool_map"), cfg.model, cfg.map);
    cfg.map.workers = cfg.workers;
  } else if (has(proto, "otto")) {
    cfg.protocol = ProtocolKind::otto;
    parse_otto(proto.at("otto"), cfg.model, cfg.otto);
  } else {
    cfg.protocol = ProtocolKind::otto_sweep;
    parse_otto_sweep(proto.at("otto_sweep"), cfg.sweep, cfg.otto);
  }

  if (cfg.output.sample_stride > 0) {
    cfg.battery.sample_every = cfg.output.sample_stride;
    cfg.cool.sample_every = cfg.output.sample_stride;
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str());
}

std::string describe_config(const RunConfig& cfg) {
  json j;
  j["model"] = {{"omega_m_rad_per_s", cfg.model.omega_m},
                {"g_rad_per_s", cfg.model.g},
                {"delta_rad_per_s", cfg.model.delta},
                {"rabi_rad_per_s", cfg.model.rabi},
                {"gamma_m_per_s", cfg.model.gamma_m},
                {"n_th", cfg.model.n_th},
                {"gamma_1_per_s", cfg.model.gamma_1},
                {"gamma_2_per_s", cfg.model.gamma_2},
                {"n_spin", cfg.model.n_spin},
                {"gamma_gl_per_s", cfg.model.gamma_gl},
                {"t_laser_s", cfg.model.t_laser}};
  j["numerics"] = {{"fock_cutoff", cfg.numerics.fock_cutoff},
                   {"dt_divisor", cfg.numerics.dt_divisor},
                   {"truncation_tol", cfg.numerics.truncation_tol}};
  j["output"] = {{"path", cfg.output.path},
                 {"format", output_format_name(cfg.output.format)},
                 {"sample_stride", cfg.output.sample_stride}};
  j["workers"] = cfg.workers;
  j["protocol"] = protocol_name(cfg.protocol);

  const char* reset_names[] = {"instant_channel", "rate_integration"};
  switch (cfg.protocol) {
    case ProtocolKind::battery:
      j["battery"] = {{"n_charge_kicks", cfg.battery.n_charge_kicks},
                      {"n_discharge_kicks", cfg.battery.n_discharge_kicks},
                      {"tau1_s", cfg.battery.tau1},
                      {"k", cfg.battery.k},
                      {"discharge_delay_s", cfg.battery.discharge_delay},
                      {"storage_periods", cfg.battery.storage_periods},
                      {"reset_mode", reset_names[int(cfg.battery.reset_mode)]},
                      {"n_bar_0", cfg.battery.n_bar_0},
                      {"sample_every", cfg.battery.sample_every}};
      break;
    case ProtocolKind::cool:
      j["cool"] = {{"n_cycles", cfg.cool.n_cycles},
                   {"t_interact_s", cfg.cool.t_interact},
                   {"delta_rad_per_s", cfg.cool.delta},
                   {"g_rad_per_s", cfg.cool.g},
                   {"rabi_rad_per_s", cfg.cool.rabi},
                   {"n_bar_0", cfg.cool.n_bar_0},
                   {"reset_mode", reset_names[int(cfg.cool.reset_mode)]},
                   {"sample_every", cfg.cool.sample_every}};
      break;
    case ProtocolKind::cool_map:
      j["cool_map"] = {{"delta_max_rad_per_s", cfg.map.delta_max},
                       {"g_max_rad_per_s", cfg.map.g_max},
                       {"resolution", cfg.map.resolution},
                       {"n_cycles", cfg.map.n_cycles},
                       {"n_bar_0", cfg.map.n_bar_0},
                       {"rabi_rad_per_s", cfg.map.rabi}};
      break;
    case ProtocolKind::otto:
      j["otto"] = {{"t_stroke_s", cfg.otto.t_stroke},
                   {"d_t_omega_rad_s2", cfg.otto.d_t_omega},
                   {"lambda", cfg.otto.lambda},
                   {"n_cool", cfg.otto.n_cool},
                   {"n_bar_1", cfg.otto.n_bar_init},
                   {"cool_g_over_omega_m", cfg.otto.cool_g_over_omega1},
                   {"cool_delta_over_omega2", cfg.otto.cool_delta_over_omega2},
                   {"cool_rabi_over_omega2", cfg.otto.cool_rabi_over_omega2},
                   {"cool_t_interact_periods2", cfg.otto.cool_t_interact_periods2},
                   {"max_cycles", cfg.otto.max_cycles},
                   {"ts_samples_per_stroke", cfg.otto.ts_samples_per_stroke}};
      break;
    case ProtocolKind::otto_sweep:
      j["otto_sweep"] = {{"omega_m_t_min", cfg.sweep.omega_m_t_min},
                         {"omega_m_t_max", cfg.sweep.omega_m_t_max},
                         {"points", cfg.sweep.points},
                         {"d_t_omega_rad_s2", cfg.sweep.d_t_omega},
                         {"n_cool", cfg.otto.n_cool},
                         {"n_bar_1", cfg.otto.n_bar_init},
                         {"max_cycles", cfg.otto.max_cycles}};
      break;
    default:
      break;
  }
  return j.dump(2);
}

}  // namespace spinmech
