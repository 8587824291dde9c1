// Run-configuration parsing: defaults, unit alternatives, conversions, and
// fail-closed validation of unknown keys and conflicting inputs.
#include <doctest.h>

#include <string>

#include <json.hpp>

#include "oracles.hpp"
#include "spinmech/config.hpp"
#include "spinmech/types.hpp"

using namespace spinmech;

namespace {
// smallest valid document: one protocol block, everything else defaulted
const char* kMinimal = R"({"protocol": {"cool": {}}})";
}  // namespace

TEST_CASE("defaults are applied when blocks are omitted") {
  const RunConfig cfg = parse_config_text(kMinimal);
  CHECK(cfg.protocol == ProtocolKind::cool);
  CHECK(cfg.model.omega_m == doctest::Approx(2.0 * pi * 50.0).epsilon(1e-14));
  CHECK(cfg.model.gamma_m == doctest::Approx(cfg.model.omega_m / 1e4).epsilon(1e-12));
  CHECK(cfg.model.gamma_1 == doctest::Approx(1.0 / 2e-3).epsilon(1e-14));
  CHECK(cfg.model.gamma_2 == doctest::Approx(1.0 / 1e-3).epsilon(1e-14));
  CHECK(cfg.model.gamma_gl == doctest::Approx(1e5).epsilon(1e-14));
  CHECK(cfg.model.t_laser == doctest::Approx(5e-5).epsilon(1e-14));
  CHECK(cfg.numerics.fock_cutoff == 49);
  CHECK(cfg.numerics.dt_divisor == 40);
  CHECK(cfg.numerics.truncation_tol == 1e-6);
  CHECK(cfg.workers >= 1);
  CHECK(cfg.output.format == OutputFormat::csv);
}

TEST_CASE("unknown keys are rejected everywhere") {
  CHECK_THROWS_AS(parse_config_text(R"({"protocol": {"cool": {}}, "bogus": 1})"),
                  config_error);
  CHECK_THROWS_AS(
      parse_config_text(R"({"model": {"bogus": 1}, "protocol": {"cool": {}}})"),
      config_error);
  CHECK_THROWS_AS(
      parse_config_text(R"({"protocol": {"cool": {"bogus": 2}}})"), config_error);
  CHECK_THROWS_AS(
      parse_config_text(R"({"numerics": {"bogus": 2}, "protocol": {"cool": {}}})"),
      config_error);
}

TEST_CASE("exactly one protocol block is required") {
  CHECK_THROWS_AS(parse_config_text(R"({})"), config_error);
  CHECK_THROWS_AS(parse_config_text(R"({"protocol": {}})"), config_error);
  CHECK_THROWS_AS(
      parse_config_text(R"({"protocol": {"cool": {}, "battery": {}}})"), config_error);
  CHECK_THROWS_AS(parse_config_text(R"({"protocol": {"unknown_kind": {}}})"),
                  config_error);
}

TEST_CASE("frequency ratios convert against the mechanical frequency") {
  const RunConfig cfg = parse_config_text(R"({
    "model": {"omega_m_hz": 80, "g_over_omega_m": 0.5, "delta_over_omega_m": 2.0,
              "rabi_hz": 10},
    "protocol": {"cool": {}}
  })");
  const double w = 2.0 * pi * 80.0;
  CHECK(cfg.model.omega_m == doctest::Approx(w).epsilon(1e-14));
  CHECK(cfg.model.g == doctest::Approx(0.5 * w).epsilon(1e-14));
  CHECK(cfg.model.delta == doctest::Approx(2.0 * w).epsilon(1e-14));
  CHECK(cfg.model.rabi == doctest::Approx(2.0 * pi * 10.0).epsilon(1e-14));
}

TEST_CASE("unit alternatives conflict when both are given") {
  CHECK_THROWS_AS(parse_config_text(R"({
    "model": {"g_hz": 10, "g_over_omega_m": 0.1}, "protocol": {"cool": {}}})"),
                  config_error);
  CHECK_THROWS_AS(parse_config_text(R"({
    "model": {"q_factor": 1e4, "gamma_m_per_s": 0.1}, "protocol": {"cool": {}}})"),
                  config_error);
  CHECK_THROWS_AS(parse_config_text(R"({
    "model": {"t1_s": 1e-3, "gamma_1_per_s": 100}, "protocol": {"cool": {}}})"),
                  config_error);
  CHECK_THROWS_AS(parse_config_text(R"({
    "model": {"t2_s": 1e-3, "gamma_2_per_s": 100}, "protocol": {"cool": {}}})"),
                  config_error);
  CHECK_THROWS_AS(parse_config_text(R"({
    "protocol": {"otto": {"t_stroke_s": 0.1, "omega_m_t": 3.0, "lambda": 0.2}}})"),
                  config_error);
}

TEST_CASE("quality factor and coherence times map to rates") {
  const RunConfig cfg = parse_config_text(R"({
    "model": {"omega_m_hz": 50, "q_factor": 2000, "t1_s": 4e-3, "t2_s": 2e-3},
    "protocol": {"cool": {}}
  })");
  CHECK(cfg.model.gamma_m == doctest::Approx(cfg.model.omega_m / 2000.0).epsilon(1e-13));
  CHECK(cfg.model.gamma_1 == doctest::Approx(250.0).epsilon(1e-13));
  CHECK(cfg.model.gamma_2 == doctest::Approx(500.0).epsilon(1e-13));
}

TEST_CASE("gradient coupling inputs are exclusive and complete") {
  CHECK_THROWS_AS(parse_config_text(R"({
    "model": {"g_hz": 3, "gyro_rad_per_s_per_t": 1e11, "gradient_t_per_m": 1e6,
              "mass_kg": 1e-18},
    "protocol": {"cool": {}}})"),
                  config_error);
  CHECK_THROWS_AS(parse_config_text(R"({
    "model": {"gyro_rad_per_s_per_t": 1e11, "gradient_t_per_m": 1e6},
    "protocol": {"cool": {}}})"),
                  config_error);
  const RunConfig cfg = parse_config_text(R"({
    "model": {"gyro_rad_per_s_per_t": 1.76e11, "gradient_t_per_m": 1e6,
              "mass_kg": 1e-18},
    "protocol": {"cool": {}}
  })");
  CHECK(cfg.model.g ==
        doctest::Approx(coupling_from_gradient(1.76e11, 1e6, 1e-18, cfg.model.omega_m))
            .epsilon(1e-12));
}

TEST_CASE("plan blocks inherit numerics and convert period units") {
  const RunConfig cfg = parse_config_text(R"({
    "numerics": {"dt_divisor": 64, "truncation_tol": 1e-7},
    "protocol": {"battery": {"tau1_over_period": 0.25, "k": 2,
                              "discharge_delay_over_period": 2.5,
                              "n_charge_kicks": 4}}
  })");
  const double period = 2.0 * pi / cfg.model.omega_m;
  CHECK(cfg.battery.tau1 == doctest::Approx(0.25 * period).epsilon(1e-13));
  CHECK(cfg.battery.discharge_delay == doctest::Approx(2.5 * period).epsilon(1e-13));
  CHECK(cfg.battery.k == 2);
  CHECK(cfg.battery.n_charge_kicks == 4);
  CHECK(cfg.battery.dt_divisor == 64);
  CHECK(cfg.battery.truncation_tol == 1e-7);

  const RunConfig cfg2 = parse_config_text(R"({
    "protocol": {"otto": {"omega_m_t": 9.42477796076938, "d_t_omega_rad_s2": 1000}}
  })");
  CHECK(cfg2.otto.t_stroke ==
        doctest::Approx(9.42477796076938 / cfg2.model.omega_m).epsilon(1e-13));
  CHECK(cfg2.otto.d_t_omega == 1000.0);
}

TEST_CASE("otto requires a stroke time and a frequency drop") {
  CHECK_THROWS_AS(parse_config_text(R"({"protocol": {"otto": {"lambda": 0.2}}})"),
                  config_error);
  CHECK_THROWS_AS(parse_config_text(R"({"protocol": {"otto": {"t_stroke_s": 0.1}}})"),
                  config_error);
}

TEST_CASE("output and worker validation") {
  CHECK_THROWS_AS(parse_config_text(R"({"workers": 0, "protocol": {"cool": {}}})"),
                  config_error);
  CHECK_THROWS_AS(parse_config_text(
                      R"({"output": {"sample_stride": -1}, "protocol": {"cool": {}}})"),
                  config_error);
  const RunConfig cfg = parse_config_text(R"({
    "workers": 3,
    "output": {"format": "json", "sample_stride": 5},
    "protocol": {"cool": {}}
  })");
  CHECK(cfg.workers == 3);
  CHECK(cfg.output.format == OutputFormat::json);
  // the stride flows through to the protocol plans
  CHECK(cfg.cool.sample_every == 5);
  CHECK(cfg.battery.sample_every == 5);
}

TEST_CASE("invalid JSON and non-object documents fail closed") {
  CHECK_THROWS_AS(parse_config_text("not json"), config_error);
  CHECK_THROWS_AS(parse_config_text("[1, 2]"), config_error);
  CHECK_THROWS_AS(parse_config_text(R"({"model": 5, "protocol": {"cool": {}}})"),
                  config_error);
}

TEST_CASE("configuration echo reports resolved units") {
  RunConfig cfg = parse_config_text(R"({
    "model": {"omega_m_hz": 50, "g_over_omega_m": 0.25},
    "protocol": {"otto": {"omega_m_t": 6.0, "lambda": 0.15}}
  })");
  const std::string echo = describe_config(cfg);
  const nlohmann::json j = nlohmann::json::parse(echo);
  CHECK(j.at("protocol").get<std::string>() == "otto");
  CHECK(j.at("model").at("g_rad_per_s").get<double>() ==
        doctest::Approx(0.25 * cfg.model.omega_m).epsilon(1e-13));
  CHECK(j.at("otto").at("lambda").get<double>() == doctest::Approx(0.15).epsilon(1e-14));
  CHECK(j.at("otto").at("t_stroke_s").get<double>() ==
        doctest::Approx(6.0 / cfg.model.omega_m).epsilon(1e-13));
}
