// Output serialization: exact text round trips, stable headers, and JSON
// documents that parse back to the same numbers.
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracles.hpp"
#include "spinmech/csv.hpp"
#include "spinmech/types.hpp"

using namespace spinmech;

TEST_CASE("doubles survive the text round trip exactly") {
  for (double v : {0.0, 1.0, -1.0, pi, 1.0 / 3.0, 6.02e23, 1.054571817e-34,
                   -7.213e-9, 123456.789012345678}) {
    const std::string s = format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
}

TEST_CASE("trajectory serialization carries the full record") {
  std::vector<ObservableRecord> samples(2);
  samples[0].t = 0.0;
  samples[0].n_mean = 1.5;
  samples[0].a_mean = cxd(0.25, -0.125);
  samples[0].sigma_z = 1.0;
  samples[0].z_over_zpf = 0.5;
  samples[0].n_fluct = 1.4375;
  samples[0].trace = 1.0;
  samples[0].entropy = 0.7;
  samples[1] = samples[0];
  samples[1].t = 1.0 / 3.0;

  const std::string csv = format_trajectory(samples, OutputFormat::csv);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "t_seconds,n_mean,re_a,im_a,sigma_z,z_over_zpf,n_fluct,trace,entropy");
  std::getline(in, line);
  CHECK(line.substr(0, 2) == "0,");
  std::getline(in, line);
  CHECK(std::strtod(line.c_str(), nullptr) == 1.0 / 3.0);
  std::getline(in, line);
  CHECK(in.eof());

  const std::string js = format_trajectory(samples, OutputFormat::json);
  const nlohmann::json j = nlohmann::json::parse(js);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  CHECK(j[1].at("t_seconds").get<double>() == 1.0 / 3.0);
  CHECK(j[0].at("re_a").get<double>() == 0.25);
  CHECK(j[0].at("im_a").get<double>() == -0.125);
}

TEST_CASE("cooling map serialization lays rows out detuning-major") {
  CoolingMapResult map;
  map.resolution = 2;
  const double w = 2.0 * pi * 50.0;
  map.deltas = {1.0 * w, 2.0 * w};
  map.gs = {0.25 * w, 0.5 * w};
  map.ratio = {0.9, 1.1, 0.8, 1.2};
  map.unit_contour = {{1.5 * w, 0.375 * w}};

  const std::string csv = format_cooling_map(map, w, OutputFormat::csv);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "Delta_over_wm,g_over_wm,ratio");
  std::getline(in, line);
  CHECK(line == "1,0.25,0.90000000000000002");
  std::getline(in, line);
  CHECK(line == "1,0.5,1.1000000000000001");
  std::getline(in, line);
  CHECK(line.substr(0, 2) == "2,");

  const std::string contour = format_unit_contour(map, w, OutputFormat::csv);
  CHECK(contour == "Delta_over_wm,g_over_wm\n1.5,0.375\n");
}

TEST_CASE("sweep and cycle-diagram serialization") {
  OttoSweepRow row;
  row.omega_m_t = 3.0 * pi;
  row.lambda = 0.2;
  row.t3_over_t4 = 0.7;
  row.eta = 0.15;
  row.eta_c = 0.2;
  row.eta_ca = 0.16;
  row.engine = true;
  const std::string csv = format_otto_sweep({row}, OutputFormat::csv);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "lambda,T3_over_T4,eta,eta_C,eta_CA");
  std::getline(in, line);
  CHECK(line.substr(0, 4) == "0.20");  // %.17g rendering of 0.2

  TSPoint pt;
  pt.stroke = 2;
  pt.t_seconds = 0.125;
  pt.omega = 2.0 * pi * 40.0;
  pt.n_fluct = 3.5;
  pt.entropy_nats = 2.25;
  pt.temperature_ref = 4.0;
  const std::string ts = format_ts_points({pt}, OutputFormat::csv);
  std::istringstream tin(ts);
  std::getline(tin, line);
  CHECK(line == "stroke,t_seconds,omega_rad_per_s,n_fluct,entropy_nats,T_over_hw1_kb");
  std::getline(tin, line);
  CHECK(line.substr(0, 2) == "2,");

  const nlohmann::json j =
      nlohmann::json::parse(format_otto_sweep({row}, OutputFormat::json));
  CHECK(j[0].at("eta").get<double>() == 0.15);
  CHECK(j[0].at("engine").get<bool>());
}

TEST_CASE("format names, extensions, and parsing agree") {
  CHECK(parse_output_format("csv") == OutputFormat::csv);
  CHECK(parse_output_format("json") == OutputFormat::json);
  CHECK_THROWS_AS(parse_output_format("xml"), config_error);
  CHECK(std::string(output_format_extension(OutputFormat::csv)) == "csv");
  CHECK(std::string(output_format_extension(OutputFormat::json)) == "json");
}

TEST_CASE("text files are written verbatim") {
  const std::string path = "test_output_roundtrip.tmp";
  const std::string content = "a,b\n1,0.90000000000000002\n";
  write_text_file(path, content);
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == content);
  std::remove(path.c_str());
}
