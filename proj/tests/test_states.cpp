// State preparation: thermal, coherent, Fock, and composite product states
// checked against closed-form populations from the oracle.
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "spinmech/observables.hpp"
#include "spinmech/space.hpp"
#include "spinmech/states.hpp"
#include "spinmech/types.hpp"

using namespace spinmech;

TEST_CASE("fock and coherent states have the expected structure") {
  const Matrix f = fock_density(6, 3);
  CHECK(f(3, 3) == cxd(1, 0));
  CHECK(std::abs(f.trace() - cxd(1, 0)) == 0.0);
  CHECK(f.cwiseAbs().sum() == 1.0);  // a single nonzero entry

  const cxd alpha(0.8, -0.3);
  const Vector v = coherent_vector(64, alpha);
  CHECK(std::abs(v.norm() - 1.0) < 1e-12);
  // Poisson populations |<n|alpha>|^2 = e^{-|a|^2} |a|^{2n} / n!
  const double a2 = std::norm(alpha);
  double fact = 1.0;
  for (int n = 0; n <= 5; ++n) {
    if (n > 0) fact *= n;
    const double expected = std::exp(-a2) * std::pow(a2, n) / fact;
    CHECK(std::abs(std::norm(v(n)) - expected) < 1e-12);
  }
  const Matrix rho = coherent_density(64, alpha);
  CHECK(oracle::max_abs_diff(rho, (v * v.adjoint()).eval()) < 1e-15);
}

TEST_CASE("thermal state populations follow the geometric distribution") {
  const int dim = 60;
  const double n_bar = 2.3;
  const Matrix rho = mech_thermal(dim, n_bar);
  CHECK(std::abs(rho.trace().real() - 1.0) < 1e-12);
  // populations are the geometric weights renormalized onto the kept levels
  double z = 0;
  for (int n = 0; n < dim; ++n) z += oracle::thermal_pop(n_bar, n);
  for (int n = 0; n < dim; ++n) {
    CHECK(std::abs(rho(n, n).real() - oracle::thermal_pop(n_bar, n) / z) < 1e-14);
  }
  CHECK(rho.cwiseAbs().sum() == doctest::Approx(1.0).epsilon(1e-12));  // diagonal
}

TEST_CASE("thermal entropy matches the closed form") {
  const int dim = 80;
  const double n_bar = 1.7;
  const Matrix rho = mech_thermal(dim, n_bar);
  CHECK(std::abs(von_neumann_entropy(rho) - oracle::thermal_entropy(n_bar)) < 1e-6);
}

TEST_CASE("vacuum limit") {
  const Matrix rho = mech_thermal(10, 0.0);
  CHECK(std::abs(rho(0, 0).real() - 1.0) < 1e-15);
  CHECK(von_neumann_entropy(rho) == 0.0);
}

TEST_CASE("truncation guard rejects a cutoff too small for the occupancy") {
  // tail estimate for the top two levels of the untruncated distribution
  const double tail = thermal_tail_toptwo(12, 8.0);
  const double expect = oracle::thermal_pop(8.0, 10) + oracle::thermal_pop(8.0, 11);
  CHECK(std::abs(tail - expect) < 1e-15);
  CHECK_THROWS_AS(mech_thermal(12, 8.0), config_error);
  CHECK_NOTHROW(mech_thermal(12, 0.2));
}

TEST_CASE("composite thermal state parks the spin in the reset level") {
  const Space sp = make_space(40);
  const double n_bar = 1.1;
  const Matrix rho = thermal_state(sp, n_bar);
  CHECK(std::abs(rho.trace().real() - 1.0) < 1e-12);
  CHECK(expect_sigma_z(rho, sp) == doctest::Approx(1.0).epsilon(1e-12));
  // the force-feeling block is exactly empty
  const int m = sp.mech_dim();
  CHECK(rho.block(m, m, m, m).cwiseAbs().maxCoeff() == 0.0);
  CHECK(std::abs(expect_n(rho, sp) - oracle::truncated_thermal_mean(m, n_bar)) < 1e-9);
}

TEST_CASE("product density assembles spin-major blocks") {
  Eigen::Matrix2cd s;
  s << 0.25, cxd(0.1, 0.05), cxd(0.1, -0.05), 0.75;
  const Matrix m = oracle::random_density(5, 42);
  const Matrix rho = product_density(s, m);
  CHECK(oracle::max_abs_diff(rho.block(0, 0, 5, 5), (s(0, 0) * m).eval()) < 1e-15);
  CHECK(oracle::max_abs_diff(rho.block(0, 5, 5, 5), (s(0, 1) * m).eval()) < 1e-15);
  CHECK(oracle::max_abs_diff(rho.block(5, 5, 5, 5), (s(1, 1) * m).eval()) < 1e-15);
  CHECK(std::abs(rho.trace() - cxd(1, 0)) < 1e-12);
}
