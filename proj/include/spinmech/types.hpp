// types.hpp — scalar aliases, dense-matrix aliases, constants, error types
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace spinmech {

using cxd     = std::complex<double>;
using Matrix  = Eigen::MatrixXcd;
using Vector  = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr cxd iu{0.0, 1.0};  // imaginary unit

// physical constants (SI)
inline constexpr double hbar_si = 1.054571817e-34;  // J s
inline constexpr double kb_si   = 1.380649e-23;     // J / K

// A state or bookkeeping quantity broke a hard guarantee (trace, positivity,
// truncation headroom, ledger sign). Runs abort rather than continue silently.
struct invariant_violation : std::runtime_error {
  explicit invariant_violation(const std::string& what) : std::runtime_error(what) {}
};

// Bad user-facing input (config file, CLI flags, parameter preconditions).
struct config_error : std::runtime_error {
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spinmech
