#include "spinmech/observables.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace spinmech {

namespace {

// scientific notation for error messages; std::to_string flattens small
// deviations to 0.000000
std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

}  // namespace

cxd expectation(const Matrix& op, const Matrix& rho) {
  if (op.rows() != rho.rows() || op.cols() != rho.cols()) {
    throw config_error("expectation: dimension mismatch");
  }
  return (op * rho).trace();
}

double expect_n(const Matrix& rho, const Space& sp) {
  const int m = sp.mech_dim();
  double out = 0;
  for (int s = 0; s < 2; ++s)
    for (int n = 1; n < m; ++n) out += n * rho(sp.index(s, n), sp.index(s, n)).real();
  return out;
}

cxd expect_a(const Matrix& rho, const Space& sp) {
  // Tr(aρ) = Σ_{s,n} √(n+1)·ρ[(s,n+1),(s,n)]
  const int m = sp.mech_dim();
  cxd out = 0;
  for (int s = 0; s < 2; ++s)
    for (int n = 0; n + 1 < m; ++n)
      out += std::sqrt(double(n + 1)) * rho(sp.index(s, n + 1), sp.index(s, n));
  return out;
}

double expect_sigma_z(const Matrix& rho, const Space& sp) {
  const int m = sp.mech_dim();
  double out = 0;
  for (int n = 0; n < m; ++n)
    out += rho(sp.index(0, n), sp.index(0, n)).real() - rho(sp.index(1, n), sp.index(1, n)).real();
  return out;
}

Matrix mech_reduced(const Matrix& rho, const Space& sp) {
  const int m = sp.mech_dim();
  return rho.topLeftCorner(m, m) + rho.bottomRightCorner(m, m);
}

Eigen::Matrix2cd spin_reduced(const Matrix& rho, const Space& sp) {
  const int m = sp.mech_dim();
  Eigen::Matrix2cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out(i, j) = rho.block(i * m, j * m, m, m).trace();
  return out;
}

double toptwo_population(const Matrix& rho, const Space& sp) {
  const int m = sp.mech_dim();
  double out = 0;
  for (int s = 0; s < 2; ++s) {
    out += rho(sp.index(s, m - 1), sp.index(s, m - 1)).real();
    out += rho(sp.index(s, m - 2), sp.index(s, m - 2)).real();
  }
  return out;
}

double purity(const Matrix& rho) { return (rho * rho).trace().real(); }

double von_neumann_entropy(const Matrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
  double s = 0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    double lam = es.eigenvalues()(i);
    if (lam < -1e-10) {
      throw invariant_violation("entropy: eigenvalue " + sci(lam) +
                                " below the positivity clamp window");
    }
    if (lam <= 0) continue;
    s -= lam * std::log(lam);
  }
  return s;
}

double fidelity(const Matrix& rho, const Matrix& sigma) {
  if (rho.rows() != sigma.rows()) throw config_error("fidelity: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  Vector sqrt_eigs(es.eigenvalues().size());
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    sqrt_eigs(i) = std::sqrt(std::max(0.0, es.eigenvalues()(i)));
  }
  Matrix root = es.eigenvectors() * sqrt_eigs.asDiagonal() * es.eigenvectors().adjoint();
  Eigen::SelfAdjointEigenSolver<Matrix> inner(root * sigma * root, Eigen::EigenvaluesOnly);
  double tr = 0;
  for (int i = 0; i < inner.eigenvalues().size(); ++i) {
    tr += std::sqrt(std::max(0.0, inner.eigenvalues()(i)));
  }
  return tr * tr;
}

ObservableRecord make_record(const Matrix& rho, const Space& sp, double t) {
  ObservableRecord r;
  r.t = t;
  r.n_mean = expect_n(rho, sp);
  r.a_mean = expect_a(rho, sp);
  r.sigma_z = expect_sigma_z(rho, sp);
  r.z_over_zpf = std::sqrt(2.0) * r.a_mean.real();  // ⟨a+a†⟩/√2
  r.n_fluct = r.n_mean - std::norm(r.a_mean);
  r.trace = rho.trace().real();
  r.entropy = von_neumann_entropy(mech_reduced(rho, sp));
  return r;
}

void HealthStats::merge(const HealthStats& other) {
  max_trace_dev = std::max(max_trace_dev, other.max_trace_dev);
  max_herm_dev = std::max(max_herm_dev, other.max_herm_dev);
  min_eigenvalue = std::min(min_eigenvalue, other.min_eigenvalue);
  max_toptwo = std::max(max_toptwo, other.max_toptwo);
}

void check_state_cheap(const Matrix& rho, const Space& sp, double trunc_tol, HealthStats& stats) {
  const double trace_dev = std::abs(rho.trace().real() - 1.0) + std::abs(rho.trace().imag());
  const double herm_dev = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  const double min_diag = rho.diagonal().real().minCoeff();
  const double tail = toptwo_population(rho, sp);

  stats.max_trace_dev = std::max(stats.max_trace_dev, trace_dev);
  stats.max_herm_dev = std::max(stats.max_herm_dev, herm_dev);
  stats.min_eigenvalue = std::min(stats.min_eigenvalue, min_diag);
  stats.max_toptwo = std::max(stats.max_toptwo, tail);

  if (trace_dev > trace_tol) {
    throw invariant_violation("trace deviated by " + sci(trace_dev));
  }
  if (herm_dev > herm_tol) {
    throw invariant_violation("hermiticity deviated by " + sci(herm_dev));
  }
  if (min_diag < -positivity_tol) {
    throw invariant_violation("negative population " + sci(min_diag));
  }
  if (tail > trunc_tol) {
    throw invariant_violation("top-two Fock population " + sci(tail) +
                              " exceeded the truncation tolerance; raise the Fock cutoff");
  }
}

void check_state_full(const Matrix& rho, const Space& sp, double trunc_tol, HealthStats& stats) {
  check_state_cheap(rho, sp, trunc_tol, stats);
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  stats.min_eigenvalue = std::min(stats.min_eigenvalue, min_eig);
  if (min_eig < -positivity_tol) {
    throw invariant_violation("negative eigenvalue " + sci(min_eig));
  }
}

}  // namespace spinmech
