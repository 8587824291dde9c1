// observables.hpp — expectation values, reduced states, entropy, fidelity, state health
#pragma once

#include "spinmech/space.hpp"
#include "spinmech/types.hpp"

namespace spinmech {

// Tr(op·ρ) for arbitrary matching matrices
cxd expectation(const Matrix& op, const Matrix& rho);

// fast O(dim) expectations that read the needed (off-)diagonals directly
double expect_n(const Matrix& rho, const Space& sp);        // ⟨a†a⟩
cxd expect_a(const Matrix& rho, const Space& sp);           // ⟨a⟩
double expect_sigma_z(const Matrix& rho, const Space& sp);  // ⟨σ_z⟩

// partial traces of a composite state
Matrix mech_reduced(const Matrix& rho, const Space& sp);            // trace out spin
Eigen::Matrix2cd spin_reduced(const Matrix& rho, const Space& sp);  // trace out mechanics

// combined population of the two highest Fock levels of Tr_spin ρ
double toptwo_population(const Matrix& rho, const Space& sp);

double purity(const Matrix& rho);  // Tr ρ²

// −Σ λ ln λ in nats; eigenvalues in [−1e-10, 0] clamp to 0, more negative throws
double von_neumann_entropy(const Matrix& rho);

// Uhlmann fidelity F(ρ,σ) = (Tr √(√ρ σ √ρ))², in [0, 1]
double fidelity(const Matrix& rho, const Matrix& sigma);

// one row of a trajectory: every plotted/analyzed quantity of a state
struct ObservableRecord {
  double t = 0;          // seconds
  double n_mean = 0;     // ⟨a†a⟩
  cxd a_mean{0, 0};      // ⟨a⟩
  double sigma_z = 0;    // ⟨σ_z⟩
  double z_over_zpf = 0; // ⟨a+a†⟩/√2
  double n_fluct = 0;    // ⟨a†a⟩ − |⟨a⟩|²
  double trace = 0;      // Tr ρ (real part)
  double entropy = 0;    // von Neumann entropy of the mechanical reduced state, nats
};

ObservableRecord make_record(const Matrix& rho, const Space& sp, double t);

// worst-case state diagnostics accumulated over a run
struct HealthStats {
  double max_trace_dev = 0;   // max |Tr ρ − 1|
  double max_herm_dev = 0;    // max elementwise |ρ − ρ†|
  double min_eigenvalue = 0;  // most negative eigenvalue seen at full checks
  double max_toptwo = 0;      // worst truncation headroom usage

  void merge(const HealthStats& other);
};

inline void merge(HealthStats& into, const HealthStats& from) { into.merge(from); }

// Cheap per-sample check: trace, Hermiticity, diagonal positivity, truncation
// headroom. Throws invariant_violation on breach; otherwise folds into stats.
void check_state_cheap(const Matrix& rho, const Space& sp, double trunc_tol, HealthStats& stats);

// Full check: the above plus the minimum eigenvalue (O(d³); run at checkpoints).
void check_state_full(const Matrix& rho, const Space& sp, double trunc_tol, HealthStats& stats);

inline constexpr double trace_tol = 1e-8;
inline constexpr double herm_tol = 1e-10;
inline constexpr double positivity_tol = 1e-8;

}  // namespace spinmech
