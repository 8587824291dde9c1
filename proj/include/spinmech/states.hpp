// states.hpp — density-matrix and state-vector builders
#pragma once

#include "spinmech/space.hpp"
#include "spinmech/types.hpp"

namespace spinmech {

// |n⟩⟨n| on a dim-dimensional Fock space
Matrix fock_density(int dim, int n);

// normalized coherent-state column vector on the truncated Fock space
Vector coherent_vector(int dim, cxd alpha);
Matrix coherent_density(int dim, cxd alpha);

// Truncated Boltzmann distribution p_n ∝ (n̄/(n̄+1))^n, renormalized to unit
// trace on the truncated space. Rejects occupations whose top-two-level
// combined population exceeds trunc_tol (the state would not fit the cutoff).
Matrix mech_thermal(int dim, double n_bar, double trunc_tol = 1e-6);

// combined population of the two highest Fock levels of the *untruncated*
// geometric distribution — the headroom measure used by the rejection rule
double thermal_tail_toptwo(int dim, double n_bar);

// spin-major product state: spin ⊗ mech
Matrix product_density(const Eigen::Matrix2cd& spin, const Matrix& mech);

// |s⟩⟨s| on the spin factor (s = 0: σ_z = +1; s = 1: σ_z = −1)
Eigen::Matrix2cd spin_level_density(int s);

// thermal mechanics ⊗ spin σ_z = +1 level — the standard protocol start
Matrix thermal_state(const Space& sp, double n_bar, double trunc_tol = 1e-6);

}  // namespace spinmech
