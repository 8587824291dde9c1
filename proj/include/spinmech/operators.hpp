// operators.hpp — ladder and Pauli operators on the mechanical, spin, and composite spaces
#pragma once

#include "spinmech/space.hpp"
#include "spinmech/types.hpp"

namespace spinmech {

// mechanical-only operators, (dim × dim) in the Fock basis
Matrix mech_annihilation(int dim);
Matrix mech_creation(int dim);
Matrix mech_number(int dim);
Matrix mech_position(int dim);  // a + a†

// 2×2 spin operators in the basis {σ_z = +1, σ_z = −1}
Eigen::Matrix2cd pauli_x();
Eigen::Matrix2cd pauli_y();
Eigen::Matrix2cd pauli_z();
// spin_lower maps the σ_z = −1 level into the σ_z = +1 level: |s0⟩⟨s1|.
// This orientation makes the optical-reset jump operator pump population
// into the σ_z = +1 state.
Eigen::Matrix2cd spin_lower();
Eigen::Matrix2cd spin_raise();

// spin ⊗ mech Kronecker product in the spin-major basis of Space
Matrix kron_spin_mech(const Eigen::Matrix2cd& s, const Matrix& m);

// composite operators on the full space
Matrix annihilation(const Space& sp);
Matrix creation(const Space& sp);
Matrix number_op(const Space& sp);
Matrix position(const Space& sp);  // a + a†
Matrix sigma_x(const Space& sp);
Matrix sigma_y(const Space& sp);
Matrix sigma_z(const Space& sp);
Matrix sigma_minus(const Space& sp);
Matrix sigma_plus(const Space& sp);
Matrix identity(const Space& sp);

// exp(α a† − α* a) on a dim-dimensional Fock space (unitary on the truncated
// space; built by eigendecomposition of the Hermitian generator i(α a† − α* a))
Matrix mech_displacement(int dim, cxd alpha);
// composite: identity_spin ⊗ mech_displacement
Matrix displacement_operator(const Space& sp, cxd alpha);

}  // namespace spinmech
