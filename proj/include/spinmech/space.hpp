// space.hpp — composite Hilbert space: two-level spin ⊗ truncated oscillator
#pragma once

#include "spinmech/types.hpp"

namespace spinmech {

// Basis ordering is spin-major: |s, n⟩ ↦ s·(n_max+1) + n.
// Spin level s = 0 is the σ_z = +1 state (the optically reset level);
// s = 1 is the σ_z = −1 state (the level that feels the mechanical force).
struct Space {
  int n_max = 49;  // highest retained Fock level

  int mech_dim() const { return n_max + 1; }
  int dim() const { return 2 * mech_dim(); }
  int index(int s, int n) const { return s * mech_dim() + n; }
};

inline Space make_space(int fock_cutoff) {
  if (fock_cutoff < 1) {
    throw config_error("fock cutoff must be at least 1, got " + std::to_string(fock_cutoff));
  }
  return Space{fock_cutoff};
}

}  // namespace spinmech
