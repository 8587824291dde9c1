// selfcheck.hpp — built-in validation suite: analytic oracles, frame
// equivalence, exchange dynamics, protocol health, determinism
#pragma once

#include <string>
#include <vector>

namespace spinmech {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // measured value vs. tolerance, or the thrown error
};

// damped oscillator: ⟨a†a⟩(t) follows n̄_th + (n₀−n̄_th)e^{−γ_m t} to 1e-6
// relative at every sample across three decay times
CheckResult check_damped_mean_relaxation();

// closed resonant drive: ⟨σ_z⟩(t) = cos(2Ωt) to 1e-6 across ten periods
CheckResult check_rabi_flopping();

// conjugating the lab Hamiltonian by the displaced-rotated-frame unitary
// reproduces the dressed Hamiltonian (up to its dropped constant) to 1e-8
// relative Frobenius norm on the interior Fock block
CheckResult check_frame_equivalence();

// resonant single-quantum exchange: |n=1, lower⟩ → |n=0, upper⟩ swap
// probability is sin²(g̃t), within 1e-6 under the exchange Hamiltonian and
// within 2% under the full dressed Hamiltonian
CheckResult check_exchange_swap();

// small end-to-end runs of all three protocols; passes when every state on
// the way stayed trace-one, Hermitian, positive, and inside the Fock window
std::vector<CheckResult> check_protocol_health();

// the same pipeline run twice must serialize to byte-identical text
CheckResult check_determinism();

// everything above, in order
std::vector<CheckResult> run_validation_suite();

}  // namespace spinmech
