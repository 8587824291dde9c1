#include "spinmech/model.hpp"

#include <cmath>
#include <limits>

#include "spinmech/operators.hpp"

namespace spinmech {

double coupling_from_gradient(double gyro, double gradient, double mass, double omega) {
  if (mass <= 0 || omega <= 0) {
    throw config_error("coupling_from_gradient: mass and omega must be positive");
  }
  const double z_zpf = std::sqrt(hbar_si / (mass * omega));
  return gyro * gradient * z_zpf;
}

namespace {

void require_positive_omega(double omega, const char* who) {
  if (!(omega > 0)) {
    throw config_error(std::string(who) + ": oscillator frequency must be positive");
  }
}

}  // namespace

DerivedParams derive(const ModelParams& p, double omega_current, double rabi_current) {
  require_positive_omega(omega_current, "derive");
  DerivedParams d;
  d.delta = p.delta - 2.0 * p.g * p.g / omega_current;
  d.delta_bar = std::sqrt(d.delta * d.delta + 4.0 * rabi_current * rabi_current);
  d.theta = std::atan2(-2.0 * rabi_current, d.delta);
  d.g_tilde = d.delta_bar > 0 ? p.g * rabi_current / d.delta_bar : 0.0;
  d.period = 2.0 * pi / omega_current;
  if (p.gyro != 0 && p.gradient != 0 && p.mass > 0) {
    d.z0 = hbar_si * p.gyro * p.gradient / (p.mass * omega_current * omega_current);
  } else {
    d.z0 = std::numeric_limits<double>::quiet_NaN();
  }
  return d;
}

FrameParams frame_params(const ModelParams& p, double omega_current, double rabi_current) {
  require_positive_omega(omega_current, "frame_params");
  FrameParams f;
  f.beta = p.g / (2.0 * omega_current);
  f.delta = p.delta - p.g * p.g / omega_current;
  f.delta_bar = std::sqrt(f.delta * f.delta + 4.0 * rabi_current * rabi_current);
  f.theta = std::atan2(-2.0 * rabi_current, f.delta);
  f.g_eff = f.delta_bar > 0 ? p.g * rabi_current / f.delta_bar : 0.0;
  f.energy_shift = 0.5 * p.delta - p.g * p.g / (4.0 * omega_current);
  return f;
}

Matrix lab_hamiltonian(const Space& sp, const ModelParams& p, double omega_t,
                       double drive_amplitude) {
  const int m = sp.mech_dim();
  const Matrix x = mech_annihilation(m) + mech_creation(m);
  // spin-diagonal part: ω·a†a on both blocks, plus (Δ − g(a+a†)) on the
  // force-feeling level only, since (1−σ_z)/2 projects onto spin index 1
  Eigen::Matrix2cd p0 = Eigen::Matrix2cd::Zero();
  p0(0, 0) = 1;
  Eigen::Matrix2cd p1 = Eigen::Matrix2cd::Zero();
  p1(1, 1) = 1;
  const Matrix n_mech = mech_number(m);
  Matrix h = kron_spin_mech(p0, omega_t * n_mech);
  Matrix block1 = omega_t * n_mech - p.g * x;
  block1 += p.delta * Matrix::Identity(m, m);
  h += kron_spin_mech(p1, block1);
  if (drive_amplitude != 0) {
    Eigen::Matrix2cd sx = Eigen::Matrix2cd::Zero();
    sx(0, 1) = 1;
    sx(1, 0) = 1;
    h += drive_amplitude * kron_spin_mech(sx, Matrix::Identity(m, m));
  }
  return h;
}

Eigen::Matrix2cd spin_rotation(double theta) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  Eigen::Matrix2cd u;
  u << cxd(c, 0), cxd(-s, 0), cxd(s, 0), cxd(c, 0);
  return u;
}

Matrix frame_transform(const Space& sp, const ModelParams& p) {
  const FrameParams f = frame_params(p);
  const Matrix rot = kron_spin_mech(spin_rotation(-f.theta),
                                    Matrix::Identity(sp.mech_dim(), sp.mech_dim()));
  return rot * displacement_operator(sp, cxd(-f.beta, 0));
}

Matrix dressed_hamiltonian(const Space& sp, const ModelParams& p) {
  const FrameParams f = frame_params(p);
  const int m = sp.mech_dim();
  const Matrix x = mech_annihilation(m) + mech_creation(m);
  Eigen::Matrix2cd sz = Eigen::Matrix2cd::Zero();
  sz(0, 0) = 1;
  sz(1, 1) = -1;
  Eigen::Matrix2cd sx = Eigen::Matrix2cd::Zero();
  sx(0, 1) = 1;
  sx(1, 0) = 1;
  const Eigen::Matrix2cd spin_axis =
      std::cos(f.theta) * sz - std::sin(f.theta) * sx;
  Matrix h = kron_spin_mech(Eigen::Matrix2cd::Identity(), p.omega_m * mech_number(m));
  h += kron_spin_mech(-0.5 * f.delta_bar * sz, Matrix::Identity(m, m));
  h += kron_spin_mech(spin_axis, 0.5 * p.g * x);
  return h;
}

Matrix jc_hamiltonian(const Space& sp, const ModelParams& p) {
  const FrameParams f = frame_params(p);
  const int m = sp.mech_dim();
  Eigen::Matrix2cd sz = Eigen::Matrix2cd::Zero();
  sz(0, 0) = 1;
  sz(1, 1) = -1;
  Matrix h = kron_spin_mech(Eigen::Matrix2cd::Identity(), p.omega_m * mech_number(m));
  h += kron_spin_mech(-0.5 * f.delta_bar * sz, Matrix::Identity(m, m));
  // a σ₊ + a† σ₋ with σ₊ = |index 1⟩⟨index 0| (raises the dressed spin)
  Eigen::Matrix2cd raise = Eigen::Matrix2cd::Zero();
  raise(1, 0) = 1;
  Eigen::Matrix2cd lower = Eigen::Matrix2cd::Zero();
  lower(0, 1) = 1;
  h += f.g_eff * (kron_spin_mech(raise, mech_annihilation(m)) +
                  kron_spin_mech(lower, mech_creation(m)));
  return h;
}

}  // namespace spinmech
