#include "spinmech/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "spinmech/operators.hpp"

namespace spinmech {

std::vector<DissipatorSpec> physical_dissipators(const ModelParams& p, bool include_pump) {
  std::vector<DissipatorSpec> d;
  d.push_back({DissipatorSpec::Kind::mechanical_thermal, p.gamma_m, p.n_th, true});
  d.push_back({DissipatorSpec::Kind::spin_damping, p.gamma_1, p.n_spin, true});
  d.push_back({DissipatorSpec::Kind::spin_dephasing, p.gamma_2, 0, true});
  if (include_pump) {
    d.push_back({DissipatorSpec::Kind::optical_reset, p.gamma_gl, 0, true});
  }
  return d;
}

ReducedRates reduce_rates(const std::vector<DissipatorSpec>& dissipators) {
  ReducedRates r;
  for (const auto& d : dissipators) {
    if (!d.enabled || d.rate == 0) continue;
    if (d.rate < 0 || d.occupation < 0) {
      throw config_error("dissipator rates and occupations must be non-negative");
    }
    switch (d.kind) {
      case DissipatorSpec::Kind::mechanical_thermal:
        r.mech_down += d.rate * (d.occupation + 1);
        r.mech_up += d.rate * d.occupation;
        break;
      case DissipatorSpec::Kind::spin_damping:
        r.spin_down += d.rate * (d.occupation + 1);
        r.spin_up += d.rate * d.occupation;
        break;
      case DissipatorSpec::Kind::spin_dephasing:
        r.dephasing += d.rate;
        break;
      case DissipatorSpec::Kind::optical_reset:
        r.spin_down += d.rate;
        break;
    }
  }
  return r;
}

namespace {

// (rate/2)·ℒ[x]ρ with ℒ[x]ρ = 2xρx† − x†xρ − ρx†x
Matrix half_lindblad(double rate, const Matrix& x, const Matrix& rho) {
  const Matrix xr = x * rho;
  const Matrix xx = x.adjoint() * x;
  return rate * (xr * x.adjoint()) - 0.5 * rate * (xx * rho + rho * xx);
}

}  // namespace

Matrix lindblad_rhs(const Space& sp, const Matrix& h,
                    const std::vector<DissipatorSpec>& dissipators, const Matrix& rho) {
  const int d = sp.dim();
  if (h.rows() != d || h.cols() != d || rho.rows() != d || rho.cols() != d) {
    throw config_error("lindblad_rhs: operator dimensions do not match the space");
  }
  Matrix out = -iu * (h * rho - rho * h);
  for (const auto& ds : dissipators) {
    if (!ds.enabled || ds.rate == 0) continue;
    switch (ds.kind) {
      case DissipatorSpec::Kind::mechanical_thermal: {
        const Matrix a = annihilation(sp);
        out += half_lindblad(ds.rate * (ds.occupation + 1), a, rho);
        if (ds.occupation > 0) {
          out += half_lindblad(ds.rate * ds.occupation, Matrix(a.adjoint()), rho);
        }
        break;
      }
      case DissipatorSpec::Kind::spin_damping: {
        out += half_lindblad(ds.rate * (ds.occupation + 1), sigma_minus(sp), rho);
        if (ds.occupation > 0) {
          out += half_lindblad(ds.rate * ds.occupation, sigma_plus(sp), rho);
        }
        break;
      }
      case DissipatorSpec::Kind::spin_dephasing:
        out += half_lindblad(ds.rate, sigma_z(sp), rho);
        break;
      case DissipatorSpec::Kind::optical_reset:
        out += half_lindblad(ds.rate, sigma_minus(sp), rho);
        break;
    }
  }
  return out;
}

namespace {

// Integrator working in the frame co-rotating with the instantaneous
// mechanical frequency: the ω(t)a†a term is removed exactly through the
// accumulated phase φ(t) = ∫ω dt, the spin–position coupling picks up
// e^{∓iφ} sideband factors, and every dissipator is invariant under the
// rotation. This keeps the RK4 step size tied to the slow physics instead
// of the mechanical carrier.
class SegmentIntegrator {
 public:
  SegmentIntegrator(const Space& sp, const ModelParams& p, const Segment& seg)
      : m_(sp.mech_dim()),
        d_(sp.dim()),
        g_(p.g),
        omega0_(seg.omega_start),
        slope_(seg.duration > 0 ? (seg.omega_end - seg.omega_start) / seg.duration : 0),
        delta_(seg.detuning),
        rabi_(seg.drive_amplitude),
        parked_(seg.spin_parked),
        rr_(reduce_rates(seg.dissipators)) {
    sq_ = Vector(std::max(m_ - 1, 0));
    for (int n = 0; n + 1 < m_; ++n) sq_(n) = cxd(std::sqrt(double(n + 1)), 0);
    outer_ = Matrix(std::max(m_ - 1, 0), std::max(m_ - 1, 0));
    for (int r = 0; r + 1 < m_; ++r) {
      for (int c = 0; c + 1 < m_; ++c) outer_(r, c) = sq_(r) * sq_(c);
    }
    c00_ = Vector(m_);
    c11_ = Vector(m_);
    kd_ = Vector(m_);
    for (int n = 0; n < m_; ++n) {
      // reflecting top level: the heating operator cannot lift population
      // past the cutoff, so its decay diagonal vanishes there too, keeping
      // anticommutator and sandwich consistent and the trace exact
      const double up = n + 1 < m_ ? rr_.mech_up * (n + 1) : 0.0;
      const double mech = rr_.mech_down * n + up;
      c00_(n) = cxd(0, -0.5 * (mech + rr_.spin_up + rr_.dephasing));
      c11_(n) = cxd(delta_, -0.5 * (mech + rr_.spin_down + rr_.dephasing));
      kd_(n) = cxd(mech, 0);
    }
    const int w = parked_ ? m_ : d_;
    k1_ = Matrix::Zero(w, w);
    k2_ = Matrix::Zero(w, w);
    k3_ = Matrix::Zero(w, w);
    k4_ = Matrix::Zero(w, w);
    stage_ = Matrix::Zero(w, w);
    gp_ = Matrix::Zero(w, w);
  }

  double phase(double t) const { return omega0_ * t + 0.5 * slope_ * t * t; }

  void rhs(Matrix& out, const Matrix& r, double t) {
    if (parked_) {
      rhs_parked(out, r);
      return;
    }
    const int m = m_;
    // gp = G·r with G = H̃ − (i/2)·Σ rate·x†x (all x†x diagonal)
    gp_.topRows(m).noalias() = c00_.asDiagonal() * r.topRows(m);
    gp_.bottomRows(m).noalias() = c11_.asDiagonal() * r.bottomRows(m);
    if (rabi_ != 0) {
      gp_.topRows(m).noalias() += rabi_ * r.bottomRows(m);
      gp_.bottomRows(m).noalias() += rabi_ * r.topRows(m);
    }
    if (g_ != 0 && m > 1) {
      const cxd cu = -g_ * std::polar(1.0, -phase(t));
      gp_.middleRows(m, m - 1).noalias() += cu * (sq_.asDiagonal() * r.bottomRows(m - 1));
      gp_.middleRows(m + 1, m - 1).noalias() +=
          std::conj(cu) * (sq_.asDiagonal() * r.middleRows(m, m - 1));
    }
    out.noalias() = cxd(0, -1) * gp_;
    out.noalias() += cxd(0, 1) * gp_.adjoint();
    // sandwich terms Σ rate·x ρ x†
    if ((rr_.mech_down > 0 || rr_.mech_up > 0) && m > 1) {
      for (int br : {0, m}) {
        for (int bc : {0, m}) {
          if (rr_.mech_down > 0) {
            out.block(br, bc, m - 1, m - 1) +=
                rr_.mech_down * outer_.cwiseProduct(r.block(br + 1, bc + 1, m - 1, m - 1));
          }
          if (rr_.mech_up > 0) {
            out.block(br + 1, bc + 1, m - 1, m - 1) +=
                rr_.mech_up * outer_.cwiseProduct(r.block(br, bc, m - 1, m - 1));
          }
        }
      }
    }
    if (rr_.spin_down > 0) {
      out.topLeftCorner(m, m) += rr_.spin_down * r.bottomRightCorner(m, m);
    }
    if (rr_.spin_up > 0) {
      out.bottomRightCorner(m, m) += rr_.spin_up * r.topLeftCorner(m, m);
    }
    if (rr_.dephasing > 0) {
      out.topLeftCorner(m, m) += rr_.dephasing * r.topLeftCorner(m, m);
      out.bottomRightCorner(m, m) += rr_.dephasing * r.bottomRightCorner(m, m);
      out.topRightCorner(m, m) -= rr_.dephasing * r.topRightCorner(m, m);
      out.bottomLeftCorner(m, m) -= rr_.dephasing * r.bottomLeftCorner(m, m);
    }
  }

  // reset-level mechanical block only: the spin sits in its reset level with
  // the drive off, so the only active generator is the mechanical bath
  void rhs_parked(Matrix& out, const Matrix& r) {
    const int m = m_;
    gp_.noalias() = kd_.asDiagonal() * r;
    gp_.noalias() += r * kd_.asDiagonal();
    out.noalias() = -0.5 * gp_;
    if (m > 1) {
      if (rr_.mech_down > 0) {
        out.topLeftCorner(m - 1, m - 1) +=
            rr_.mech_down * outer_.cwiseProduct(r.block(1, 1, m - 1, m - 1));
      }
      if (rr_.mech_up > 0) {
        out.block(1, 1, m - 1, m - 1) +=
            rr_.mech_up * outer_.cwiseProduct(r.topLeftCorner(m - 1, m - 1));
      }
    }
  }

  void rk4_step(Matrix& r, double t, double dt) {
    rhs(k1_, r, t);
    stage_ = r + (0.5 * dt) * k1_;
    rhs(k2_, stage_, t + 0.5 * dt);
    stage_ = r + (0.5 * dt) * k2_;
    rhs(k3_, stage_, t + 0.5 * dt);
    stage_ = r + dt * k3_;
    rhs(k4_, stage_, t + dt);
    r += (dt / 6.0) * (k1_ + 2.0 * k2_ + 2.0 * k3_ + k4_);
    stage_ = r.adjoint();
    r += stage_;
    r *= 0.5;
  }

 private:
  int m_, d_;
  double g_, omega0_, slope_, delta_, rabi_;
  bool parked_;
  ReducedRates rr_;
  Vector sq_, c00_, c11_, kd_;
  Matrix outer_;
  Matrix k1_, k2_, k3_, k4_, stage_, gp_;
};

// lab-frame state from the co-rotating one: ρ_lab = e^{−iφn̂} ρ̃ e^{iφn̂}
void rotate_full_to_lab(Matrix& rho, double phi, int m) {
  const int d = int(rho.rows());
  Vector pv(d);
  for (int i = 0; i < d; ++i) pv(i) = std::polar(1.0, -phi * double(i % m));
  rho.array().colwise() *= pv.array();
  rho.array().rowwise() *= pv.conjugate().transpose().array();
}

void rotate_block_to_lab(Matrix& block, double phi) {
  const int m = int(block.rows());
  Vector pv(m);
  for (int n = 0; n < m; ++n) pv(n) = std::polar(1.0, -phi * double(n));
  block.array().colwise() *= pv.array();
  block.array().rowwise() *= pv.conjugate().transpose().array();
}

void validate_segment(const Space& sp, const Segment& seg, const ReducedRates& rr) {
  if (seg.duration < 0) throw config_error("segment duration must be non-negative");
  if (seg.duration > 0 && (seg.omega_start <= 0 || seg.omega_end <= 0)) {
    throw config_error("segment mechanical frequency must stay positive");
  }
  if (seg.truncation_tol <= 0) throw config_error("truncation tolerance must be positive");
  if (seg.spin_parked) {
    if (seg.drive_amplitude != 0) {
      throw config_error("spin_parked segments require zero drive amplitude");
    }
    if (rr.spin_up != 0) {
      throw config_error("spin_parked segments require no upward spin channel");
    }
  }
  (void)sp;
}

}  // namespace

StepPlan plan_steps(const Space& sp, const ModelParams& p, const Segment& seg,
                    int min_steps) {
  const int m = sp.mech_dim();
  const ReducedRates rr = reduce_rates(seg.dissipators);
  const int divisor = std::max(seg.resolution_divisor, 1);

  double dt = std::numeric_limits<double>::infinity();
  if (!seg.spin_parked) {
    double wmax = std::max(std::abs(seg.detuning), 2.0 * std::abs(seg.drive_amplitude));
    const double omega_lo = std::min(seg.omega_start, seg.omega_end);
    const double omega_hi = std::max(seg.omega_start, seg.omega_end);
    if (p.g != 0 && omega_lo > 0) {
      for (double omega : {omega_lo, omega_hi}) {
        const double delta_eff = seg.detuning - 2.0 * p.g * p.g / omega;
        wmax = std::max(wmax, std::hypot(delta_eff, 2.0 * seg.drive_amplitude));
      }
      wmax = std::max(wmax, omega_hi);
    } else {
      wmax = std::max(wmax, std::hypot(seg.detuning, 2.0 * seg.drive_amplitude));
    }
    if (wmax > 0) dt = std::min(dt, 2.0 * pi / (wmax * divisor));
    const double hnorm = 2.0 * std::abs(seg.drive_amplitude) + std::abs(seg.detuning) +
                         2.0 * std::abs(p.g) * std::sqrt(double(m));
    if (hnorm > 0) dt = std::min(dt, 2.0 / hnorm);
  }
  const double lam = rr.mech_down * (m - 1) + rr.mech_up * m + rr.spin_down + rr.spin_up +
                     4.0 * rr.dephasing;
  if (lam > 0) dt = std::min(dt, 1.4 / lam);
  for (const auto& ds : seg.dissipators) {
    if (ds.enabled && ds.kind == DissipatorSpec::Kind::optical_reset && ds.rate > 0) {
      dt = std::min(dt, 0.25 / ds.rate);  // resolves the pump decay accurately
    }
  }

  StepPlan plan;
  if (seg.steps_override > 0) {
    plan.steps = seg.steps_override;
  } else if (!std::isfinite(dt) || seg.duration <= 0) {
    plan.steps = std::max(min_steps, 1);
  } else {
    plan.steps = std::max<int>(std::max(min_steps, 1),
                               int(std::ceil(seg.duration / dt - 1e-12)));
  }
  plan.dt = seg.duration > 0 ? seg.duration / plan.steps : 0.0;
  return plan;
}

double segment_phase(const Segment& seg, double t_local) {
  const double slope =
      seg.duration > 0 ? (seg.omega_end - seg.omega_start) / seg.duration : 0.0;
  return seg.omega_start * t_local + 0.5 * slope * t_local * t_local;
}

Matrix segment_generator_rhs(const Space& sp, const ModelParams& p, const Segment& seg,
                             const Matrix& rho, double t_local) {
  SegmentIntegrator integ(sp, p, seg);
  if (seg.spin_parked) {
    const int m = sp.mech_dim();
    Matrix block = rho.topLeftCorner(m, m);
    Matrix out_block(m, m);
    integ.rhs(out_block, block, t_local);
    Matrix out = Matrix::Zero(sp.dim(), sp.dim());
    out.topLeftCorner(m, m) = out_block;
    return out;
  }
  Matrix out(sp.dim(), sp.dim());
  integ.rhs(out, rho, t_local);
  return out;
}

Trajectory evolve_segment(const Space& sp, const ModelParams& p, const Matrix& rho,
                          const Segment& seg, double dt_request, double t0,
                          bool include_initial) {
  const int m = sp.mech_dim();
  const int d = sp.dim();
  if (rho.rows() != d || rho.cols() != d) {
    throw config_error("evolve_segment: state dimension does not match the space");
  }
  const ReducedRates rr = reduce_rates(seg.dissipators);
  validate_segment(sp, seg, rr);

  Trajectory out;
  if (include_initial) {
    out.samples.push_back(make_record(rho, sp, t0));
  }
  if (seg.duration <= 0) {
    out.final_state = rho;
    check_state_full(rho, sp, seg.truncation_tol, out.health);
    return out;
  }

  StepPlan plan;
  if (dt_request > 0) {
    plan.steps = std::max(1, int(std::ceil(seg.duration / dt_request - 1e-12)));
    plan.dt = seg.duration / plan.steps;
  } else {
    plan = plan_steps(sp, p, seg);
  }
  const int stride = seg.sample_every > 0 ? seg.sample_every : plan.steps;

  SegmentIntegrator integ(sp, p, seg);
  Matrix work;
  if (seg.spin_parked) {
    // require the spin to actually sit in the reset level
    const double stray = rho.bottomRightCorner(m, m).diagonal().real().sum();
    const double cross = rho.topRightCorner(m, m).cwiseAbs().maxCoeff();
    if (stray > 1e-9 || cross > 1e-9) {
      throw invariant_violation(
          "spin_parked segment entered with population outside the reset level");
    }
    work = rho.topLeftCorner(m, m);
  } else {
    work = rho;
  }

  Matrix lab(d, d);
  auto lab_state = [&](double phi) {
    if (seg.spin_parked) {
      Matrix block = work;
      rotate_block_to_lab(block, phi);
      lab.setZero();
      lab.topLeftCorner(m, m) = block;
    } else {
      lab = work;
      rotate_full_to_lab(lab, phi, m);
    }
  };

  for (int k = 0; k < plan.steps; ++k) {
    const double t_local = k * plan.dt;
    integ.rk4_step(work, t_local, plan.dt);
    const int done = k + 1;
    if (done % stride == 0 || done == plan.steps) {
      const double phi = integ.phase(done * plan.dt);
      lab_state(phi);
      check_state_cheap(lab, sp, seg.truncation_tol, out.health);
      out.samples.push_back(make_record(lab, sp, t0 + done * plan.dt));
    }
  }
  lab_state(integ.phase(seg.duration));
  if (seg.full_check_at_end) {
    check_state_full(lab, sp, seg.truncation_tol, out.health);
  } else {
    check_state_cheap(lab, sp, seg.truncation_tol, out.health);
  }
  out.final_state = lab;
  return out;
}

Matrix apply_pi_pulse(const Matrix& rho, const Space& sp) {
  const int m = sp.mech_dim();
  Matrix out(sp.dim(), sp.dim());
  out.topLeftCorner(m, m) = rho.bottomRightCorner(m, m);
  out.bottomRightCorner(m, m) = rho.topLeftCorner(m, m);
  out.topRightCorner(m, m) = rho.bottomLeftCorner(m, m);
  out.bottomLeftCorner(m, m) = rho.topRightCorner(m, m);
  return out;
}

Matrix apply_spin_reset(const Matrix& rho, const Space& sp, ResetMode mode,
                        const ModelParams& p) {
  const int m = sp.mech_dim();
  if (mode == ResetMode::instant_channel) {
    Matrix out = Matrix::Zero(sp.dim(), sp.dim());
    out.topLeftCorner(m, m) = rho.topLeftCorner(m, m) + rho.bottomRightCorner(m, m);
    return out;
  }
  Segment seg;
  seg.duration = p.t_laser;
  seg.omega_start = seg.omega_end = p.omega_m;
  seg.drive_amplitude = 0;
  seg.detuning = p.delta;
  seg.dissipators = physical_dissipators(p, /*include_pump=*/true);
  seg.sample_every = 0;  // final sample only
  return evolve_segment(sp, p, rho, seg).final_state;
}

Trajectory run_schedule(const Space& sp, const ModelParams& p, const Matrix& rho0,
                        const PulseSchedule& schedule, double dt_request) {
  if (schedule.empty()) throw config_error("run_schedule: empty schedule");
  Trajectory out;
  Matrix state = rho0;
  double t = 0;
  out.samples.push_back(make_record(state, sp, 0.0));
  for (const auto& item : schedule) {
    if (std::holds_alternative<Segment>(item)) {
      const Segment& seg = std::get<Segment>(item);
      Trajectory tr = evolve_segment(sp, p, state, seg, dt_request, t, false);
      out.samples.insert(out.samples.end(), tr.samples.begin(), tr.samples.end());
      merge(out.health, tr.health);
      state = std::move(tr.final_state);
      t += seg.duration;
    } else {
      const InstantEvent& ev = std::get<InstantEvent>(item);
      state = ev.kind == InstantEvent::Kind::pi_pulse
                  ? apply_pi_pulse(state, sp)
                  : apply_spin_reset(state, sp, ev.reset_mode, p);
    }
  }
  out.final_state = std::move(state);
  return out;
}

}  // namespace spinmech
