#include "spinmech/states.hpp"

#include <cmath>

namespace spinmech {

Matrix fock_density(int dim, int n) {
  if (n < 0 || n >= dim) throw config_error("fock level out of range");
  Matrix rho = Matrix::Zero(dim, dim);
  rho(n, n) = 1.0;
  return rho;
}

Vector coherent_vector(int dim, cxd alpha) {
  Vector c(dim);
  c(0) = 1.0;
  for (int n = 1; n < dim; ++n) c(n) = c(n - 1) * alpha / std::sqrt(double(n));
  c /= c.norm();
  return c;
}

Matrix coherent_density(int dim, cxd alpha) {
  Vector c = coherent_vector(dim, alpha);
  return c * c.adjoint();
}

double thermal_tail_toptwo(int dim, double n_bar) {
  if (n_bar <= 0.0) return 0.0;
  const double q = n_bar / (n_bar + 1.0);
  // untruncated weights p_n = (1−q) q^n; top two retained levels are dim−2, dim−1
  const double p_top = (1.0 - q) * std::pow(q, double(dim - 1));
  const double p_next = (1.0 - q) * std::pow(q, double(dim - 2));
  return p_top + p_next;
}

Matrix mech_thermal(int dim, double n_bar, double trunc_tol) {
  if (n_bar < 0.0) throw config_error("thermal occupation must be nonnegative");
  const double tail = thermal_tail_toptwo(dim, n_bar);
  if (tail > trunc_tol) {
    throw config_error("thermal occupation " + std::to_string(n_bar) +
                       " leaves population " + std::to_string(tail) +
                       " in the top two Fock levels of a dim-" + std::to_string(dim) +
                       " space; raise the Fock cutoff");
  }
  Matrix rho = Matrix::Zero(dim, dim);
  if (n_bar == 0.0) {
    rho(0, 0) = 1.0;
    return rho;
  }
  const double q = n_bar / (n_bar + 1.0);
  double w = 1.0, sum = 0.0;
  for (int n = 0; n < dim; ++n) {
    rho(n, n) = w;
    sum += w;
    w *= q;
  }
  rho /= sum;
  return rho;
}

Matrix product_density(const Eigen::Matrix2cd& spin, const Matrix& mech) {
  const int md = int(mech.rows());
  Matrix out = Matrix::Zero(2 * md, 2 * md);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (spin(i, j) != cxd(0)) out.block(i * md, j * md, md, md) = spin(i, j) * mech;
  return out;
}

Eigen::Matrix2cd spin_level_density(int s) {
  if (s != 0 && s != 1) throw config_error("spin level must be 0 or 1");
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(s, s) = 1.0;
  return m;
}

Matrix thermal_state(const Space& sp, double n_bar, double trunc_tol) {
  return product_density(spin_level_density(0), mech_thermal(sp.mech_dim(), n_bar, trunc_tol));
}

}  // namespace spinmech
