#include "spinmech/operators.hpp"

namespace spinmech {

Matrix mech_annihilation(int dim) {
  Matrix a = Matrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

Matrix mech_creation(int dim) { return mech_annihilation(dim).adjoint(); }

Matrix mech_number(int dim) {
  Matrix n = Matrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) n(k, k) = double(k);
  return n;
}

Matrix mech_position(int dim) {
  Matrix a = mech_annihilation(dim);
  return a + a.adjoint();
}

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << 0, -iu, iu, 0;
  return m;
}

Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

Eigen::Matrix2cd spin_lower() {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 1) = 1;
  return m;
}

Eigen::Matrix2cd spin_raise() { return spin_lower().adjoint(); }

Matrix kron_spin_mech(const Eigen::Matrix2cd& s, const Matrix& m) {
  const int md = int(m.rows());
  Matrix out = Matrix::Zero(2 * md, 2 * md);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (s(i, j) != cxd(0)) out.block(i * md, j * md, md, md) = s(i, j) * m;
  return out;
}

Matrix annihilation(const Space& sp) {
  return kron_spin_mech(Eigen::Matrix2cd::Identity(), mech_annihilation(sp.mech_dim()));
}

Matrix creation(const Space& sp) { return annihilation(sp).adjoint(); }

Matrix number_op(const Space& sp) {
  return kron_spin_mech(Eigen::Matrix2cd::Identity(), mech_number(sp.mech_dim()));
}

Matrix position(const Space& sp) {
  return kron_spin_mech(Eigen::Matrix2cd::Identity(), mech_position(sp.mech_dim()));
}

Matrix sigma_x(const Space& sp) {
  return kron_spin_mech(pauli_x(), Matrix::Identity(sp.mech_dim(), sp.mech_dim()));
}

Matrix sigma_y(const Space& sp) {
  return kron_spin_mech(pauli_y(), Matrix::Identity(sp.mech_dim(), sp.mech_dim()));
}

Matrix sigma_z(const Space& sp) {
  return kron_spin_mech(pauli_z(), Matrix::Identity(sp.mech_dim(), sp.mech_dim()));
}

Matrix sigma_minus(const Space& sp) {
  return kron_spin_mech(spin_lower(), Matrix::Identity(sp.mech_dim(), sp.mech_dim()));
}

Matrix sigma_plus(const Space& sp) {
  return kron_spin_mech(spin_raise(), Matrix::Identity(sp.mech_dim(), sp.mech_dim()));
}

Matrix identity(const Space& sp) { return Matrix::Identity(sp.dim(), sp.dim()); }

Matrix mech_displacement(int dim, cxd alpha) {
  // G = α a† − α* a is anti-Hermitian; exp(G) = exp(−i (iG)) via the
  // eigendecomposition of the Hermitian matrix iG.
  Matrix a = mech_annihilation(dim);
  Matrix herm = iu * (alpha * a.adjoint() - std::conj(alpha) * a);
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm);
  Vector phases = (-iu * es.eigenvalues().cast<cxd>().array()).exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix displacement_operator(const Space& sp, cxd alpha) {
  return kron_spin_mech(Eigen::Matrix2cd::Identity(), mech_displacement(sp.mech_dim(), alpha));
}

}  // namespace spinmech
