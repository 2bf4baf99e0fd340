#include "qbound/state.hpp"

#include <cmath>
#include <stdexcept>

namespace qbound {

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigensolver failed");
  return solver.eigenvalues();
}

QuantumState::QuantumState(SystemLayout layout, Matrix matrix)
    : layout_(std::move(layout)), mat_(std::move(matrix)) {
  const long d = layout_.total_dim();
  if (mat_.rows() != d || mat_.cols() != d)
    throw std::invalid_argument("state: matrix size != total dimension");
  const double scale = std::max(1.0, mat_.cwiseAbs().maxCoeff());
  if ((mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() > kStateTol * scale)
    throw std::invalid_argument("state: not Hermitian");
  mat_ = 0.5 * (mat_ + mat_.adjoint().eval());
  if (std::abs(mat_.trace().real() - 1.0) > kStateTol * d)
    throw std::invalid_argument("state: trace != 1");
  if (d <= 512) {
    const double min_eig = hermitian_eigenvalues(mat_).minCoeff();
    if (min_eig < -kStateTol * scale * d)
      throw std::invalid_argument("state: negative eigenvalue");
  } else {
    // Cholesky of the shifted matrix; cheaper than a full spectrum at
    // large dimension.
    Matrix shifted = mat_ + kStateTol * scale * d * Matrix::Identity(d, d);
    Eigen::LLT<Matrix> llt(shifted);
    if (llt.info() != Eigen::Success)
      throw std::invalid_argument("state: negative eigenvalue");
  }
}

Eigen::VectorXd QuantumState::spectrum() const {
  Eigen::VectorXd ev = hermitian_eigenvalues(mat_);
  for (long i = 0; i < ev.size(); ++i)
    if (ev[i] < 0.0) ev[i] = 0.0;
  return ev;
}

QuantumState QuantumState::maximally_mixed(SystemLayout layout) {
  const long d = layout.total_dim();
  return QuantumState(std::move(layout),
                      Matrix::Identity(d, d) / static_cast<double>(d));
}

QuantumState QuantumState::pure(SystemLayout layout, const Vector& psi) {
  const double norm = psi.norm();
  if (norm < 1e-12) throw std::invalid_argument("pure: zero vector");
  Vector v = psi / norm;
  return QuantumState(std::move(layout), v * v.adjoint());
}

QuantumState QuantumState::diagonal(SystemLayout layout,
                                    const Eigen::VectorXd& probs) {
  Matrix m = probs.cast<std::complex<double>>().asDiagonal();
  return QuantumState(std::move(layout), std::move(m));
}

HermitianOperator::HermitianOperator(SystemLayout layout, Matrix matrix)
    : layout_(std::move(layout)), mat_(std::move(matrix)) {
  const long d = layout_.total_dim();
  if (mat_.rows() != d || mat_.cols() != d)
    throw std::invalid_argument("operator: matrix size != total dimension");
  const double scale = std::max(1.0, mat_.cwiseAbs().maxCoeff());
  if ((mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() > kStateTol * scale)
    throw std::invalid_argument("operator: not Hermitian");
}

}  // namespace qbound
