#pragma once

#include <Eigen/Dense>

#include "qbound/layout.hpp"

namespace qbound {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Relative tolerance for Hermiticity, trace and positivity checks.
inline constexpr double kStateTol = 1e-9;

/// Density matrix over a SystemLayout. Validated on construction:
/// Hermitian, unit trace and positive semidefinite within kStateTol.
class QuantumState {
 public:
  QuantumState(SystemLayout layout, Matrix matrix);

  const SystemLayout& layout() const { return layout_; }
  const Matrix& matrix() const { return mat_; }
  long dim() const { return mat_.rows(); }

  /// Eigenvalues in increasing order, tiny negatives clamped to zero.
  Eigen::VectorXd spectrum() const;

  static QuantumState maximally_mixed(SystemLayout layout);
  static QuantumState pure(SystemLayout layout, const Vector& psi);
  static QuantumState diagonal(SystemLayout layout, const Eigen::VectorXd& probs);

 private:
  SystemLayout layout_;
  Matrix mat_;
};

/// Hermitian (not necessarily positive) operator over a SystemLayout.
class HermitianOperator {
 public:
  HermitianOperator(SystemLayout layout, Matrix matrix);

  const SystemLayout& layout() const { return layout_; }
  const Matrix& matrix() const { return mat_; }

 private:
  SystemLayout layout_;
  Matrix mat_;
};

/// Eigenvalues of a Hermitian matrix, ascending.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& m);

}  // namespace qbound
