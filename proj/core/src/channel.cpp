#include "qbound/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "qbound/tensor_ops.hpp"

namespace qbound {

namespace {

void check_kraus(const KrausSet& set) {
  if (set.ops.empty()) throw std::invalid_argument("kraus: empty set");
  const long din = set.ops.front().cols();
  const long dout = set.ops.front().rows();
  Matrix sum = Matrix::Zero(din, din);
  for (const auto& k : set.ops) {
    if (k.cols() != din || k.rows() != dout)
      throw std::invalid_argument("kraus: inconsistent operator shapes");
    sum += k.adjoint() * k;
  }
  if ((sum - Matrix::Identity(din, din)).cwiseAbs().maxCoeff() > 1e-8)
    throw std::invalid_argument("kraus: completeness violated");
}

}  // namespace

LocalChannel::LocalChannel(std::vector<KrausSet> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("channel: no factors");
  for (const auto& f : factors_) check_kraus(f);
}

KrausSet LocalChannel::identity_kraus(int dim) {
  return KrausSet{{Matrix::Identity(dim, dim)}};
}

LocalChannel LocalChannel::identity(const SystemLayout& layout) {
  std::vector<KrausSet> sets;
  for (const auto& f : layout.factors()) sets.push_back(identity_kraus(f.dim));
  return LocalChannel(std::move(sets));
}

KrausSet LocalChannel::depolarizing_kraus(int dim) {
  // Kraus form of rho -> I/d: |i><j| / sqrt(d).
  KrausSet set;
  const double w = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Matrix k = Matrix::Zero(dim, dim);
      k(i, j) = w;
      set.ops.push_back(std::move(k));
    }
  return set;
}

KrausSet LocalChannel::dephasing_kraus(int dim) {
  KrausSet set;
  for (int i = 0; i < dim; ++i) {
    Matrix k = Matrix::Zero(dim, dim);
    k(i, i) = 1.0;
    set.ops.push_back(std::move(k));
  }
  return set;
}

QuantumState apply_local_channel(const LocalChannel& channel,
                                 const QuantumState& rho) {
  const SystemLayout& lay = rho.layout();
  if (static_cast<int>(channel.factors().size()) != lay.factor_count())
    throw std::invalid_argument("channel: factor count mismatch");

  std::vector<Factor> out_factors = lay.factors();
  Matrix m = rho.matrix();
  std::vector<int> dims = lay.dims();

  // Apply the factors one at a time, lifting each Kraus operator with
  // identities on the other factors.
  for (int k = 0; k < lay.factor_count(); ++k) {
    const KrausSet& set = channel.factors()[k];
    if (set.input_dim() != dims[k])
      throw std::invalid_argument("channel: input dim mismatch");
    long left = 1, right = 1;
    for (int i = 0; i < k; ++i) left *= dims[i];
    for (int i = k + 1; i < lay.factor_count(); ++i) right *= dims[i];

    const Matrix il = Matrix::Identity(left, left);
    const Matrix ir = Matrix::Identity(right, right);
    Matrix next = Matrix::Zero(left * set.output_dim() * right,
                               left * set.output_dim() * right);
    for (const auto& op : set.ops) {
      Matrix lifted = kron(kron(il, op), ir);
      next += lifted * m * lifted.adjoint();
    }
    m = std::move(next);
    dims[k] = set.output_dim();
    out_factors[k].dim = set.output_dim();
  }
  return QuantumState(
      SystemLayout(std::move(out_factors), lay.constrained_count()),
      std::move(m));
}

}  // namespace qbound
