#include "qbound/tensor_ops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qbound {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

QuantumState tensor_product(const std::vector<QuantumState>& states) {
  if (states.empty()) throw std::invalid_argument("tensor_product: empty list");
  std::vector<Factor> factors;
  Matrix m = states.front().matrix();
  factors = states.front().layout().factors();
  int constrained = states.front().layout().constrained_count();
  for (size_t k = 1; k < states.size(); ++k) {
    m = kron(m, states[k].matrix());
    for (const auto& f : states[k].layout().factors()) factors.push_back(f);
    constrained += states[k].layout().constrained_count();
  }
  return QuantumState(SystemLayout(std::move(factors), constrained),
                      std::move(m));
}

namespace {

// Row-major strides of the factor dims: index = sum_k i_k * stride_k.
std::vector<long> strides_of(const std::vector<int>& dims) {
  std::vector<long> s(dims.size());
  long acc = 1;
  for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
    s[k] = acc;
    acc *= dims[k];
  }
  return s;
}

}  // namespace

QuantumState partial_trace(const QuantumState& state,
                           const std::vector<std::string>& keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");
  const SystemLayout& lay = state.layout();
  std::vector<int> keep_idx, drop_idx;
  for (int k = 0; k < lay.factor_count(); ++k) {
    bool kept = std::find(keep.begin(), keep.end(), lay.label(k)) != keep.end();
    (kept ? keep_idx : drop_idx).push_back(k);
  }
  if (static_cast<int>(keep.size()) != static_cast<int>(keep_idx.size()))
    throw std::invalid_argument("partial_trace: unknown label");
  if (drop_idx.empty()) return state;

  const std::vector<int> dims = lay.dims();
  const std::vector<long> strides = strides_of(dims);

  long dk = 1, dr = 1;
  for (int k : keep_idx) dk *= dims[k];
  for (int k : drop_idx) dr *= dims[k];

  // Enumerate composite offsets of the kept and traced index groups.
  auto offsets = [&](const std::vector<int>& group) {
    std::vector<long> off(1, 0);
    for (int k : group) {
      std::vector<long> next;
      next.reserve(off.size() * dims[k]);
      for (long base : off)
        for (int i = 0; i < dims[k]; ++i) next.push_back(base + i * strides[k]);
      off = std::move(next);
    }
    return off;
  };
  const std::vector<long> keep_off = offsets(keep_idx);
  const std::vector<long> drop_off = offsets(drop_idx);

  const Matrix& in = state.matrix();
  (void)dr;
  Matrix out = Matrix::Zero(dk, dk);
  for (long i = 0; i < dk; ++i)
    for (long j = 0; j < dk; ++j) {
      std::complex<double> acc = 0.0;
      for (long r : drop_off) acc += in(keep_off[i] + r, keep_off[j] + r);
      out(i, j) = acc;
    }

  std::vector<std::string> kept_labels;
  for (int k : keep_idx) kept_labels.push_back(lay.label(k));
  return QuantumState(lay.sublayout(kept_labels), std::move(out));
}

double trace_norm(const Matrix& hermitian) {
  return hermitian_eigenvalues(hermitian).cwiseAbs().sum();
}

double trace_distance(const QuantumState& rho, const QuantumState& sigma) {
  if (!(rho.layout() == sigma.layout()))
    throw std::invalid_argument("trace_distance: layout mismatch");
  double d = 0.5 * trace_norm(rho.matrix() - sigma.matrix());
  return std::clamp(d, 0.0, 1.0);
}

QuantumState purify(const QuantumState& rho, const std::string& ref_label) {
  if (rho.layout().has_label(ref_label))
    throw std::invalid_argument("purify: reference label already used");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.matrix());
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("purify: eigensolver failed");
  const Eigen::VectorXd ev = solver.eigenvalues();
  const long d = rho.dim();

  std::vector<long> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](long a, long b) { return ev[a] > ev[b]; });

  long rank = 0;
  for (long i = 0; i < d; ++i)
    if (ev[order[i]] > 1e-12) ++rank;
  if (rank == 0) throw std::runtime_error("purify: zero state");

  // |psi> = sum_i sqrt(l_i) |v_i> (x) |i>_R
  Vector psi = Vector::Zero(d * rank);
  for (long i = 0; i < rank; ++i) {
    const Vector v = solver.eigenvectors().col(order[i]);
    const double w = std::sqrt(ev[order[i]]);
    for (long x = 0; x < d; ++x) psi[x * rank + i] = w * v[x];
  }

  std::vector<Factor> factors = rho.layout().factors();
  factors.push_back({ref_label, static_cast<int>(rank)});
  return QuantumState::pure(SystemLayout(std::move(factors)), psi);
}

}  // namespace qbound
