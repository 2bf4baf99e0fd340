#include "qbound/truncation.hpp"

#include <stdexcept>

namespace qbound {

namespace {

// Marks the basis indices inside the truncated subspace.
std::vector<bool> inside_mask(const SystemLayout& lay,
                              const std::vector<int>& cutoffs) {
  const int m = lay.constrained_count();
  if (static_cast<int>(cutoffs.size()) != m)
    throw std::invalid_argument("truncation: cutoff count != constrained count");
  for (int k = 0; k < m; ++k)
    if (cutoffs[k] < 1 || cutoffs[k] > lay.dim(k))
      throw std::invalid_argument("truncation: cutoff out of range");

  const std::vector<int> dims = lay.dims();
  const long total = lay.total_dim();
  std::vector<bool> inside(total, true);
  for (long idx = 0; idx < total; ++idx) {
    long rem = idx;
    for (int k = lay.factor_count() - 1; k >= 0; --k) {
      const long i = rem % dims[k];
      rem /= dims[k];
      if (k < m && i >= cutoffs[k]) {
        inside[idx] = false;
        break;
      }
    }
  }
  return inside;
}

}  // namespace

double retained_mass(const QuantumState& rho, const TruncationSpec& spec) {
  const auto inside = inside_mask(rho.layout(), spec.cutoffs);
  double mass = 0.0;
  for (long i = 0; i < rho.dim(); ++i)
    if (inside[i]) mass += rho.matrix()(i, i).real();
  return mass;
}

TruncationResult truncate_state(const QuantumState& rho,
                                const TruncationSpec& spec) {
  const auto inside = inside_mask(rho.layout(), spec.cutoffs);
  double mass = 0.0;
  for (long i = 0; i < rho.dim(); ++i)
    if (inside[i]) mass += rho.matrix()(i, i).real();
  if (mass < spec.min_retained_mass)
    throw std::runtime_error("truncation: retained mass below floor");

  Matrix m = rho.matrix();
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j)
      if (!inside[i] || !inside[j]) m(i, j) = 0.0;
  m /= mass;
  return {QuantumState(rho.layout(), std::move(m)), mass};
}

}  // namespace qbound
