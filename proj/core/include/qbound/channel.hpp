#pragma once

#include <vector>

#include "qbound/state.hpp"

namespace qbound {

/// One Kraus decomposition; every operator maps the same input dim to the
/// same output dim and the set is trace preserving within kStateTol.
struct KrausSet {
  std::vector<Matrix> ops;

  int input_dim() const { return static_cast<int>(ops.at(0).cols()); }
  int output_dim() const { return static_cast<int>(ops.at(0).rows()); }
};

/// Product channel Phi_1 (x) ... (x) Phi_n, one Kraus set per factor.
class LocalChannel {
 public:
  explicit LocalChannel(std::vector<KrausSet> factors);

  const std::vector<KrausSet>& factors() const { return factors_; }

  static LocalChannel identity(const SystemLayout& layout);
  static KrausSet identity_kraus(int dim);
  static KrausSet depolarizing_kraus(int dim);
  static KrausSet dephasing_kraus(int dim);

 private:
  std::vector<KrausSet> factors_;
};

QuantumState apply_local_channel(const LocalChannel& channel,
                                 const QuantumState& rho);

}  // namespace qbound
