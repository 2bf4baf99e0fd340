#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbound/state.hpp"

namespace qbound {

/// Partition of a state's factors into parties A_1,...,A_n plus an
/// optional conditioning system C. Groups must be nonempty and disjoint.
struct PartitionSpec {
  std::vector<std::vector<std::string>> groups;
  std::vector<std::string> conditioning;

  int party_count() const { return static_cast<int>(groups.size()); }
};

/// Von Neumann entropy, natural log.
double entropy(const QuantumState& rho);
double entropy_of_spectrum(const Eigen::VectorXd& probs);

/// h2(p) = -p ln p - (1-p) ln(1-p).
double binary_entropy(double p);

/// g(x) = (x+1) ln(x+1) - x ln x, g(0) = 0.
double g_func(double x);

/// +infinity when supp(rho) is not contained in supp(sigma).
double relative_entropy(const QuantumState& rho, const QuantumState& sigma);

/// H(A|B) = H(rho) - H(rho_B) for the bipartition (A = group, B = rest
/// named in `cond`).
double conditional_entropy(const QuantumState& rho,
                           const std::vector<std::string>& group,
                           const std::vector<std::string>& cond);

/// I(A_1:...:A_n) = sum_k H(rho_{A_k}) - H(rho) on the reduced state over
/// the union of the groups.
double multipartite_mi(const QuantumState& rho, const PartitionSpec& part);

/// n-partite QCMI via the chain of tripartite terms; matches the direct
/// conditional-entropy formula within numerical tolerance.
double multipartite_qcmi(const QuantumState& rho, const PartitionSpec& part);

/// Direct formula sum_k H(A_k|C) - H(A_1..A_n|C); cross-check oracle for
/// the chain evaluation.
double multipartite_qcmi_direct(const QuantumState& rho,
                                const PartitionSpec& part);

/// Delta(rho) = I(A_1A'_1:...:A_nA'_n) - I(A'_1:...:A'_n) evaluated via
/// its QCMI-sum representation. `pairs[k]` = (A_k labels, A'_k labels);
/// an empty prime group is treated as a trivial factor.
double delta_ei(const QuantumState& rho,
                const std::vector<std::pair<std::vector<std::string>,
                                            std::vector<std::string>>>& pairs);

}  // namespace qbound
