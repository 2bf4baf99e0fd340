#include "qbound/entropic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "qbound/tensor_ops.hpp"

namespace qbound {

namespace {

constexpr double kEtaFloor = 1e-15;

double eta(double x) { return x < kEtaFloor ? 0.0 : -x * std::log(x); }

std::vector<std::string> concat(const std::vector<std::string>& a,
                                const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

void check_partition(const QuantumState& rho, const PartitionSpec& part) {
  if (part.groups.empty())
    throw std::invalid_argument("partition: no groups");
  std::set<std::string> seen;
  for (const auto& grp : part.groups) {
    if (grp.empty()) throw std::invalid_argument("partition: empty group");
    for (const auto& l : grp) {
      if (!rho.layout().has_label(l))
        throw std::invalid_argument("partition: unknown label " + l);
      if (!seen.insert(l).second)
        throw std::invalid_argument("partition: label reused: " + l);
    }
  }
  for (const auto& l : part.conditioning) {
    if (!rho.layout().has_label(l))
      throw std::invalid_argument("partition: unknown label " + l);
    if (!seen.insert(l).second)
      throw std::invalid_argument("partition: label reused: " + l);
  }
}

double marginal_entropy(const QuantumState& rho,
                        const std::vector<std::string>& labels) {
  if (labels.size() == static_cast<size_t>(rho.layout().factor_count()))
    return entropy(rho);
  return entropy(partial_trace(rho, labels));
}

}  // namespace

double entropy_of_spectrum(const Eigen::VectorXd& probs) {
  double h = 0.0;
  for (long i = 0; i < probs.size(); ++i) h += eta(probs[i]);
  return h < 0.0 ? 0.0 : h;
}

double entropy(const QuantumState& rho) {
  return entropy_of_spectrum(rho.spectrum());
}

double binary_entropy(double p) {
  if (p < 0.0 || p > 1.0)
    throw std::domain_error("binary_entropy: p outside [0,1]");
  return eta(p) + eta(1.0 - p);
}

double g_func(double x) {
  if (x < 0.0) throw std::domain_error("g_func: negative argument");
  if (x < kEtaFloor) return 0.0;
  return (x + 1.0) * std::log1p(x) - x * std::log(x);
}

double relative_entropy(const QuantumState& rho, const QuantumState& sigma) {
  if (!(rho.layout() == sigma.layout()))
    throw std::invalid_argument("relative_entropy: layout mismatch");

  Eigen::SelfAdjointEigenSolver<Matrix> rs(rho.matrix());
  Eigen::SelfAdjointEigenSolver<Matrix> ss(sigma.matrix());
  if (rs.info() != Eigen::Success || ss.info() != Eigen::Success)
    throw std::runtime_error("relative_entropy: eigensolver failed");

  const double kSupportTol = 1e-12;  // sigma eigenvalues below are kernel
  const double kMassTol = 1e-9;      // rho mass allowed on the kernel

  // rho mass on the kernel of sigma
  double kernel_mass = 0.0;
  for (long j = 0; j < ss.eigenvalues().size(); ++j) {
    if (ss.eigenvalues()[j] >= kSupportTol) continue;
    const Vector v = ss.eigenvectors().col(j);
    kernel_mass += (v.adjoint() * rho.matrix() * v).real()(0, 0);
  }
  if (kernel_mass > kMassTol)
    return std::numeric_limits<double>::infinity();

  // Tr rho ln rho - Tr rho ln sigma in the respective eigenbases.
  double result = 0.0;
  for (long i = 0; i < rs.eigenvalues().size(); ++i) {
    const double p = rs.eigenvalues()[i];
    if (p < kEtaFloor) continue;
    result += p * std::log(p);
  }
  for (long j = 0; j < ss.eigenvalues().size(); ++j) {
    const double q = ss.eigenvalues()[j];
    if (q < kSupportTol) continue;
    const Vector v = ss.eigenvectors().col(j);
    const double mass = (v.adjoint() * rho.matrix() * v).real()(0, 0);
    result -= mass * std::log(q);
  }
  return result < 0.0 ? 0.0 : result;
}

double conditional_entropy(const QuantumState& rho,
                           const std::vector<std::string>& group,
                           const std::vector<std::string>& cond) {
  const auto joint = concat(group, cond);
  double h_joint = marginal_entropy(rho, joint);
  if (cond.empty()) return h_joint;
  return h_joint - marginal_entropy(rho, cond);
}

double multipartite_mi(const QuantumState& rho, const PartitionSpec& part) {
  check_partition(rho, part);
  std::vector<std::string> all;
  double sum = 0.0;
  for (const auto& grp : part.groups) {
    sum += marginal_entropy(rho, grp);
    all.insert(all.end(), grp.begin(), grp.end());
  }
  double mi = sum - marginal_entropy(rho, all);
  return mi < 0.0 ? 0.0 : mi;
}

double multipartite_qcmi(const QuantumState& rho, const PartitionSpec& part) {
  check_partition(rho, part);
  if (part.conditioning.empty()) return multipartite_mi(rho, part);

  const auto& C = part.conditioning;
  const int n = part.party_count();
  // Chain of tripartite terms I(A_k : A_{k+1}..A_n | C), each via the
  // four-entropy formula.
  double total = 0.0;
  for (int k = 0; k < n - 1; ++k) {
    const auto& X = part.groups[k];
    std::vector<std::string> Y;
    for (int j = k + 1; j < n; ++j)
      Y.insert(Y.end(), part.groups[j].begin(), part.groups[j].end());
    const double h_xc = marginal_entropy(rho, concat(X, C));
    const double h_yc = marginal_entropy(rho, concat(Y, C));
    const double h_xyc = marginal_entropy(rho, concat(concat(X, Y), C));
    const double h_c = marginal_entropy(rho, C);
    total += h_xc + h_yc - h_xyc - h_c;
  }
  return total < 0.0 ? 0.0 : total;
}

double multipartite_qcmi_direct(const QuantumState& rho,
                                const PartitionSpec& part) {
  check_partition(rho, part);
  const auto& C = part.conditioning;
  double sum = 0.0;
  std::vector<std::string> all;
  for (const auto& grp : part.groups) {
    sum += conditional_entropy(rho, grp, C);
    all.insert(all.end(), grp.begin(), grp.end());
  }
  return sum - conditional_entropy(rho, all, C);
}

double delta_ei(const QuantumState& rho,
                const std::vector<std::pair<std::vector<std::string>,
                                            std::vector<std::string>>>& pairs) {
  if (pairs.size() < 2) throw std::invalid_argument("delta_ei: need n >= 2");
  const int n = static_cast<int>(pairs.size());

  // Delta = I(A_1 : A'_2..A'_n | A'_1)
  //       + sum_{k>=2} I(A_k : A_1..A_{k-1} A'_1..A'_{k-1} A'_{k+1}..A'_n | A'_k)
  // Empty prime groups are trivial factors; a term with empty conditioning
  // degrades to plain mutual information of the two blocks.
  auto tripartite = [&](const std::vector<std::string>& X,
                        const std::vector<std::string>& Y,
                        const std::vector<std::string>& C) -> double {
    if (X.empty() || Y.empty()) return 0.0;
    double h_xc = marginal_entropy(rho, concat(X, C));
    double h_yc = marginal_entropy(rho, concat(Y, C));
    double h_xyc = marginal_entropy(rho, concat(concat(X, Y), C));
    double h_c = C.empty() ? 0.0 : marginal_entropy(rho, C);
    return h_xc + h_yc - h_xyc - h_c;
  };

  double total = 0.0;
  {
    std::vector<std::string> Y;
    for (int j = 1; j < n; ++j)
      Y.insert(Y.end(), pairs[j].second.begin(), pairs[j].second.end());
    total += tripartite(pairs[0].first, Y, pairs[0].second);
  }
  for (int k = 1; k < n; ++k) {
    std::vector<std::string> Y;
    for (int j = 0; j < k; ++j) {
      Y.insert(Y.end(), pairs[j].first.begin(), pairs[j].first.end());
      Y.insert(Y.end(), pairs[j].second.begin(), pairs[j].second.end());
    }
    for (int j = k + 1; j < n; ++j)
      Y.insert(Y.end(), pairs[j].second.begin(), pairs[j].second.end());
    total += tripartite(pairs[k].first, Y, pairs[k].second);
  }
  return total < 0.0 ? 0.0 : total;
}

}  // namespace qbound
