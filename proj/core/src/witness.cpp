#include "qbound/witness.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace qbound {

namespace {

constexpr double kEtaFloor = 1e-15;

double eta(double x) { return x < kEtaFloor ? 0.0 : -x * std::log(x); }

double shannon(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p) h += eta(x);
  return h;
}

}  // namespace

double GibbsMixture::mutual_information() const {
  const double s = mix_weight;
  if (s < 0.0 || s > 1.0)
    throw std::domain_error("gibbs_mixture: weight outside [0,1]");
  const auto& p = point.probabilities;
  const int D = static_cast<int>(p.size());
  const double h_gamma = shannon(p);
  if (s == 0.0) return 0.0;
  if (s == 1.0) return 2.0 * h_gamma;

  // Block on span{|ii>}: (1-s) diag(p_i^2) + s sqrt(p_i p_j).
  Eigen::MatrixXd block(D, D);
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) {
      block(i, j) = s * std::sqrt(p[i] * p[j]);
      if (i == j) block(i, j) += (1.0 - s) * p[i] * p[i];
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block,
                                                    Eigen::EigenvaluesOnly);
  double h_block = 0.0;
  for (int i = 0; i < D; ++i) {
    const double v = es.eigenvalues()[i];
    if (v > kEtaFloor) h_block += eta(v);
  }

  // Diagonal remainder (i != j): sum eta((1-s) p_i p_j) over all pairs
  // minus the i = j terms; the full double sum has the closed form
  // eta(1-s) + (1-s) * 2 H(p).
  double diag_same = 0.0;
  for (int i = 0; i < D; ++i) diag_same += eta((1.0 - s) * p[i] * p[i]);
  const double h_rest = eta(1.0 - s) + (1.0 - s) * 2.0 * h_gamma - diag_same;

  const double h_total = h_block + h_rest;
  const double mi = 2.0 * h_gamma - h_total;
  return mi < 0.0 ? 0.0 : mi;
}

double GibbsMixture::distance(const GibbsPoint& point, double s1, double s2) {
  const auto& p = point.probabilities;
  const int D = static_cast<int>(p.size());
  // M(s1) - M(s2) = (s1 - s2)(|psi><psi| - gamma (x) gamma); the trace norm
  // of the bracket splits into the |ii> block and the diagonal rest.
  Eigen::MatrixXd block(D, D);
  double sum_sq = 0.0;
  for (int i = 0; i < D; ++i) {
    sum_sq += p[i] * p[i];
    for (int j = 0; j < D; ++j) {
      block(i, j) = std::sqrt(p[i] * p[j]);
      if (i == j) block(i, j) -= p[i] * p[i];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block,
                                                    Eigen::EigenvaluesOnly);
  double norm = 1.0 - sum_sq;  // off-block diagonal entries p_i p_j, i != j
  for (int i = 0; i < D; ++i) norm += std::abs(es.eigenvalues()[i]);
  return 0.5 * std::abs(s1 - s2) * norm;
}

}  // namespace qbound
