#include "qbound/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "qbound/tensor_ops.hpp"

namespace qbound {

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 finalizer over the combined word
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

Matrix ginibre(std::mt19937_64& rng, int rows, int cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = std::complex<double>(re, im);
    }
  return g;
}

std::vector<std::string> party_labels(int n) {
  std::vector<std::string> labels(n);
  for (int k = 0; k < n; ++k) labels[k] = "A" + std::to_string(k + 1);
  return labels;
}

}  // namespace

QuantumState sample_state(std::uint64_t seed, const SystemLayout& layout) {
  std::mt19937_64 rng(seed);
  const int d = static_cast<int>(layout.total_dim());
  const Matrix g = ginibre(rng, d, d);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = Matrix(0.5 * (rho + rho.adjoint()));
  return QuantumState(layout, rho);
}

std::pair<QuantumState, QuantumState> pair_at_distance(
    std::uint64_t seed, const SystemLayout& layout, double eps) {
  if (eps < 0.0) throw std::domain_error("pair_at_distance: eps < 0");
  QuantumState rho = sample_state(mix_seed(seed, 0), layout);
  if (eps == 0.0) return {rho, rho};

  const double target = 0.95 * eps;
  QuantumState sigma = sample_state(mix_seed(seed, 1), layout);
  double raw = trace_distance(rho, sigma);
  for (std::uint64_t attempt = 2; raw < target && attempt < 8; ++attempt) {
    QuantumState cand = sample_state(mix_seed(seed, attempt), layout);
    const double d = trace_distance(rho, cand);
    if (d > raw) {
      raw = d;
      sigma = cand;
    }
  }
  if (raw < target) {
    // farthest state from rho: pure state on its minimal eigenvector
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix());
    const Vector v = es.eigenvectors().col(0);
    sigma = QuantumState(layout, v * v.adjoint());
    raw = trace_distance(rho, sigma);
  }

  // distance is exactly linear along the mixing segment
  const double s = std::min(1.0, target / raw);
  Matrix mixed = (1.0 - s) * rho.matrix() + s * sigma.matrix();
  return {rho, QuantumState(layout, mixed)};
}

double constrained_energy(const QuantumState& rho,
                          const SpectrumModel& factor_spectrum) {
  const SystemLayout& layout = rho.layout();
  double total = 0.0;
  for (int k = 0; k < layout.constrained_count(); ++k) {
    if (layout.dim(k) > factor_spectrum.size())
      throw std::invalid_argument("constrained_energy: spectrum too short");
    const QuantumState marg = partial_trace(rho, {layout.label(k)});
    for (int i = 0; i < layout.dim(k); ++i)
      total += factor_spectrum.levels()[i] * marg.matrix()(i, i).real();
  }
  return total;
}

QuantumState energy_constrained_state(std::uint64_t seed,
                                      const SystemLayout& layout,
                                      const SpectrumModel& factor_spectrum,
                                      double energy) {
  const int m = layout.constrained_count();
  if (m < 1)
    throw std::invalid_argument("energy_constrained_state: no constraint");
  const double e0 = factor_spectrum.ground_energy();
  if (energy < e0)
    throw std::domain_error("energy_constrained_state: E below ground energy");

  QuantumState rho = sample_state(seed, layout);
  const double budget = m * energy;
  const double raw = constrained_energy(rho, factor_spectrum);
  if (raw <= budget) return rho;

  // Mix with (ground space on constrained factors) (x) (mixed elsewhere);
  // the constrained energy is linear in the mixing weight.
  const int mult = factor_spectrum.ground_multiplicity();
  std::vector<QuantumState> parts;
  for (int k = 0; k < layout.factor_count(); ++k) {
    const int d = layout.dim(k);
    SystemLayout single({{layout.label(k), d}}, k < m ? 1 : 0);
    Eigen::VectorXd probs = Eigen::VectorXd::Zero(d);
    if (k < m) {
      const int g = std::min(mult, d);
      for (int i = 0; i < g; ++i) probs[i] = 1.0 / g;
    } else {
      probs.setConstant(1.0 / d);
    }
    parts.push_back(QuantumState::diagonal(single, probs));
  }
  QuantumState floor_state = tensor_product(parts);
  const double floor_energy = constrained_energy(floor_state, factor_spectrum);
  if (floor_energy > budget)
    throw std::domain_error("energy_constrained_state: budget below ground");

  const double w = (raw - budget) / (raw - floor_energy);
  Matrix mixed = (1.0 - w) * rho.matrix() + w * floor_state.matrix();
  return QuantumState(layout, mixed);
}

QuantumState ghz_witness(int n, int d) {
  if (n < 2 || d < 2) throw std::invalid_argument("ghz_witness: n,d >= 2");
  std::vector<Factor> factors;
  for (const auto& l : party_labels(n)) factors.push_back({l, d});
  SystemLayout layout(std::move(factors), n);
  Vector psi = Vector::Zero(layout.total_dim());
  long stride = 0;
  for (int k = 0; k < n; ++k) stride = stride * d + 1;
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) psi[i * stride] = amp;
  return QuantumState::pure(layout, psi);
}

std::pair<QuantumState, QuantumState> gibbs_witnesses(
    int n, const SpectrumModel& spec, double energy, int working_dim) {
  if (n < 2) throw std::invalid_argument("gibbs_witnesses: n >= 2");
  if (working_dim < 2 || working_dim > spec.size())
    throw std::invalid_argument("gibbs_witnesses: bad working_dim");

  const GibbsPoint point = solve_gibbs(spec, energy);
  Eigen::VectorXd p(working_dim);
  double mass = 0.0;
  for (int i = 0; i < working_dim; ++i) {
    p[i] = point.probabilities[i];
    mass += p[i];
  }
  p /= mass;

  std::vector<Factor> factors;
  for (const auto& l : party_labels(n)) factors.push_back({l, working_dim});
  SystemLayout layout(std::move(factors), n);

  std::vector<QuantumState> parts;
  for (int k = 0; k < n; ++k) {
    SystemLayout single({{layout.label(k), working_dim}}, k == 0 ? 1 : 0);
    parts.push_back(QuantumState::diagonal(single, p));
  }
  QuantumState product = tensor_product(parts);

  Vector psi = Vector::Zero(layout.total_dim());
  long stride = 0;
  for (int k = 0; k < n; ++k) stride = stride * working_dim + 1;
  for (int i = 0; i < working_dim; ++i) psi[i * stride] = std::sqrt(p[i]);
  QuantumState correlated = QuantumState::pure(layout, psi);
  return {product, correlated};
}

LocalChannel random_local_channel(std::uint64_t seed,
                                  const SystemLayout& layout,
                                  int env_dim) {
  if (env_dim < 1) throw std::invalid_argument("random_local_channel: env < 1");
  std::vector<KrausSet> sets;
  for (int k = 0; k < layout.factor_count(); ++k) {
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(k)));
    const int d = layout.dim(k);
    const Matrix g = ginibre(rng, d * env_dim, d);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(d * env_dim, d);
    // fix column phases for a well-defined isometry per seed
    const Matrix r = qr.matrixQR().topRows(d).triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
      const std::complex<double> rjj = r(j, j);
      if (std::abs(rjj) > 0.0) q.col(j) *= rjj / std::abs(rjj);
    }
    // V|j> = sum_{i,e} q(i*env+e, j) |i>|e>; Kraus K_e = (I (x) <e|) V
    KrausSet set;
    for (int e = 0; e < env_dim; ++e) {
      Matrix ke(d, d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) ke(i, j) = q(i * env_dim + e, j);
      set.ops.push_back(std::move(ke));
    }
    sets.push_back(std::move(set));
  }
  return LocalChannel(std::move(sets));
}

}  // namespace qbound
