#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "qbound/channel.hpp"
#include "qbound/gibbs.hpp"
#include "qbound/state.hpp"

namespace qbound {

/// Stateless seed mixer so every sample is a pure function of
/// (master seed, index) regardless of evaluation order.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index);

/// Hilbert-Schmidt distributed density matrix: normalized G G* with G a
/// complex Ginibre matrix. Deterministic per seed.
QuantumState sample_state(std::uint64_t seed, const SystemLayout& layout);

/// Pair with trace distance in [0.9 eps, eps], obtained by moving one
/// sample along the segment toward the other. eps = 0 returns identical
/// states. Bounded resampling when the raw pair is too close.
std::pair<QuantumState, QuantumState> pair_at_distance(
    std::uint64_t seed, const SystemLayout& layout, double eps);

/// Mix a raw sample with the ground-state projector of the constrained
/// factors at the minimal weight meeting sum_k Tr H_k rho_k <= m * energy.
QuantumState energy_constrained_state(std::uint64_t seed,
                                      const SystemLayout& layout,
                                      const SpectrumModel& factor_spectrum,
                                      double energy);

/// Sum of constrained-factor energies Tr H_k rho_{A_k}.
double constrained_energy(const QuantumState& rho,
                          const SpectrumModel& factor_spectrum);

/// Pure n-party state with every single-party marginal = I/d.
QuantumState ghz_witness(int n, int d);

/// (gamma(E)^{(x)n}, pure correlated Gibbs witness). The second state has
/// every marginal equal to gamma(E) and mutual information n F_H(E).
std::pair<QuantumState, QuantumState> gibbs_witnesses(
    int n, const SpectrumModel& spec, double energy, int working_dim);

/// Isometry-dilated random channel with environment dimension env_dim on
/// every factor, from the uniform unitary distribution.
LocalChannel random_local_channel(std::uint64_t seed,
                                  const SystemLayout& layout,
                                  int env_dim = 2);

}  // namespace qbound
