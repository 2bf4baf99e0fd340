#pragma once

#include <utility>
#include <vector>

#include "qbound/state.hpp"

namespace qbound {

/// Level cutoffs for the constrained factors of a layout. The projector
/// keeps the first `cutoff[k]` basis vectors of constrained factor k and
/// acts as identity on the rest.
struct TruncationSpec {
  std::vector<int> cutoffs;
  double min_retained_mass = 1e-12;
};

struct TruncationResult {
  QuantumState state;
  double retained_mass;
};

/// rho_d = Q rho Q / Tr(Q rho), with Q built from `spec`. The truncated
/// state keeps the original layout (mass outside the cutoff subspace is
/// zeroed). Throws if the retained mass falls below the configured floor.
TruncationResult truncate_state(const QuantumState& rho,
                                const TruncationSpec& spec);

/// Tr(Q rho) without forming the truncated state.
double retained_mass(const QuantumState& rho, const TruncationSpec& spec);

}  // namespace qbound
