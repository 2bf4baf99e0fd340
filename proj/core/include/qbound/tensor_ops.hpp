#pragma once

#include <string>
#include <vector>

#include "qbound/state.hpp"

namespace qbound {

/// Kronecker product of matrices in listed order.
Matrix kron(const Matrix& a, const Matrix& b);

/// Tensor product of states; layouts are concatenated.
QuantumState tensor_product(const std::vector<QuantumState>& states);

/// Reduced state on the factors named in `keep` (original order preserved).
QuantumState partial_trace(const QuantumState& state,
                           const std::vector<std::string>& keep);

/// Half the trace norm of rho - sigma. Exact for Hermitian arguments:
/// sum of absolute eigenvalues of the difference.
double trace_distance(const QuantumState& rho, const QuantumState& sigma);

double trace_norm(const Matrix& hermitian);

/// Spectral purification on layout (x) reference factor of dim = rank(rho).
/// Eigenvalues sorted descending, zero eigenvalues dropped.
QuantumState purify(const QuantumState& rho, const std::string& ref_label = "R");

}  // namespace qbound
