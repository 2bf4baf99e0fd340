#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qbound/energy_function.hpp"

namespace qbound {

/// L-hat classes use the trace distance directly; N classes arise from
/// infima over extensions and use delta = sqrt(eps(2-eps)) instead.
enum class FunctionClass { LHat, N1, N2, N3 };

bool is_n_class(FunctionClass cls);

/// Class membership of a characteristic: constants (C, D), marginal count
/// m and party count n.
struct ClassDescriptor {
  FunctionClass cls;
  double C;
  double D;
  int m;
  int n;
};

enum class Characteristic { MI, QCMI, SQ, CSQ, EI };
enum class BoundVariant { Finite, Sqrt, TwoStep, Oscillator };

std::string to_string(Characteristic c);
std::string to_string(BoundVariant v);
Characteristic characteristic_from_string(const std::string& s);
BoundVariant variant_from_string(const std::string& s);

/// Constant table of the class catalog, parameterized by party count n
/// and marginal count m. Throws for combinations outside the catalog
/// (e.g. EI with m = n-1).
ClassDescriptor descriptor_for(Characteristic c, int n, int m);

/// Every (characteristic, descriptor) entry defined for party count n.
std::vector<std::pair<std::string, ClassDescriptor>> catalog(int n);

/// Everything parameterizing one bound evaluation. `t` applies to the
/// two-step variants only; t <= 0 requests optimization.
struct BoundSpec {
  ClassDescriptor descriptor;
  double eps = 0.0;
  double energy_bar = 0.0;  // per-copy E - E_0
  double t = 1.0;
  std::optional<EnergyFunction> fhat;
};

struct BoundValue {
  double total = 0.0;
  std::vector<std::pair<std::string, double>> terms;
  double effective_eps = 0.0;  // eps, or delta for N classes
  double t_used = 0.0;
};

/// Finite-dimensional bound: C x ln(dim) + D g(x), x = eps or delta.
BoundValue cb_finite(const ClassDescriptor& desc, double eps,
                     long dim_constrained);

/// sqrt(eps) bound C m sqrt(2x) Fbar(Ebar/x) + D g(sqrt(2x)) in the
/// identical-subsystem form; spec.fhat supplies Fbar (or any admissible
/// upper bound on it).
BoundValue cb_energy_sqrt(const BoundSpec& spec);

/// Two-step bound
///   C m [(x + x^2 t^2) F(m Ebar/(x^2 t^2)) + 2 sqrt(2 x t) F(Ebar/(x t))]
///   + D [g(x + x^2 t^2) + 2 g(sqrt(2 x t))]
/// with x = eps or delta and F an envelope satisfying the monotonicity
/// conditions (F nondecreasing, F/sqrt(E) nonincreasing).
BoundValue vb_two_step(const BoundSpec& spec);

/// Two-step bound with the closed-form oscillator envelope; algebraically
/// identical to vb_two_step with F = Fbar_{l,w}.
BoundValue cb_oscillator(const BoundSpec& spec);

/// Grid + golden-section minimization of the two-step bound over t.
std::pair<double, BoundValue> optimize_t(const BoundSpec& spec);

struct BoundRequest {
  Characteristic characteristic;
  BoundVariant variant;
  int n = 2;
  int m = 2;
  std::vector<int> dims;  // finite variant: dims of A_1..A_m (or A_1..A_n)
  double eps = 0.0;
  double energy_bar = 0.0;
  double t = 1.0;  // <= 0 requests optimization
  std::optional<EnergyFunction> fhat;
};

/// Dispatch a characteristic/variant pair through the catalog constants.
/// SQ/CSQ/EI results bound 2|E(rho) - E(sigma)|.
BoundValue bound_for(const BoundRequest& request);

}  // namespace qbound
