#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "qbound/bounds.hpp"
#include "qbound/sampling.hpp"

namespace qbound {

/// One verification sample: LHS from the entropic evaluation, RHS from
/// the bound evaluation. Negative slack below -1e-9 is a failure.
struct VerifyRecord {
  std::string characteristic;
  std::string variant;
  int n = 0;
  int m = 0;
  std::string dims;
  double eps_target = 0.0;
  double eps_measured = 0.0;
  double energy = 0.0;
  double t = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  std::uint64_t seed = 0;
};

inline constexpr double kSlackFloor = -1e-9;

struct VerifyConfig {
  Characteristic characteristic = Characteristic::MI;
  BoundVariant variant = BoundVariant::Finite;
  int n = 2;
  int m = 2;
  std::vector<int> dims;  // per-party dims (conditioning dim appended for QCMI)
  int cond_dim = 1;       // QCMI conditioning dimension
  double eps = 0.1;
  int samples = 100;
  std::uint64_t seed = 1;
  int threads = 1;
  // energy variants
  std::optional<OscillatorModel> oscillator;
  int truncation_levels = 64;
  double energy = 0.0;  // per-copy budget E
  double t = 1.0;       // two-step parameter; <= 0 optimizes
  // repeat the suite after pushing both states through a random local
  // channel while keeping the pre-channel RHS
  bool through_channel = false;
};

/// Seeded verification suite; deterministic per (config, master seed)
/// regardless of worker count.
std::vector<VerifyRecord> verify_suite(const VerifyConfig& config);

bool all_slack_ok(const std::vector<VerifyRecord>& records);

/// CSV with the fixed column set; floats as shortest round-trip decimals.
void write_csv(std::ostream& os, const std::vector<VerifyRecord>& records);

struct SweepPoint {
  double axis_value = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  double t_used = 0.0;
};

/// LHS/RHS ratio along a dimension grid using GHZ-vs-product witnesses
/// (finite bound for MI).
std::vector<SweepPoint> tightness_sweep_dimension(
    int n, const std::vector<int>& dim_grid, double eps);

/// LHS/RHS ratio along an energy grid using mixtures of the two Gibbs
/// witnesses against the two-step bound (MI, n = m = 2) at optimal t.
std::vector<SweepPoint> tightness_sweep_energy(
    const OscillatorModel& model, int levels,
    const std::vector<double>& energy_grid, double eps);

void write_sweep_csv(std::ostream& os, const std::string& axis,
                     const std::vector<SweepPoint>& points);

}  // namespace qbound
