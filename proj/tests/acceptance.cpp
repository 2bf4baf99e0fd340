// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria cover exact entropic values, formula cross-checks,
// inequality suites, bound verification at finite dimension and under
// energy constraints, Gibbs/envelope reproduction, tightness trends,
// channel preservation, truncation estimates and determinism.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qbound/bounds.hpp"
#include "qbound/entropic.hpp"
#include "qbound/sampling.hpp"
#include "qbound/tensor_ops.hpp"
#include "qbound/truncation.hpp"
#include "qbound/verify.hpp"
#include "qbound/witness.hpp"

using namespace qbound;

namespace {

constexpr std::uint64_t kMasterSeed = 20240817;

struct Outcome {
  bool ok = true;
  std::string detail;
};

double now_seconds() {
  using clock = std::chrono::steady_clock;
  static const auto start = clock::now();
  return std::chrono::duration<double>(clock::now() - start).count();
}

double uniform01(std::uint64_t word) {
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// ---------------------------------------------------------------- C1

Outcome criterion1() {
  const double t0 = now_seconds();
  Outcome out;
  double worst = 0.0;

  SystemLayout l5({{"A", 5}}, 1);
  worst = std::max(worst, std::abs(entropy(QuantumState::maximally_mixed(l5)) -
                                   std::log(5.0)));

  const QuantumState ghz = ghz_witness(3, 2);
  PartitionSpec mi3{{{"A1"}, {"A2"}, {"A3"}}, {}};
  worst = std::max(worst, std::abs(multipartite_mi(ghz, mi3) -
                                   3.0 * std::log(2.0)));

  PartitionSpec cond{{{"A1"}, {"A2"}}, {"A3"}};
  worst = std::max(worst,
                   std::abs(multipartite_qcmi(ghz, cond) - std::log(2.0)));

  const double elapsed = now_seconds() - t0;
  out.ok = worst < 1e-10 && elapsed < 1.0;
  out.detail = "max error " + fmt(worst) + ", " + fmt(elapsed) + " s";
  return out;
}

// ---------------------------------------------------------------- C2

struct SuiteResult {
  bool ok = true;
  std::string csv;
  double worst = 0.0;
  double elapsed = 0.0;
};

SuiteResult run_c2() {
  const double t0 = now_seconds();
  SuiteResult res;
  SystemLayout layout({{"A1", 2}, {"A2", 2}, {"A3", 2}, {"A4", 2}}, 3);
  PartitionSpec part{{{"A1"}, {"A2"}, {"A3"}}, {"A4"}};
  std::ostringstream csv;
  csv << "sample,chain,direct,diff\n";
  for (int i = 0; i < 500; ++i) {
    const QuantumState rho =
        sample_state(mix_seed(kMasterSeed, 1000 + i), layout);
    const double chain = multipartite_qcmi(rho, part);
    const double direct = multipartite_qcmi_direct(rho, part);
    const double diff = std::abs(chain - direct);
    res.worst = std::max(res.worst, diff);
    csv << i << ',' << fmt(chain) << ',' << fmt(direct) << ',' << fmt(diff)
        << '\n';
  }
  res.elapsed = now_seconds() - t0;
  res.ok = res.worst < 1e-8 && res.elapsed < 30.0;
  res.csv = csv.str();
  return res;
}

// ---------------------------------------------------------------- C3

SuiteResult run_c3() {
  const double t0 = now_seconds();
  SuiteResult res;
  double min_slack = 1e300;
  std::ostringstream csv;
  csv << "inequality,sample,slack\n";
  const int N = 1000;

  auto record = [&](const char* name, int i, double slack) {
    min_slack = std::min(min_slack, slack);
    csv << name << ',' << i << ',' << fmt(slack) << '\n';
  };

  {  // entropy of mixtures: concavity defect bounded by h2(p)
    SystemLayout l({{"A", 6}}, 1);
    for (int i = 0; i < N; ++i) {
      const std::uint64_t s = mix_seed(kMasterSeed, 2000 + i);
      const QuantumState a = sample_state(mix_seed(s, 0), l);
      const QuantumState b = sample_state(mix_seed(s, 1), l);
      const double p = 0.01 + 0.98 * uniform01(mix_seed(s, 2));
      Matrix mixmat = p * a.matrix() + (1.0 - p) * b.matrix();
      const QuantumState mix(l, mixmat);
      const double upper =
          p * entropy(a) + (1.0 - p) * entropy(b) + binary_entropy(p);
      record("mixing-entropy", i, upper - entropy(mix));
    }
  }

  {  // QCMI of mixtures: two-sided local-continuity corridor (n = 2)
    SystemLayout l({{"A1", 2}, {"A2", 2}, {"C", 2}}, 2);
    PartitionSpec part{{{"A1"}, {"A2"}}, {"C"}};
    for (int i = 0; i < N; ++i) {
      const std::uint64_t s = mix_seed(kMasterSeed, 3000 + i);
      const QuantumState a = sample_state(mix_seed(s, 0), l);
      const QuantumState b = sample_state(mix_seed(s, 1), l);
      const double p = 0.01 + 0.98 * uniform01(mix_seed(s, 2));
      Matrix mixmat = p * a.matrix() + (1.0 - p) * b.matrix();
      const QuantumState mix(l, mixmat);
      const double line = p * multipartite_qcmi(a, part) +
                          (1.0 - p) * multipartite_qcmi(b, part);
      const double value = multipartite_qcmi(mix, part);
      const double h = binary_entropy(p);
      record("mixing-qcmi-upper", i, (line + h) - value);
      record("mixing-qcmi-lower", i, value - (line - h));
    }
  }

  {  // tripartite QCMI upper bound by twice the smallest relevant entropy
    SystemLayout l({{"A", 2}, {"B", 2}, {"C", 2}}, 2);
    PartitionSpec part{{{"A"}, {"B"}}, {"C"}};
    for (int i = 0; i < N; ++i) {
      const QuantumState rho =
          sample_state(mix_seed(kMasterSeed, 4000 + i), l);
      const double value = multipartite_qcmi(rho, part);
      const double cap =
          2.0 * std::min({entropy(partial_trace(rho, {"A"})),
                          entropy(partial_trace(rho, {"B"})),
                          entropy(partial_trace(rho, {"A", "C"})),
                          entropy(partial_trace(rho, {"B", "C"}))});
      record("cmi-cap", i, cap - value);
    }
  }

  {  // multipartite MI and QCMI marginal-entropy caps
    SystemLayout l({{"A1", 2}, {"A2", 2}, {"A3", 2}, {"C", 2}}, 3);
    PartitionSpec mi_part{{{"A1"}, {"A2"}, {"A3"}}, {}};
    PartitionSpec cmi_part{{{"A1"}, {"A2"}, {"A3"}}, {"C"}};
    const int n = 3;
    for (int i = 0; i < N; ++i) {
      const QuantumState rho =
          sample_state(mix_seed(kMasterSeed, 5000 + i), l);
      double sum = 0.0;
      for (const auto& lab : {"A1", "A2", "A3"})
        sum += entropy(partial_trace(rho, {lab}));
      const double partial =
          sum - entropy(partial_trace(rho, {"A3"}));  // first n-1 parties
      record("mi-cap", i, sum - multipartite_mi(rho, mi_part));
      const double qcmi = multipartite_qcmi(rho, cmi_part);
      record("cmi-cap-partial", i, 2.0 * partial - qcmi);
      record("cmi-cap-scaled", i,
             2.0 * (n - 1.0) / n * sum - qcmi);
    }
  }

  {  // Delta functional capped by twice the unprimed marginal entropies
    SystemLayout l({{"A1", 2}, {"A2", 2}, {"B1", 2}, {"B2", 2}}, 2);
    const std::vector<std::pair<std::vector<std::string>,
                                std::vector<std::string>>>
        pairs = {{{"A1"}, {"B1"}}, {{"A2"}, {"B2"}}};
    for (int i = 0; i < N; ++i) {
      const QuantumState rho =
          sample_state(mix_seed(kMasterSeed, 6000 + i), l);
      const double cap = 2.0 * (entropy(partial_trace(rho, {"A1"})) +
                                entropy(partial_trace(rho, {"A2"})));
      record("delta-cap", i, cap - delta_ei(rho, pairs));
    }
  }

  res.elapsed = now_seconds() - t0;
  res.worst = min_slack;
  res.ok = min_slack >= kSlackFloor && res.elapsed < 300.0;
  res.csv = csv.str();
  return res;
}

// ---------------------------------------------------------------- C4/C9

std::vector<VerifyConfig> c4_configs(bool through_channel) {
  std::vector<VerifyConfig> configs;
  const std::vector<double> eps_grid = {0.01, 0.1, 0.5, 1.0};
  auto push = [&](Characteristic c, int n, int m, std::vector<int> dims) {
    for (double eps : eps_grid) {
      VerifyConfig config;
      config.characteristic = c;
      config.n = n;
      config.m = m;
      config.dims = dims;
      config.cond_dim = 2;
      config.eps = eps;
      config.samples = 1000;
      config.seed = mix_seed(kMasterSeed, 7000 + configs.size());
      config.threads = 8;
      config.through_channel = through_channel;
      configs.push_back(config);
    }
  };
  push(Characteristic::MI, 2, 2, {2, 2});
  push(Characteristic::MI, 3, 3, {2, 2, 2});
  push(Characteristic::QCMI, 2, 1, {2, 2});
  push(Characteristic::QCMI, 2, 2, {2, 2});
  push(Characteristic::EI, 2, 2, {2, 2});
  return configs;
}

SuiteResult run_c4() {
  const double t0 = now_seconds();
  SuiteResult res;
  std::ostringstream csv;
  double min_slack = 1e300;
  bool first = true;
  for (const auto& config : c4_configs(false)) {
    const auto records = verify_suite(config);
    for (const auto& r : records) min_slack = std::min(min_slack, r.slack);
    std::ostringstream os;
    write_csv(os, records);
    const std::string block = os.str();
    csv << (first ? block : block.substr(block.find('\n') + 1));
    first = false;
  }
  res.elapsed = now_seconds() - t0;
  res.worst = min_slack;
  res.ok = min_slack >= kSlackFloor && res.elapsed < 600.0;
  res.csv = csv.str();
  return res;
}

// ---------------------------------------------------------------- C5

std::vector<VerifyConfig> c5_configs() {
  std::vector<VerifyConfig> configs;
  int idx = 0;
  for (double eps : {0.02, 0.1}) {
    // variant, t pairs: sqrt; two-step at t = 0.5, 1, optimal
    const std::vector<std::pair<BoundVariant, double>> kinds = {
        {BoundVariant::Sqrt, 1.0},
        {BoundVariant::TwoStep, 0.5},
        {BoundVariant::TwoStep, 1.0},
        {BoundVariant::TwoStep, 0.0}};
    for (const auto& [variant, t] : kinds) {
      VerifyConfig config;
      config.characteristic = Characteristic::MI;
      config.variant = variant;
      config.n = 2;
      config.m = 1;
      config.dims = {64, 4};
      config.eps = eps;
      config.samples = 8;
      config.seed = mix_seed(kMasterSeed, 8000 + idx++);
      config.threads = 8;
      config.oscillator = OscillatorModel{{1.0}};
      config.truncation_levels = 64;
      config.energy = 2.0;
      config.t = t;
      configs.push_back(config);
    }
  }
  return configs;
}

SuiteResult run_c5() {
  const double t0 = now_seconds();
  SuiteResult res;
  std::ostringstream csv;
  double min_slack = 1e300;
  bool first = true;
  for (const auto& config : c5_configs()) {
    const auto records = verify_suite(config);
    for (const auto& r : records) min_slack = std::min(min_slack, r.slack);
    std::ostringstream os;
    write_csv(os, records);
    const std::string block = os.str();
    csv << (first ? block : block.substr(block.find('\n') + 1));
    first = false;
  }
  res.elapsed = now_seconds() - t0;
  res.worst = min_slack;
  res.ok = min_slack >= kSlackFloor;
  res.csv = csv.str();
  return res;
}

// ---------------------------------------------------------------- C6

Outcome criterion6() {
  Outcome out;
  OscillatorModel osc{{1.0}};
  const SpectrumModel spec = osc.truncate(2048);
  const GibbsPoint p = solve_gibbs(spec, 1.5);
  const double lambda_err = std::abs(p.lambda - std::log(2.0));
  const double entropy_err = std::abs(p.entropy - 2.0 * std::log(2.0));

  double worst_gap = 1e300;
  const double lo = std::log(0.01), hi = std::log(50.0);
  for (int i = 0; i < 50; ++i) {
    const double e = std::exp(lo + (hi - lo) * i / 49.0);
    worst_gap = std::min(worst_gap,
                         oscillator_f(osc, e, true) - f_bar(spec, e));
  }

  out.ok = lambda_err < 1e-8 && entropy_err < 1e-8 && worst_gap >= -1e-9;
  out.detail = "lambda err " + fmt(lambda_err) + ", entropy err " +
               fmt(entropy_err) + ", min envelope gap " + fmt(worst_gap);
  return out;
}

// ---------------------------------------------------------------- C7

Outcome criterion7() {
  Outcome out;
  OscillatorModel osc{{1.0}};
  const SpectrumModel spec = osc.truncate(512);

  bool dominates = true, nondecreasing = true, ratio_ok = true;
  double prev_f = -1e300, prev_ratio = 1e300;
  const double lo = std::log(0.01), hi = std::log(15.0);
  for (int i = 0; i < 100; ++i) {
    const double e = std::exp(lo + (hi - lo) * i / 99.0);
    const double f = f_hat_star(spec, e);
    if (f < f_bar(spec, e) - 1e-9) dominates = false;
    if (f < prev_f - 1e-9) nondecreasing = false;
    if (f / std::sqrt(e) > prev_ratio + 1e-9) ratio_ok = false;
    prev_f = f;
    prev_ratio = f / std::sqrt(e);
  }

  const double bd = bd_ratio(spec, 400.0);
  const bool bd_ok = std::abs(bd - 2.0) < 0.05 * 2.0;

  out.ok = dominates && nondecreasing && ratio_ok && bd_ok;
  out.detail = std::string("dominates=") + (dominates ? "y" : "n") +
               " nondecreasing=" + (nondecreasing ? "y" : "n") +
               " sqrt-ratio=" + (ratio_ok ? "y" : "n") + " bd=" + fmt(bd);
  return out;
}

// ---------------------------------------------------------------- C8

Outcome criterion8() {
  Outcome out;
  const auto dim_points =
      tightness_sweep_dimension(2, {2, 4, 8, 16, 32, 64}, 1.0);
  bool increasing = true;
  for (size_t i = 1; i < dim_points.size(); ++i)
    if (dim_points[i].ratio <= dim_points[i - 1].ratio) increasing = false;
  const bool reaches = dim_points.back().ratio >= 0.74;

  const auto energy_points =
      tightness_sweep_energy(OscillatorModel{{1.0}}, 512,
                             {1.0, 2.0, 4.0, 8.0}, 0.5);
  bool energy_increasing = true;
  for (size_t i = 1; i < energy_points.size(); ++i)
    if (energy_points[i].ratio <= energy_points[i - 1].ratio)
      energy_increasing = false;

  out.ok = increasing && reaches && energy_increasing;
  out.detail = "d=64 ratio " + fmt(dim_points.back().ratio) +
               ", energy ratios " + fmt(energy_points.front().ratio) + " -> " +
               fmt(energy_points.back().ratio);
  return out;
}

// ---------------------------------------------------------------- C9

Outcome criterion9(const SuiteResult& base) {
  Outcome out;
  double min_slack = 1e300;
  bool rhs_match = true;
  const auto base_configs = c4_configs(false);
  const auto chan_configs = c4_configs(true);
  for (size_t c = 0; c < chan_configs.size(); ++c) {
    if (chan_configs[c].characteristic != Characteristic::MI) continue;
    const auto base_records = verify_suite(base_configs[c]);
    const auto records = verify_suite(chan_configs[c]);
    for (size_t i = 0; i < records.size(); ++i) {
      min_slack = std::min(min_slack, records[i].slack);
      if (records[i].rhs != base_records[i].rhs) rhs_match = false;
    }
  }
  (void)base;
  out.ok = min_slack >= kSlackFloor && rhs_match;
  out.detail = "min slack " + fmt(min_slack) +
               std::string(rhs_match ? ", rhs unchanged" : ", rhs drifted");
  return out;
}

// ---------------------------------------------------------------- C10

Outcome criterion10() {
  Outcome out;
  OscillatorModel osc{{1.0}};
  const SpectrumModel spec = osc.truncate(64);
  const double e0 = spec.ground_energy();
  const double E = 2.0;
  const double ebar = E - e0;
  SystemLayout layout({{"A1", 64}, {"A2", 4}}, 1);
  const int m = 1;

  double min_slack = 1e300;
  int events = 0;

  auto check_event = [&](const QuantumState& rho, int cutoff) {
    const double ebar_d = spec.levels()[cutoff] - e0;
    if (ebar_d <= m * ebar) return;  // outside the regime of the estimates
    TruncationSpec tspec{{cutoff}, 1e-12};
    const auto result = truncate_state(rho, tspec);
    ++events;

    // retained-mass estimate
    min_slack =
        std::min(min_slack, result.retained_mass - (1.0 - m * ebar / ebar_d));
    // energy of the truncated state stays within the budget
    min_slack = std::min(
        min_slack, m * E - constrained_energy(result.state, spec));
    // gentle-measurement estimate, both forms
    const double tn = 2.0 * trace_distance(rho, result.state);
    min_slack = std::min(min_slack,
                         2.0 * std::sqrt(1.0 - result.retained_mass) - tn);
    min_slack =
        std::min(min_slack, 2.0 * std::sqrt(m * ebar / ebar_d) - tn);
    // marginal tail mass obeys the energy Markov estimate
    const QuantumState marg = partial_trace(rho, {"A1"});
    double tail = 0.0;
    for (int i = cutoff; i < 64; ++i) tail += marg.matrix()(i, i).real();
    double marg_energy = 0.0;
    for (int i = 0; i < 64; ++i)
      marg_energy += spec.levels()[i] * marg.matrix()(i, i).real();
    min_slack =
        std::min(min_slack, tail_fraction(spec, marg_energy, cutoff) - tail);
  };

  for (int i = 0; i < 10; ++i) {
    const QuantumState rho = energy_constrained_state(
        mix_seed(kMasterSeed, 9000 + i), layout, spec, E);
    for (int cutoff : {16, 32, 48}) check_event(rho, cutoff);
  }

  // witness-based events from the energy-axis tightness setup
  auto [product, correlated] = gibbs_witnesses(2, spec, E, 32);
  SystemLayout wlayout({{"A1", 32}, {"A2", 32}}, 1);
  const QuantumState wprod(wlayout, product.matrix());
  const QuantumState wcorr(wlayout, correlated.matrix());
  for (int cutoff : {8, 16, 24}) {
    const double ebar_d = spec.levels()[cutoff] - e0;
    if (ebar_d <= m * ebar) continue;
    TruncationSpec tspec{{cutoff}, 1e-12};
    for (const QuantumState* w : {&wprod, &wcorr}) {
      const auto result = truncate_state(*w, tspec);
      ++events;
      min_slack = std::min(
          min_slack, result.retained_mass - (1.0 - m * ebar / ebar_d));
      const double tn = 2.0 * trace_distance(*w, result.state);
      min_slack =
          std::min(min_slack, 2.0 * std::sqrt(m * ebar / ebar_d) - tn);
    }
  }

  out.ok = events > 0 && min_slack >= kSlackFloor;
  out.detail = std::to_string(events) + " events, min slack " +
               fmt(min_slack);
  return out;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int index, const char* name, const Outcome& out) {
    std::printf("criterion %d: %s - %s (%s)\n", index,
                out.ok ? "PASS" : "FAIL", name, out.detail.c_str());
    if (!out.ok) ++failures;
  };

  auto guarded = [&](int index, const char* name,
                     const std::function<Outcome()>& fn) {
    Outcome out;
    try {
      out = fn();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    report(index, name, out);
    return out;
  };

  guarded(1, "entropic exactness", criterion1);

  SuiteResult c2, c3, c4, c5;
  guarded(2, "chain vs direct QCMI", [&]() {
    c2 = run_c2();
    return Outcome{c2.ok, "max diff " + fmt(c2.worst) + ", " +
                              fmt(c2.elapsed) + " s"};
  });
  guarded(3, "inequality suites", [&]() {
    c3 = run_c3();
    return Outcome{c3.ok, "min slack " + fmt(c3.worst) + ", " +
                              fmt(c3.elapsed) + " s"};
  });
  guarded(4, "finite-dimension bound verification", [&]() {
    c4 = run_c4();
    return Outcome{c4.ok, "min slack " + fmt(c4.worst) + ", " +
                              fmt(c4.elapsed) + " s"};
  });
  guarded(5, "energy-constrained bound verification", [&]() {
    c5 = run_c5();
    return Outcome{c5.ok, "min slack " + fmt(c5.worst) + ", " +
                              fmt(c5.elapsed) + " s"};
  });
  guarded(6, "Gibbs reproduction and envelope dominance", criterion6);
  guarded(7, "minimal envelope properties", criterion7);
  guarded(8, "tightness trends", criterion8);
  guarded(9, "local-channel preservation", [&]() { return criterion9(c4); });
  guarded(10, "truncation estimates", criterion10);
  guarded(11, "determinism", [&]() {
    Outcome out;
    const SuiteResult r2 = run_c2();
    const SuiteResult r3 = run_c3();
    const SuiteResult r4 = run_c4();
    const SuiteResult r5 = run_c5();
    const bool same = r2.csv == c2.csv && r3.csv == c3.csv &&
                      r4.csv == c4.csv && r5.csv == c5.csv;
    out.ok = same;
    out.detail = same ? "criteria 2-5 reruns byte-identical"
                      : "rerun output differs";
    return out;
  });

  return failures == 0 ? 0 : 1;
}
