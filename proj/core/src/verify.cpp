#include "qbound/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qbound/entropic.hpp"
#include "qbound/tensor_ops.hpp"
#include "qbound/witness.hpp"

namespace qbound {

namespace {

std::string join_dims(const std::vector<int>& dims) {
  std::string out;
  for (size_t i = 0; i < dims.size(); ++i) {
    if (i) out += 'x';
    out += std::to_string(dims[i]);
  }
  return out;
}

std::string fmt_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

Vector haar_vector(std::mt19937_64& rng, long dim) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(dim);
  for (long i = 0; i < dim; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v[i] = std::complex<double>(re, im);
  }
  return v / v.norm();
}

/// Pure-state pair at trace distance ~0.95 eps via the great-circle arc;
/// for pure states the trace distance is sin of the Fubini-Study angle.
std::pair<QuantumState, QuantumState> pure_pair(std::uint64_t seed,
                                                const SystemLayout& layout,
                                                double eps) {
  std::mt19937_64 rng(seed);
  const long dim = layout.total_dim();
  const Vector psi = haar_vector(rng, dim);
  if (eps == 0.0)
    return {QuantumState::pure(layout, psi), QuantumState::pure(layout, psi)};
  Vector raw = haar_vector(rng, dim);
  Vector perp = raw - (psi.adjoint() * raw)(0, 0) * psi;
  const double norm = perp.norm();
  if (norm < 1e-12) throw std::runtime_error("pure_pair: degenerate draw");
  perp /= norm;
  const double theta = std::asin(std::min(1.0, 0.95 * eps));
  const Vector phi = std::cos(theta) * psi + std::sin(theta) * perp;
  return {QuantumState::pure(layout, psi), QuantumState::pure(layout, phi)};
}

struct SuiteContext {
  VerifyConfig config;
  SystemLayout layout;
  PartitionSpec partition;  // MI/QCMI
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>
      delta_pairs;  // EI
  ClassDescriptor descriptor{FunctionClass::LHat, 0, 0, 0, 0};
  long constrained_dim = 1;
  std::optional<SpectrumModel> factor_spectrum;
  std::optional<EnergyFunction> fhat;
  double energy_bar = 0.0;
  double rhs = 0.0;  // sample-independent right hand side
  double t_used = 0.0;
  std::string dims_string;
};

double lhs_value(const SuiteContext& ctx, const QuantumState& rho) {
  switch (ctx.config.characteristic) {
    case Characteristic::MI:
    case Characteristic::SQ:
    case Characteristic::CSQ:
      // on pure states 2 E_sq = 2 E^c_sq = I(A_1:...:A_n)
      return multipartite_mi(rho, ctx.partition);
    case Characteristic::QCMI:
      return multipartite_qcmi(rho, ctx.partition);
    case Characteristic::EI:
      return delta_ei(rho, ctx.delta_pairs);
  }
  throw std::logic_error("verify: unreachable");
}

SuiteContext make_context(const VerifyConfig& config) {
  SuiteContext ctx;
  ctx.config = config;
  const int n = config.n;
  const int m = config.m;
  if (n < 2) throw std::invalid_argument("verify: n < 2");
  if (static_cast<int>(config.dims.size()) != n)
    throw std::invalid_argument("verify: need one dim per party");
  if (m != n && m != n - 1)
    throw std::invalid_argument("verify: m must be n or n-1");

  const bool is_sq = config.characteristic == Characteristic::SQ ||
                     config.characteristic == Characteristic::CSQ;
  const bool is_ei = config.characteristic == Characteristic::EI;
  if ((is_sq || is_ei) && config.variant != BoundVariant::Finite)
    throw std::invalid_argument(
        "verify: sq/csq/ei suites support the finite variant only");

  std::vector<Factor> factors;
  for (int k = 0; k < n; ++k)
    factors.push_back({"A" + std::to_string(k + 1), config.dims[k]});
  if (config.characteristic == Characteristic::QCMI) {
    if (config.cond_dim < 2)
      throw std::invalid_argument("verify: qcmi needs cond_dim >= 2");
    factors.push_back({"C", config.cond_dim});
  }
  if (is_ei) {
    for (int k = 0; k < n; ++k)
      factors.push_back({"B" + std::to_string(k + 1), config.dims[k]});
  }
  ctx.layout = SystemLayout(std::move(factors), m);

  if (config.characteristic == Characteristic::QCMI) {
    for (int k = 0; k < n; ++k)
      ctx.partition.groups.push_back({"A" + std::to_string(k + 1)});
    ctx.partition.conditioning = {"C"};
  } else if (is_ei) {
    for (int k = 0; k < n; ++k)
      ctx.delta_pairs.push_back({{"A" + std::to_string(k + 1)},
                                 {"B" + std::to_string(k + 1)}});
  } else {
    for (int k = 0; k < n; ++k)
      ctx.partition.groups.push_back({"A" + std::to_string(k + 1)});
  }

  // The EI suite evaluates the Delta functional itself, which is exactly
  // computable and lies in the L-hat class with the same constants as the
  // finite-dimensional bound on 2 E_I.
  ctx.descriptor = is_ei
                       ? ClassDescriptor{FunctionClass::LHat, 2.0,
                                         static_cast<double>(n) + 1.0, n, n}
                       : descriptor_for(config.characteristic, n, m);

  ctx.constrained_dim = 1;
  for (int k = 0; k < m; ++k) ctx.constrained_dim *= config.dims[k];
  ctx.dims_string = join_dims(ctx.layout.dims());

  if (config.variant == BoundVariant::Finite) {
    ctx.rhs = cb_finite(ctx.descriptor, config.eps, ctx.constrained_dim).total;
    return ctx;
  }

  // Energy-constrained variants.
  if (!config.oscillator)
    throw std::invalid_argument("verify: energy variant needs a spectrum");
  const OscillatorModel& osc = *config.oscillator;
  ctx.factor_spectrum = osc.truncate(
      std::max(config.truncation_levels,
               *std::max_element(config.dims.begin(), config.dims.end())));
  const double e0 = osc.ground_energy();
  if (config.energy <= e0)
    throw std::invalid_argument("verify: energy at or below ground energy");
  ctx.energy_bar = config.energy - e0;

  BoundSpec spec;
  spec.descriptor = ctx.descriptor;
  spec.eps = config.eps;
  spec.energy_bar = ctx.energy_bar;
  spec.t = config.t;
  switch (config.variant) {
    case BoundVariant::Sqrt:
      spec.fhat = EnergyFunction(EnergyFunctionKind::OscillatorBar, osc);
      ctx.rhs = cb_energy_sqrt(spec).total;
      break;
    case BoundVariant::TwoStep: {
      spec.fhat = EnergyFunction::default_envelope(osc);
      if (config.t <= 0.0) {
        auto [t_opt, value] = optimize_t(spec);
        ctx.rhs = value.total;
        ctx.t_used = t_opt;
      } else {
        ctx.rhs = vb_two_step(spec).total;
        ctx.t_used = config.t;
      }
      break;
    }
    case BoundVariant::Oscillator: {
      spec.fhat = EnergyFunction(EnergyFunctionKind::OscillatorBar, osc);
      if (config.t <= 0.0) {
        auto [t_opt, value] = optimize_t(spec);
        (void)value;
        spec.t = t_opt;
      }
      ctx.rhs = cb_oscillator(spec).total;
      ctx.t_used = spec.t;
      break;
    }
    default:
      throw std::logic_error("verify: unreachable variant");
  }
  ctx.fhat = spec.fhat;
  return ctx;
}

VerifyRecord run_sample(const SuiteContext& ctx, std::uint64_t sample_seed) {
  const VerifyConfig& config = ctx.config;
  QuantumState rho = QuantumState::maximally_mixed(ctx.layout);
  QuantumState sigma = rho;

  const bool is_sq = config.characteristic == Characteristic::SQ ||
                     config.characteristic == Characteristic::CSQ;
  if (config.variant == BoundVariant::Finite) {
    auto pair = is_sq ? pure_pair(sample_seed, ctx.layout, config.eps)
                      : pair_at_distance(sample_seed, ctx.layout, config.eps);
    rho = std::move(pair.first);
    sigma = std::move(pair.second);
  } else {
    // two independent draws under the energy budget, then interpolation
    // (which preserves the budget) to the target distance
    rho = energy_constrained_state(mix_seed(sample_seed, 0), ctx.layout,
                                   *ctx.factor_spectrum, config.energy);
    QuantumState other =
        energy_constrained_state(mix_seed(sample_seed, 1), ctx.layout,
                                 *ctx.factor_spectrum, config.energy);
    const double raw = trace_distance(rho, other);
    const double target = 0.95 * config.eps;
    const double s = raw > target ? target / raw : 1.0;
    Matrix mixed = (1.0 - s) * rho.matrix() + s * other.matrix();
    sigma = QuantumState(ctx.layout, mixed);
  }

  VerifyRecord rec;
  rec.characteristic = to_string(config.characteristic);
  rec.variant = to_string(config.variant);
  rec.n = config.n;
  rec.m = config.m;
  rec.dims = ctx.dims_string;
  rec.eps_target = config.eps;
  rec.eps_measured = trace_distance(rho, sigma);
  rec.energy = config.variant == BoundVariant::Finite ? 0.0 : config.energy;
  rec.t = ctx.t_used;
  rec.seed = sample_seed;

  if (config.through_channel) {
    LocalChannel channel =
        random_local_channel(mix_seed(sample_seed, 0x10c4), ctx.layout);
    rho = apply_local_channel(channel, rho);
    sigma = apply_local_channel(channel, sigma);
  }

  rec.lhs = std::abs(lhs_value(ctx, rho) - lhs_value(ctx, sigma));
  rec.rhs = ctx.rhs;
  rec.slack = rec.rhs - rec.lhs;
  return rec;
}

}  // namespace

std::vector<VerifyRecord> verify_suite(const VerifyConfig& config) {
  if (config.samples < 1) throw std::invalid_argument("verify: samples < 1");
  const SuiteContext ctx = make_context(config);

  // Warm the shared energy-function cache before the parallel section so
  // every worker sees identical memoized values.
  std::vector<VerifyRecord> records(config.samples);
  const int workers =
      std::max(1, std::min(config.threads,
                           static_cast<int>(
                               std::thread::hardware_concurrency() > 0
                                   ? std::thread::hardware_concurrency()
                                   : 1)));
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::string error_message;
  std::mutex error_mutex;

  auto work = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= config.samples || failed.load()) break;
      try {
        records[i] = run_sample(ctx, mix_seed(config.seed, i));
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        error_message = e.what();
        failed.store(true);
        break;
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failed.load()) throw std::runtime_error("verify: " + error_message);
  return records;
}

bool all_slack_ok(const std::vector<VerifyRecord>& records) {
  return std::all_of(records.begin(), records.end(),
                     [](const VerifyRecord& r) { return r.slack >= kSlackFloor; });
}

void write_csv(std::ostream& os, const std::vector<VerifyRecord>& records) {
  os << "characteristic,variant,n,m,dims,eps_target,eps_measured,energy,t,"
        "lhs,rhs,slack,seed\n";
  for (const auto& r : records) {
    os << r.characteristic << ',' << r.variant << ',' << r.n << ',' << r.m
       << ',' << r.dims << ',' << fmt_double(r.eps_target) << ','
       << fmt_double(r.eps_measured) << ',' << fmt_double(r.energy) << ','
       << fmt_double(r.t) << ',' << fmt_double(r.lhs) << ','
       << fmt_double(r.rhs) << ',' << fmt_double(r.slack) << ',' << r.seed
       << '\n';
  }
}

std::vector<SweepPoint> tightness_sweep_dimension(
    int n, const std::vector<int>& dim_grid, double eps) {
  std::vector<SweepPoint> points;
  const ClassDescriptor desc = descriptor_for(Characteristic::MI, n, n);
  for (int d : dim_grid) {
    // GHZ witness vs. the product of its marginals: the mutual-information
    // gap is n H(I/d) since the witness is pure with maximally mixed
    // marginals and the product state is uncorrelated.
    Eigen::VectorXd uniform = Eigen::VectorXd::Constant(d, 1.0 / d);
    const double lhs = n * entropy_of_spectrum(uniform);
    long dim = 1;
    for (int k = 0; k < n; ++k) dim *= d;
    const double rhs = cb_finite(desc, eps, dim).total;
    points.push_back({static_cast<double>(d), lhs, rhs, lhs / rhs, 0.0});
  }
  return points;
}

std::vector<SweepPoint> tightness_sweep_energy(
    const OscillatorModel& model, int levels,
    const std::vector<double>& energy_grid, double eps) {
  const SpectrumModel spec = model.truncate(levels);
  const ClassDescriptor desc = descriptor_for(Characteristic::MI, 2, 2);
  const EnergyFunction envelope = EnergyFunction::default_envelope(model);
  std::vector<SweepPoint> points;
  for (double energy : energy_grid) {
    const GibbsPoint point = solve_gibbs(spec, energy);
    // move from the product witness toward the correlated pure witness
    const double unit = GibbsMixture::distance(point, 0.0, 1.0);
    const double s = std::min(1.0, eps / unit);
    const double lhs = GibbsMixture{point, s}.mutual_information();

    BoundSpec bspec;
    bspec.descriptor = desc;
    bspec.eps = eps;
    bspec.energy_bar = energy - spec.ground_energy();
    bspec.t = 0.0;
    bspec.fhat = envelope;
    auto [t_opt, value] = optimize_t(bspec);
    points.push_back({energy, lhs, value.total, lhs / value.total, t_opt});
  }
  return points;
}

void write_sweep_csv(std::ostream& os, const std::string& axis,
                     const std::vector<SweepPoint>& points) {
  os << axis << ",lhs,rhs,ratio,t\n";
  for (const auto& p : points) {
    os << fmt_double(p.axis_value) << ',' << fmt_double(p.lhs) << ','
       << fmt_double(p.rhs) << ',' << fmt_double(p.ratio) << ','
       << fmt_double(p.t_used) << '\n';
  }
}

}  // namespace qbound
