// qbound: evaluate entropy continuity bounds, solve Gibbs points, run
// verification suites and tightness sweeps.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qbound/bounds.hpp"
#include "qbound/gibbs.hpp"
#include "qbound/spectrum.hpp"
#include "qbound/verify.hpp"

namespace {

using namespace qbound;

/// Numbers are printed with 9 digits after the decimal point so identical
/// inputs always serialize identically.
std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9f", v);
  return buf;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

struct SpectrumArgs {
  std::string path;
  int levels = 512;

  SpectrumModel load() const {
    if (path.empty())
      throw CLI::ValidationError("--spectrum", "spectrum file required");
    return SpectrumModel::load(path, levels);
  }
  std::optional<OscillatorModel> oscillator() const {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    const auto j = nlohmann::json::parse(ss.str());
    if (!j.contains("oscillator")) return std::nullopt;
    return OscillatorModel{
        j.at("oscillator").at("frequencies").get<std::vector<double>>()};
  }
};

int cmd_gibbs(const SpectrumArgs& sa, double energy, const std::string& out) {
  const SpectrumModel spec = sa.load();
  const GibbsPoint point = solve_gibbs(spec, energy);
  std::ofstream file;
  std::ostream& os = open_out(file, out);
  os << "{\"lambda\":" << num(point.lambda)
     << ",\"entropy\":" << num(point.entropy) << "}\n";
  return 0;
}

int cmd_fhat(const SpectrumArgs& sa, double energy, const std::string& out) {
  const SpectrumModel spec = sa.load();
  const double shifted = energy;  // energy measured from the ground level
  const double fbar = f_bar(spec, shifted);
  const double fhat = f_hat_star(spec, shifted);
  std::ofstream file;
  std::ostream& os = open_out(file, out);
  os << "{\"fbar\":" << num(fbar) << ",\"fhat\":" << num(fhat) << "}\n";
  return 0;
}

struct BoundArgs {
  std::string characteristic = "mi";
  std::string variant = "finite";
  int n = 2;
  int m = -1;  // default n
  std::string dims;
  double eps = 0.1;
  double energy = 0.0;
  double t = 1.0;
  bool opt_t = false;
  SpectrumArgs spectrum;
};

BoundRequest make_request(const BoundArgs& ba) {
  BoundRequest req;
  req.characteristic = characteristic_from_string(ba.characteristic);
  req.variant = variant_from_string(ba.variant);
  req.n = ba.n;
  req.m = ba.m < 0 ? ba.n : ba.m;
  if (!ba.dims.empty()) req.dims = parse_int_list(ba.dims);
  req.eps = ba.eps;
  req.t = ba.opt_t ? 0.0 : ba.t;
  if (req.variant != BoundVariant::Finite) {
    const auto osc = ba.spectrum.oscillator();
    if (osc) {
      if (req.variant == BoundVariant::Sqrt)
        req.fhat = EnergyFunction(EnergyFunctionKind::OscillatorBar, *osc);
      else
        req.fhat = EnergyFunction::default_envelope(*osc);
      req.energy_bar = ba.energy - osc->ground_energy();
    } else {
      const SpectrumModel spec = ba.spectrum.load();
      if (req.variant == BoundVariant::Sqrt)
        req.fhat = EnergyFunction(EnergyFunctionKind::GibbsBar, spec);
      else
        req.fhat = EnergyFunction::default_envelope(spec);
      req.energy_bar = ba.energy - spec.ground_energy();
    }
    if (req.energy_bar < 0.0)
      throw CLI::ValidationError("--energy", "below the ground energy");
  }
  return req;
}

int cmd_bound(const BoundArgs& ba, const std::string& out) {
  const BoundRequest req = make_request(ba);
  const BoundValue value = bound_for(req);
  std::ofstream file;
  std::ostream& os = open_out(file, out);
  os << "{\"rhs\":" << num(value.total)
     << ",\"effective_eps\":" << num(value.effective_eps);
  if (req.variant == BoundVariant::TwoStep ||
      req.variant == BoundVariant::Oscillator)
    os << ",\"t\":" << num(value.t_used);
  os << ",\"terms\":{";
  for (size_t i = 0; i < value.terms.size(); ++i) {
    if (i) os << ',';
    os << '"' << value.terms[i].first << "\":" << num(value.terms[i].second);
  }
  os << "}}\n";
  return 0;
}

struct VerifyArgs {
  BoundArgs bound;
  int cond_dim = 2;
  int samples = 100;
  std::uint64_t seed = 1;
  int threads = 1;
  bool channel = false;
};

int cmd_verify(const VerifyArgs& va, const std::string& out) {
  VerifyConfig config;
  config.characteristic = characteristic_from_string(va.bound.characteristic);
  config.variant = variant_from_string(va.bound.variant);
  config.n = va.bound.n;
  config.m = va.bound.m < 0 ? va.bound.n : va.bound.m;
  config.dims = parse_int_list(va.bound.dims);
  config.cond_dim = va.cond_dim;
  config.eps = va.bound.eps;
  config.samples = va.samples;
  config.seed = va.seed;
  config.threads = va.threads;
  config.energy = va.bound.energy;
  config.t = va.bound.opt_t ? 0.0 : va.bound.t;
  config.through_channel = va.channel;
  if (config.variant != BoundVariant::Finite) {
    const auto osc = va.bound.spectrum.oscillator();
    if (!osc)
      throw CLI::ValidationError("--spectrum",
                                 "energy variants need an oscillator model");
    config.oscillator = osc;
    config.truncation_levels = va.bound.spectrum.levels;
  }

  const auto records = verify_suite(config);
  std::ofstream file;
  std::ostream& os = open_out(file, out);
  write_csv(os, records);
  return all_slack_ok(records) ? 0 : 1;
}

struct TightnessArgs {
  std::string axis = "dim";
  int n = 2;
  std::string dims = "2,4,8,16,32,64";
  std::string energies = "1,2,4,8";
  double eps = 1.0;
  SpectrumArgs spectrum;
};

int cmd_tightness(const TightnessArgs& ta, const std::string& out) {
  std::ofstream file;
  std::ostream& os = open_out(file, out);
  if (ta.axis == "dim") {
    const auto points =
        tightness_sweep_dimension(ta.n, parse_int_list(ta.dims), ta.eps);
    write_sweep_csv(os, "dim", points);
    return 0;
  }
  if (ta.axis == "energy") {
    const auto osc = ta.spectrum.oscillator();
    if (!osc)
      throw CLI::ValidationError("--spectrum",
                                 "energy sweep needs an oscillator model");
    const auto points = tightness_sweep_energy(
        *osc, ta.spectrum.levels, parse_double_list(ta.energies), ta.eps);
    write_sweep_csv(os, "energy", points);
    return 0;
  }
  throw CLI::ValidationError("--axis", "expected 'dim' or 'energy'");
}

void add_spectrum_flags(CLI::App* app, SpectrumArgs& sa, bool required) {
  auto* opt = app->add_option("--spectrum", sa.path, "spectrum JSON file");
  if (required) opt->required();
  app->add_option("--levels", sa.levels, "oscillator truncation levels");
}

void add_bound_flags(CLI::App* app, BoundArgs& ba) {
  app->add_option("--char", ba.characteristic,
                  "characteristic: mi|qcmi|sq|csq|ei");
  app->add_option("--variant", ba.variant,
                  "bound variant: finite|sqrt|two-step|oscillator");
  app->add_option("--n", ba.n, "party count");
  app->add_option("--m", ba.m, "constrained marginal count (default n)");
  app->add_option("--dims", ba.dims, "comma-separated party dimensions");
  app->add_option("--eps", ba.eps, "trace-distance bound");
  app->add_option("--energy", ba.energy, "per-party energy budget");
  app->add_option("--t", ba.t, "two-step parameter in (0, 1/eps)");
  app->add_flag("--opt-t", ba.opt_t, "optimize the two-step parameter");
  add_spectrum_flags(app, ba.spectrum, false);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entropy continuity bound toolkit"};
  app.require_subcommand(1);

  std::string out;
  app.add_option("--out", out, "output file (default stdout)");

  auto* gibbs = app.add_subcommand("gibbs", "solve a Gibbs point");
  SpectrumArgs gibbs_spec;
  double gibbs_energy = 1.0;
  add_spectrum_flags(gibbs, gibbs_spec, true);
  gibbs->add_option("--energy", gibbs_energy, "mean energy")->required();

  auto* fhat = app.add_subcommand("fhat", "evaluate Fbar and the envelope F*");
  SpectrumArgs fhat_spec;
  double fhat_energy = 1.0;
  add_spectrum_flags(fhat, fhat_spec, true);
  fhat->add_option("--energy", fhat_energy, "energy above the ground level")
      ->required();

  auto* bound = app.add_subcommand("bound", "evaluate a continuity bound");
  BoundArgs bound_args;
  add_bound_flags(bound, bound_args);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  VerifyArgs verify_args;
  add_bound_flags(verify, verify_args.bound);
  verify->add_option("--cond-dim", verify_args.cond_dim,
                     "conditioning dimension (qcmi)");
  verify->add_option("--samples", verify_args.samples, "sample count");
  verify->add_option("--seed", verify_args.seed, "master seed");
  verify->add_option("--threads", verify_args.threads, "worker threads");
  verify->add_flag("--channel", verify_args.channel,
                   "push both states through a random local channel");

  auto* tightness = app.add_subcommand("tightness", "bound tightness sweep");
  TightnessArgs tight_args;
  tightness->add_option("--axis", tight_args.axis, "sweep axis: dim|energy");
  tightness->add_option("--n", tight_args.n, "party count (dim axis)");
  tightness->add_option("--dims", tight_args.dims, "dimension grid");
  tightness->add_option("--energies", tight_args.energies, "energy grid");
  tightness->add_option("--eps", tight_args.eps, "trace-distance bound");
  add_spectrum_flags(tightness, tight_args.spectrum, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gibbs->parsed()) return cmd_gibbs(gibbs_spec, gibbs_energy, out);
    if (fhat->parsed()) return cmd_fhat(fhat_spec, fhat_energy, out);
    if (bound->parsed()) return cmd_bound(bound_args, out);
    if (verify->parsed()) return cmd_verify(verify_args, out);
    if (tightness->parsed()) return cmd_tightness(tight_args, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
