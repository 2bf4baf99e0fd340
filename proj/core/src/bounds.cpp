#include "qbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qbound/entropic.hpp"

namespace qbound {

bool is_n_class(FunctionClass cls) { return cls != FunctionClass::LHat; }

std::string to_string(Characteristic c) {
  switch (c) {
    case Characteristic::MI: return "mi";
    case Characteristic::QCMI: return "qcmi";
    case Characteristic::SQ: return "sq";
    case Characteristic::CSQ: return "csq";
    case Characteristic::EI: return "ei";
  }
  return "?";
}

std::string to_string(BoundVariant v) {
  switch (v) {
    case BoundVariant::Finite: return "finite";
    case BoundVariant::Sqrt: return "sqrt";
    case BoundVariant::TwoStep: return "two-step";
    case BoundVariant::Oscillator: return "oscillator";
  }
  return "?";
}

Characteristic characteristic_from_string(const std::string& s) {
  if (s == "mi") return Characteristic::MI;
  if (s == "qcmi") return Characteristic::QCMI;
  if (s == "sq") return Characteristic::SQ;
  if (s == "csq") return Characteristic::CSQ;
  if (s == "ei") return Characteristic::EI;
  throw std::invalid_argument("unknown characteristic: " + s);
}

BoundVariant variant_from_string(const std::string& s) {
  if (s == "finite") return BoundVariant::Finite;
  if (s == "sqrt") return BoundVariant::Sqrt;
  if (s == "two-step") return BoundVariant::TwoStep;
  if (s == "oscillator") return BoundVariant::Oscillator;
  throw std::invalid_argument("unknown variant: " + s);
}

ClassDescriptor descriptor_for(Characteristic c, int n, int m) {
  if (n < 2) throw std::invalid_argument("catalog: n < 2");
  if (m != n && m != n - 1)
    throw std::invalid_argument("catalog: m must be n or n-1");
  const double cm2 = m == n ? 2.0 - 2.0 / n : 2.0;  // 2 C_m, C_m = (n-1)/m
  switch (c) {
    case Characteristic::MI:
      return {FunctionClass::LHat, m == n ? 1.0 : 2.0, double(n), m, n};
    case Characteristic::QCMI:
      return {FunctionClass::LHat, cm2, double(n), m, n};
    case Characteristic::SQ:  // constants for 2 E_sq
      return {FunctionClass::N1, cm2, double(n), m, n};
    case Characteristic::CSQ:  // constants for 2 E^c_sq
      return {FunctionClass::N2, cm2, double(n), m, n};
    case Characteristic::EI:  // constants for 2 E_I
      if (m != n)
        throw std::invalid_argument("catalog: EI defined for m = n only");
      return {FunctionClass::N1, 2.0, double(n) + 1.0, n, n};
  }
  throw std::invalid_argument("catalog: unknown characteristic");
}

std::vector<std::pair<std::string, ClassDescriptor>> catalog(int n) {
  std::vector<std::pair<std::string, ClassDescriptor>> table;
  table.emplace_back("entropy", ClassDescriptor{FunctionClass::LHat, 1, 1, 1, 1});
  table.emplace_back("conditional_entropy",
                     ClassDescriptor{FunctionClass::LHat, 2, 1, 1, 2});
  table.emplace_back("discord_a1_given_a2",
                     ClassDescriptor{FunctionClass::LHat, 2, 2, 1, 2});
  table.emplace_back("discord_a2_given_a1",
                     ClassDescriptor{FunctionClass::LHat, 1, 2, 1, 2});
  table.emplace_back("mi", descriptor_for(Characteristic::MI, n, n));
  table.emplace_back("mi_m=n-1", descriptor_for(Characteristic::MI, n, n - 1));
  table.emplace_back("qcmi_m=n-1",
                     descriptor_for(Characteristic::QCMI, n, n - 1));
  table.emplace_back("qcmi", descriptor_for(Characteristic::QCMI, n, n));
  table.emplace_back("2sq_m=n-1", descriptor_for(Characteristic::SQ, n, n - 1));
  table.emplace_back("2sq", descriptor_for(Characteristic::SQ, n, n));
  table.emplace_back("2csq_m=n-1",
                     descriptor_for(Characteristic::CSQ, n, n - 1));
  table.emplace_back("2csq", descriptor_for(Characteristic::CSQ, n, n));
  table.emplace_back("eof_bipartite",
                     ClassDescriptor{FunctionClass::N3, 1, 1, 1, 2});
  table.emplace_back("2ei", descriptor_for(Characteristic::EI, n, n));
  return table;
}

namespace {

double effective_eps(const ClassDescriptor& desc, double eps) {
  if (!is_n_class(desc.cls)) return eps;
  return std::sqrt(eps * (2.0 - eps));
}

void check_eps_unit(double eps) {
  if (eps < 0.0 || eps > 1.0)
    throw std::domain_error("bound: eps outside [0,1]");
}

bool envelope_kind(const EnergyFunction& f) {
  return f.kind() == EnergyFunctionKind::OscillatorBar ||
         f.kind() == EnergyFunctionKind::MinEnvelope;
}

}  // namespace

BoundValue cb_finite(const ClassDescriptor& desc, double eps,
                     long dim_constrained) {
  check_eps_unit(eps);
  if (dim_constrained < 1)
    throw std::invalid_argument("cb_finite: dim < 1");
  BoundValue v;
  v.effective_eps = effective_eps(desc, eps);
  if (eps == 0.0) return v;
  const double x = v.effective_eps;
  const double log_term =
      desc.C * x * std::log(static_cast<double>(dim_constrained));
  const double g_term = desc.D * g_func(x);
  v.terms = {{"dim_log", log_term}, {"g", g_term}};
  v.total = log_term + g_term;
  return v;
}

BoundValue cb_energy_sqrt(const BoundSpec& spec) {
  if (!spec.fhat)
    throw std::invalid_argument("cb_energy_sqrt: missing energy model");
  if (spec.eps < 0.0) throw std::domain_error("cb_energy_sqrt: eps < 0");
  if (spec.eps > 1.0 && !envelope_kind(*spec.fhat))
    throw std::domain_error(
        "cb_energy_sqrt: eps > 1 requires an admissible envelope");
  BoundValue v;
  v.effective_eps = effective_eps(spec.descriptor, std::min(spec.eps, 1.0));
  if (spec.eps > 1.0 && !is_n_class(spec.descriptor.cls))
    v.effective_eps = spec.eps;
  if (spec.eps == 0.0) return v;
  const double x = v.effective_eps;
  const auto& F = *spec.fhat;
  const double m = spec.descriptor.m;
  const double s = std::sqrt(2.0 * x);
  const double f_term = spec.descriptor.C * m * s * F(spec.energy_bar / x);
  const double g_term = spec.descriptor.D * g_func(s);
  v.terms = {{"energy_log", f_term}, {"g", g_term}};
  v.total = f_term + g_term;
  return v;
}

BoundValue vb_two_step(const BoundSpec& spec) {
  if (!spec.fhat)
    throw std::invalid_argument("vb_two_step: missing energy model");
  check_eps_unit(spec.eps);
  BoundValue v;
  v.effective_eps = effective_eps(spec.descriptor, spec.eps);
  v.t_used = spec.t;
  if (spec.eps == 0.0) return v;
  const double x = v.effective_eps;
  if (!(spec.t > 0.0 && spec.t < 1.0 / x))
    throw std::domain_error("vb_two_step: t outside (0, 1/eps)");
  const auto& F = *spec.fhat;
  const double m = spec.descriptor.m;
  const double t = spec.t;
  const double a = x + x * x * t * t;
  const double b = std::sqrt(2.0 * x * t);
  const double f1 =
      spec.descriptor.C * m * a * F(m * spec.energy_bar / (x * x * t * t));
  const double f2 =
      spec.descriptor.C * m * 2.0 * b * F(spec.energy_bar / (x * t));
  const double g1 = spec.descriptor.D * g_func(a);
  const double g2 = spec.descriptor.D * 2.0 * g_func(b);
  v.terms = {{"approx_energy", f1}, {"tail_energy", f2},
             {"approx_g", g1}, {"tail_g", g2}};
  v.total = f1 + f2 + g1 + g2;
  return v;
}

BoundValue cb_oscillator(const BoundSpec& spec) {
  if (!spec.fhat || !spec.fhat->oscillator())
    throw std::invalid_argument("cb_oscillator: missing oscillator model");
  check_eps_unit(spec.eps);
  BoundValue v;
  v.effective_eps = effective_eps(spec.descriptor, spec.eps);
  v.t_used = spec.t;
  if (spec.eps == 0.0) return v;
  const double x = v.effective_eps;
  if (!(spec.t > 0.0 && spec.t < 1.0 / x))
    throw std::domain_error("cb_oscillator: t outside (0, 1/eps)");
  const OscillatorModel& osc = *spec.fhat->oscillator();
  const double l = osc.modes();
  const double e0 = osc.ground_energy();
  const double es = osc.e_star();
  const double m = spec.descriptor.m;
  const double t = spec.t;
  const double a = x + x * x * t * t;
  const double b = std::sqrt(2.0 * x * t);
  const double denom = std::exp(-1.0) * l * es;
  const double f1 = spec.descriptor.C * m * a * l *
                    std::log((m * spec.energy_bar / (x * x * t * t) + 2 * e0) /
                             denom);
  const double f2 = spec.descriptor.C * m * 2.0 * b * l *
                    std::log((spec.energy_bar / (x * t) + 2 * e0) / denom);
  const double g1 = spec.descriptor.D * g_func(a);
  const double g2 = spec.descriptor.D * 2.0 * g_func(b);
  v.terms = {{"approx_energy", f1}, {"tail_energy", f2},
             {"approx_g", g1}, {"tail_g", g2}};
  v.total = f1 + f2 + g1 + g2;
  return v;
}

std::pair<double, BoundValue> optimize_t(const BoundSpec& spec) {
  if (spec.eps <= 0.0 || spec.eps >= 1.0)
    throw std::domain_error("optimize_t: eps outside (0,1)");
  const double x = effective_eps(spec.descriptor, spec.eps);
  const double t_lo = 1e-4;
  const double t_hi = (1.0 - 1e-6) / x;
  const int kGrid = 256;

  auto value_at = [&](double t) {
    BoundSpec s = spec;
    s.t = t;
    return vb_two_step(s).total;
  };

  double best_t = t_lo;
  double best_v = value_at(t_lo);
  std::vector<double> ts(kGrid);
  const double la = std::log(t_lo), lb = std::log(t_hi);
  for (int i = 0; i < kGrid; ++i) {
    ts[i] = std::exp(la + (lb - la) * i / (kGrid - 1));
    const double val = value_at(ts[i]);
    if (val < best_v) {
      best_v = val;
      best_t = ts[i];
    }
  }
  // golden-section refinement around the best grid bracket
  auto it = std::lower_bound(ts.begin(), ts.end(), best_t);
  const int idx = static_cast<int>(it - ts.begin());
  double a = ts[std::max(0, idx - 1)];
  double b = ts[std::min(kGrid - 1, idx + 1)];
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = value_at(x1), f2 = value_at(x2);
  for (int iter = 0; iter < 80 && (b - a) > 1e-12 * b; ++iter) {
    if (f1 > f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = value_at(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = value_at(x1);
    }
  }
  for (double t : {x1, x2}) {
    const double val = value_at(t);
    if (val < best_v) {
      best_v = val;
      best_t = t;
    }
  }
  BoundSpec s = spec;
  s.t = best_t;
  return {best_t, vb_two_step(s)};
}

BoundValue bound_for(const BoundRequest& req) {
  const ClassDescriptor desc =
      descriptor_for(req.characteristic, req.n, req.m);
  switch (req.variant) {
    case BoundVariant::Finite: {
      if (req.dims.empty())
        throw std::invalid_argument("bound_for: finite variant needs dims");
      long dim = 1;
      const int use = static_cast<int>(req.dims.size()) == req.n
                          ? req.m
                          : static_cast<int>(req.dims.size());
      if (use > static_cast<int>(req.dims.size()))
        throw std::invalid_argument("bound_for: not enough dims");
      for (int i = 0; i < use; ++i) dim *= req.dims[i];
      return cb_finite(desc, req.eps, dim);
    }
    case BoundVariant::Sqrt: {
      BoundSpec spec{desc, req.eps, req.energy_bar, 1.0, req.fhat};
      return cb_energy_sqrt(spec);
    }
    case BoundVariant::TwoStep: {
      BoundSpec spec{desc, req.eps, req.energy_bar, req.t, req.fhat};
      if (req.t <= 0.0) return optimize_t(spec).second;
      return vb_two_step(spec);
    }
    case BoundVariant::Oscillator: {
      BoundSpec spec{desc, req.eps, req.energy_bar, req.t, req.fhat};
      if (req.t <= 0.0) {
        // optimize on the generic form, then evaluate the closed form
        auto [t_opt, unused] = optimize_t(spec);
        (void)unused;
        spec.t = t_opt;
      }
      return cb_oscillator(spec);
    }
  }
  throw std::invalid_argument("bound_for: unknown variant");
}

}  // namespace qbound
