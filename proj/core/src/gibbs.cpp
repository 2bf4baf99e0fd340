#include "qbound/gibbs.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace qbound {

namespace {

struct GibbsEval {
  double mean;
  double variance;
  double log_z;                 // ln sum exp(-lambda (E_k - E_0))
  Eigen::ArrayXd probabilities;
};

GibbsEval evaluate(const Eigen::ArrayXd& shifted, double e0, double lambda) {
  const Eigen::ArrayXd w = (-lambda * shifted).exp();
  const double z = w.sum();
  const Eigen::ArrayXd p = w / z;
  const double mean_shift = (p * shifted).sum();
  const double var = (p * (shifted - mean_shift).square()).sum();
  return {e0 + mean_shift, var, std::log(z), p};
}

// Safeguarded Newton on lambda for mean(lambda) = E; mean is strictly
// decreasing with derivative -variance.
double solve_lambda(const Eigen::ArrayXd& shifted, double e0, double energy) {
  double lo = 0.0;
  double lo_mean = evaluate(shifted, e0, lo).mean;
  if (energy > lo_mean + 1e-12 * std::max(1.0, std::abs(energy)))
    throw std::domain_error("gibbs: energy above truncation ceiling");
  if (energy >= lo_mean) return 0.0;

  double hi = 1.0;
  while (evaluate(shifted, e0, hi).mean > energy) {
    hi *= 2.0;
    if (hi > 1e12) throw std::runtime_error("gibbs: bracketing failed");
  }

  double lambda = 0.5 * (lo + hi);
  const double tol = 1e-12 * std::max(1.0, std::abs(energy));
  for (int iter = 0; iter < 200; ++iter) {
    const GibbsEval ev = evaluate(shifted, e0, lambda);
    const double err = ev.mean - energy;
    if (std::abs(err) <= tol) return lambda;
    if (err > 0.0)
      lo = lambda;
    else
      hi = lambda;
    double next = lambda;
    if (ev.variance > 0.0) next = lambda + err / ev.variance;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    lambda = next;
  }
  return lambda;
}

}  // namespace

GibbsPoint solve_gibbs(const SpectrumModel& spec, double energy,
                       double tail_tol) {
  const double e0 = spec.ground_energy();
  if (energy < e0 - 1e-12)
    throw std::domain_error("gibbs: energy below ground energy");

  const int L = spec.size();
  if (energy <= e0 + 1e-14 * std::max(1.0, std::abs(e0))) {
    // lambda -> infinity: point mass on the ground space
    const int mult = spec.ground_multiplicity();
    std::vector<double> probs(L, 0.0);
    for (int k = 0; k < mult; ++k) probs[k] = 1.0 / mult;
    return {e0, std::numeric_limits<double>::infinity(), std::log(double(mult)),
            std::move(probs)};
  }

  Eigen::ArrayXd shifted(L);
  for (int k = 0; k < L; ++k) shifted[k] = spec.levels()[k] - e0;

  const double lambda = solve_lambda(shifted, e0, energy);
  const GibbsEval ev = evaluate(shifted, e0, lambda);

  // Tail check only applies to long spectra that stand in for an
  // infinite-dimensional truncation; short explicit level lists are exact.
  if (L >= 20) {
    const double tail_mass = ev.probabilities.tail(L / 20).sum();
    if (tail_mass > tail_tol)
      throw std::runtime_error(
          "gibbs: truncation tail mass above tolerance; extend the spectrum");
  }

  const double entropy = lambda * (energy - e0) + ev.log_z;
  std::vector<double> probs(ev.probabilities.data(),
                            ev.probabilities.data() + L);
  return {energy, lambda, entropy, std::move(probs)};
}

double f_gibbs(const SpectrumModel& spec, double energy) {
  return solve_gibbs(spec, energy).entropy;
}

double f_bar(const SpectrumModel& spec, double shifted_energy) {
  if (shifted_energy < 0.0)
    throw std::domain_error("f_bar: negative energy");
  return f_gibbs(spec, shifted_energy + spec.ground_energy());
}

namespace {

bool tail_ok(const SpectrumModel& spec, double shifted_energy) {
  try {
    solve_gibbs(spec, shifted_energy + spec.ground_energy());
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

double f_hat_star(const SpectrumModel& spec, double shifted_energy) {
  if (shifted_energy <= 0.0)
    throw std::domain_error("f_hat_star: energy must be positive");

  // Highest shifted energy the truncation supports with negligible tail.
  double hi = spec.mean_energy_ceiling() - spec.ground_energy();
  if (!tail_ok(spec, shifted_energy))
    throw std::runtime_error("f_hat_star: spectrum truncation too short");
  {
    double lo = shifted_energy;
    for (int iter = 0; iter < 60; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (tail_ok(spec, mid))
        lo = mid;
      else
        hi = mid;
    }
    hi = lo;
  }

  // back off a hair so rounding in exp/log can't step past the boundary
  const double horizon = std::min(1e6 * shifted_energy, hi * (1.0 - 1e-9));
  const int kGrid = 2048;
  auto ratio = [&](double e) { return f_bar(spec, e) / std::sqrt(e); };

  const double log_lo = std::log(shifted_energy);
  const double log_hi = std::log(horizon);
  double best = -1.0;
  int best_i = 0;
  std::vector<double> grid(kGrid);
  for (int i = 0; i < kGrid; ++i) {
    grid[i] = std::min(
        horizon, std::exp(log_lo + (log_hi - log_lo) * i / (kGrid - 1)));
    const double r = ratio(grid[i]);
    if (r > best) {
      best = r;
      best_i = i;
    }
  }
  if (best_i == kGrid - 1 && horizon < 1e6 * shifted_energy &&
      ratio(grid[kGrid - 1]) > ratio(grid[kGrid - 2]))
    throw std::runtime_error("f_hat_star: supremum not converged on grid");

  // Golden-section refinement on the bracket around the grid argmax.
  double a = grid[std::max(0, best_i - 1)];
  double b = grid[std::min(kGrid - 1, best_i + 1)];
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = ratio(x1), f2 = ratio(x2);
  for (int iter = 0; iter < 60 && (b - a) > 1e-10 * b; ++iter) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = ratio(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = ratio(x1);
    }
  }
  best = std::max({best, f1, f2});
  return std::sqrt(shifted_energy) * best;
}

double oscillator_f(const OscillatorModel& model, double energy, bool barred) {
  const double e0 = model.ground_energy();
  const double es = model.e_star();
  const int l = model.modes();
  const double shifted = barred ? energy + 2.0 * e0 : energy + e0;
  if (shifted <= 0.0)
    throw std::domain_error("oscillator_f: energy outside domain");
  if (barred && energy < 0.0)
    throw std::domain_error("oscillator_f: negative energy for barred form");
  return l * std::log(shifted / (l * es)) + l;
}

}  // namespace qbound
