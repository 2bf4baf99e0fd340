#pragma once

#include <vector>

#include "qbound/spectrum.hpp"

namespace qbound {

/// Entropy-maximizing state at fixed mean energy on a truncated spectrum.
struct GibbsPoint {
  double energy;                    // target mean energy
  double lambda;                    // inverse-temperature parameter
  double entropy;                   // F_H(E)
  std::vector<double> probabilities;
};

/// Solve Tr H e^{-lambda H} = E Tr e^{-lambda H} by bisection on lambda.
/// E = E_0 returns the ground point mass; E above the truncation ceiling
/// throws. The Gibbs tail mass at the solved lambda must stay below
/// `tail_tol` (signals the truncation is long enough), where the tail is
/// the last 5% of levels.
GibbsPoint solve_gibbs(const SpectrumModel& spec, double energy,
                       double tail_tol = 1e-10);

/// F_H(E): maximal entropy at mean energy E.
double f_gibbs(const SpectrumModel& spec, double energy);

/// F-bar(E) = F_H(E + E_0), defined on [0, inf).
double f_bar(const SpectrumModel& spec, double shifted_energy);

/// Minimal admissible envelope: F*(E) = sqrt(E) sup_{E' >= E} Fbar(E')/sqrt(E').
/// Evaluated on a log grid with golden-section refinement; throws if the
/// supremum is still rising at the grid horizon.
double f_hat_star(const SpectrumModel& spec, double shifted_energy);

/// Closed-form oscillator envelopes: F_{l,w}(E) = l ln((E+E_0)/(l E_*)) + l
/// (unbarred) and Fbar_{l,w}(E) = l ln((E+2E_0)/(l E_*)) + l (barred).
double oscillator_f(const OscillatorModel& model, double energy, bool barred);

}  // namespace qbound
