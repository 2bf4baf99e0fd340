#pragma once

#include <string>
#include <vector>

namespace qbound {

/// Hamiltonian as a finite truncation of its sorted eigenvalue sequence.
class SpectrumModel {
 public:
  explicit SpectrumModel(std::vector<double> eigenvalues);

  const std::vector<double>& levels() const { return levels_; }
  int size() const { return static_cast<int>(levels_.size()); }
  double ground_energy() const { return levels_.front(); }
  int ground_multiplicity(double tol = 1e-12) const;

  /// Mean energy at infinite temperature; the representable ceiling for
  /// Gibbs solving on this truncation.
  double mean_energy_ceiling() const;

  /// Parse {"eigenvalues": [...]} or {"oscillator": {...}} JSON.
  static SpectrumModel from_json_text(const std::string& text,
                                      int oscillator_levels = 512);
  static SpectrumModel load(const std::string& path,
                            int oscillator_levels = 512);

 private:
  std::vector<double> levels_;
};

/// l-mode harmonic oscillator, hbar = 1.
struct OscillatorModel {
  std::vector<double> frequencies;

  int modes() const { return static_cast<int>(frequencies.size()); }
  /// E_0 = (1/2) sum_i w_i.
  double ground_energy() const;
  /// E_* = geometric mean of the frequencies.
  double e_star() const;
  /// Lowest `levels` eigenvalues of the full multimode spectrum.
  SpectrumModel truncate(int levels) const;
};

/// Sorted sums E_{i1}+...+E_{im} of the parts, lowest `cap` kept.
SpectrumModel composite_spectrum(const std::vector<SpectrumModel>& parts,
                                 int cap);

/// Markov-type tail bound: any state with mean energy <= E has at most
/// (E - E_0)/(E_d - E_0) of its mass outside the lowest d levels.
double tail_fraction(const SpectrumModel& spec, double energy, int cutoff);

/// N_up/N_down ratio over pairs with E_k + E_j <= E; tends to a > 1 for
/// spectra with regular growth (a = 1 + 1/l for the l-mode oscillator).
double bd_ratio(const SpectrumModel& spec, double energy);

}  // namespace qbound
