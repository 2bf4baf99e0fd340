#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "qbound/gibbs.hpp"
#include "qbound/spectrum.hpp"

namespace qbound {

/// Energy-entropy function used on the right hand side of the
/// energy-constrained bounds. GibbsBar is the numeric F-bar; MinEnvelope is
/// the minimal admissible envelope F*; the oscillator kinds are the
/// closed forms.
enum class EnergyFunctionKind {
  Gibbs,          // F_H(E)
  GibbsBar,       // Fbar(E) = F_H(E + E_0)
  MinEnvelope,    // F*(E)
  Oscillator,     // F_{l,w}(E)
  OscillatorBar,  // Fbar_{l,w}(E)
};

class EnergyFunction {
 public:
  EnergyFunction(EnergyFunctionKind kind, SpectrumModel spectrum);
  EnergyFunction(EnergyFunctionKind kind, OscillatorModel oscillator);

  EnergyFunctionKind kind() const { return kind_; }
  const std::optional<SpectrumModel>& spectrum() const { return spectrum_; }
  const std::optional<OscillatorModel>& oscillator() const {
    return oscillator_;
  }

  double operator()(double energy) const;

  /// Default envelope for the two-step bound: closed form for oscillator
  /// models, F* otherwise.
  static EnergyFunction default_envelope(const OscillatorModel& model);
  static EnergyFunction default_envelope(const SpectrumModel& spectrum);

 private:
  EnergyFunctionKind kind_;
  std::optional<SpectrumModel> spectrum_;
  std::optional<OscillatorModel> oscillator_;
  // memoized Gibbs lookups, guarded for concurrent use
  mutable std::shared_ptr<std::mutex> cache_mutex_;
  mutable std::shared_ptr<std::map<double, double>> cache_;
};

}  // namespace qbound
