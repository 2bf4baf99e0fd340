#include "qbound/energy_function.hpp"

#include <stdexcept>

namespace qbound {

EnergyFunction::EnergyFunction(EnergyFunctionKind kind, SpectrumModel spectrum)
    : kind_(kind),
      spectrum_(std::move(spectrum)),
      cache_mutex_(std::make_shared<std::mutex>()),
      cache_(std::make_shared<std::map<double, double>>()) {
  if (kind == EnergyFunctionKind::Oscillator ||
      kind == EnergyFunctionKind::OscillatorBar)
    throw std::invalid_argument(
        "energy_function: oscillator kind needs an oscillator model");
}

EnergyFunction::EnergyFunction(EnergyFunctionKind kind,
                               OscillatorModel oscillator)
    : kind_(kind),
      oscillator_(std::move(oscillator)),
      cache_mutex_(std::make_shared<std::mutex>()),
      cache_(std::make_shared<std::map<double, double>>()) {
  if (kind != EnergyFunctionKind::Oscillator &&
      kind != EnergyFunctionKind::OscillatorBar)
    throw std::invalid_argument(
        "energy_function: spectrum kind needs a spectrum model");
}

double EnergyFunction::operator()(double energy) const {
  switch (kind_) {
    case EnergyFunctionKind::Oscillator:
      return oscillator_f(*oscillator_, energy, false);
    case EnergyFunctionKind::OscillatorBar:
      return oscillator_f(*oscillator_, energy, true);
    default:
      break;
  }
  {
    std::lock_guard<std::mutex> lock(*cache_mutex_);
    auto it = cache_->find(energy);
    if (it != cache_->end()) return it->second;
  }
  double value = 0.0;
  switch (kind_) {
    case EnergyFunctionKind::Gibbs:
      value = f_gibbs(*spectrum_, energy);
      break;
    case EnergyFunctionKind::GibbsBar:
      value = f_bar(*spectrum_, energy);
      break;
    case EnergyFunctionKind::MinEnvelope:
      value = f_hat_star(*spectrum_, energy);
      break;
    default:
      throw std::logic_error("energy_function: unreachable");
  }
  {
    std::lock_guard<std::mutex> lock(*cache_mutex_);
    (*cache_)[energy] = value;
  }
  return value;
}

EnergyFunction EnergyFunction::default_envelope(const OscillatorModel& model) {
  return EnergyFunction(EnergyFunctionKind::OscillatorBar, model);
}

EnergyFunction EnergyFunction::default_envelope(const SpectrumModel& spectrum) {
  return EnergyFunction(EnergyFunctionKind::MinEnvelope, spectrum);
}

}  // namespace qbound
