#include "qbound/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qbound {

SpectrumModel::SpectrumModel(std::vector<double> eigenvalues)
    : levels_(std::move(eigenvalues)) {
  if (levels_.size() < 2)
    throw std::invalid_argument("spectrum: need at least 2 levels");
  if (!std::is_sorted(levels_.begin(), levels_.end()))
    throw std::invalid_argument("spectrum: eigenvalues not sorted");
  if (levels_.front() < 0.0)
    throw std::invalid_argument("spectrum: negative ground energy");
}

int SpectrumModel::ground_multiplicity(double tol) const {
  int m = 0;
  for (double e : levels_) {
    if (e - levels_.front() > tol) break;
    ++m;
  }
  return m;
}

double SpectrumModel::mean_energy_ceiling() const {
  return std::accumulate(levels_.begin(), levels_.end(), 0.0) /
         static_cast<double>(levels_.size());
}

SpectrumModel SpectrumModel::from_json_text(const std::string& text,
                                            int oscillator_levels) {
  const auto j = nlohmann::json::parse(text);
  if (j.contains("eigenvalues")) {
    std::vector<double> ev = j.at("eigenvalues").get<std::vector<double>>();
    std::sort(ev.begin(), ev.end());
    return SpectrumModel(std::move(ev));
  }
  if (j.contains("oscillator")) {
    const auto& o = j.at("oscillator");
    OscillatorModel model{o.at("frequencies").get<std::vector<double>>()};
    if (o.contains("modes") &&
        o.at("modes").get<int>() != model.modes())
      throw std::invalid_argument("spectrum: modes != frequency count");
    return model.truncate(oscillator_levels);
  }
  throw std::invalid_argument(
      "spectrum: expected 'eigenvalues' or 'oscillator'");
}

SpectrumModel SpectrumModel::load(const std::string& path,
                                  int oscillator_levels) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("spectrum: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str(), oscillator_levels);
}

double OscillatorModel::ground_energy() const {
  return 0.5 * std::accumulate(frequencies.begin(), frequencies.end(), 0.0);
}

double OscillatorModel::e_star() const {
  double log_sum = 0.0;
  for (double w : frequencies) {
    if (w <= 0.0) throw std::invalid_argument("oscillator: frequency <= 0");
    log_sum += std::log(w);
  }
  return std::exp(log_sum / static_cast<double>(modes()));
}

SpectrumModel OscillatorModel::truncate(int levels) const {
  if (modes() < 1) throw std::invalid_argument("oscillator: no modes");
  if (levels < 2) throw std::invalid_argument("oscillator: levels < 2");
  const double e0 = ground_energy();
  if (modes() == 1) {
    std::vector<double> ev(levels);
    for (int k = 0; k < levels; ++k) ev[k] = e0 + k * frequencies[0];
    return SpectrumModel(std::move(ev));
  }
  // Multimode: best-first expansion of occupation vectors.
  using Node = std::pair<double, std::vector<int>>;
  auto cmp = [](const Node& a, const Node& b) { return a.first > b.first; };
  std::priority_queue<Node, std::vector<Node>, decltype(cmp)> heap(cmp);
  std::set<std::vector<int>> seen;
  std::vector<int> zero(modes(), 0);
  heap.push({e0, zero});
  seen.insert(zero);
  std::vector<double> ev;
  while (!heap.empty() && static_cast<int>(ev.size()) < levels) {
    auto [e, occ] = heap.top();
    heap.pop();
    ev.push_back(e);
    for (int i = 0; i < modes(); ++i) {
      auto next = occ;
      ++next[i];
      if (seen.insert(next).second) heap.push({e + frequencies[i], next});
    }
  }
  return SpectrumModel(std::move(ev));
}

SpectrumModel composite_spectrum(const std::vector<SpectrumModel>& parts,
                                 int cap) {
  if (parts.empty()) throw std::invalid_argument("composite: empty list");
  if (cap < 2) throw std::invalid_argument("composite: cap < 2");
  std::vector<double> acc = parts.front().levels();
  for (size_t p = 1; p < parts.size(); ++p) {
    const auto& next = parts[p].levels();
    std::vector<double> sums;
    sums.reserve(acc.size() * next.size());
    for (double a : acc)
      for (double b : next) sums.push_back(a + b);
    std::sort(sums.begin(), sums.end());
    if (static_cast<int>(sums.size()) > cap) sums.resize(cap);
    acc = std::move(sums);
  }
  if (static_cast<int>(acc.size()) > cap) acc.resize(cap);
  return SpectrumModel(std::move(acc));
}

double tail_fraction(const SpectrumModel& spec, double energy, int cutoff) {
  if (cutoff < 1 || cutoff >= spec.size())
    throw std::invalid_argument("tail_fraction: cutoff out of range");
  const double e0 = spec.ground_energy();
  const double ed = spec.levels()[cutoff];
  if (ed <= e0 + 1e-15)
    throw std::invalid_argument("tail_fraction: degenerate spectrum at cutoff");
  if (energy < e0) throw std::invalid_argument("tail_fraction: E < E0");
  return (energy - e0) / (ed - e0);
}

double bd_ratio(const SpectrumModel& spec, double energy) {
  const auto& ev = spec.levels();
  double up = 0.0, down = 0.0;
  for (size_t k = 0; k < ev.size(); ++k) {
    if (ev[k] + ev[0] > energy) break;
    for (size_t j = 0; j < ev.size(); ++j) {
      if (ev[k] + ev[j] > energy) break;
      up += ev[k] * ev[k];
      down += ev[k] * ev[j];
    }
  }
  if (down <= 0.0) throw std::invalid_argument("bd_ratio: no pairs below E");
  return up / down;
}

}  // namespace qbound
