#include "qbound/layout.hpp"

#include <algorithm>
#include <atomic>
#include <set>

namespace qbound {

namespace {
std::atomic<long> g_max_total_dim{4096};
}

long max_total_dim() { return g_max_total_dim.load(); }
void set_max_total_dim(long dim) { g_max_total_dim.store(dim); }

SystemLayout::SystemLayout(std::vector<Factor> factors, int constrained)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("layout: no factors");
  std::set<std::string> seen;
  for (const auto& f : factors_) {
    if (f.dim < 1) throw std::invalid_argument("layout: dim < 1");
    if (!seen.insert(f.label).second)
      throw std::invalid_argument("layout: duplicate label " + f.label);
  }
  constrained_ = constrained < 0 ? factor_count() : constrained;
  if (constrained_ < 0 || constrained_ > factor_count())
    throw std::invalid_argument("layout: constrained count out of range");
  if (total_dim() > max_total_dim())
    throw std::invalid_argument("layout: total dimension exceeds cap");
}

int SystemLayout::index_of(const std::string& label) const {
  for (int k = 0; k < factor_count(); ++k)
    if (factors_[k].label == label) return k;
  throw std::invalid_argument("layout: unknown label " + label);
}

bool SystemLayout::has_label(const std::string& label) const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [&](const Factor& f) { return f.label == label; });
}

long SystemLayout::total_dim() const {
  long d = 1;
  for (const auto& f : factors_) {
    d *= f.dim;
    if (d > (1L << 40)) throw std::invalid_argument("layout: dim overflow");
  }
  return d;
}

SystemLayout SystemLayout::sublayout(
    const std::vector<std::string>& labels) const {
  std::vector<Factor> kept;
  for (const auto& f : factors_) {
    if (std::find(labels.begin(), labels.end(), f.label) != labels.end())
      kept.push_back(f);
  }
  if (kept.size() != labels.size())
    throw std::invalid_argument("layout: sublayout label mismatch");
  return SystemLayout(std::move(kept), static_cast<int>(labels.size()));
}

std::vector<int> SystemLayout::dims() const {
  std::vector<int> d;
  d.reserve(factors_.size());
  for (const auto& f : factors_) d.push_back(f.dim);
  return d;
}

bool SystemLayout::operator==(const SystemLayout& o) const {
  if (factors_.size() != o.factors_.size()) return false;
  for (size_t k = 0; k < factors_.size(); ++k)
    if (factors_[k].label != o.factors_[k].label ||
        factors_[k].dim != o.factors_[k].dim)
      return false;
  return true;
}

}  // namespace qbound
