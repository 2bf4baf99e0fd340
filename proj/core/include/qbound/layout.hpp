#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qbound {

struct Factor {
  std::string label;
  int dim;
};

/// Ordered list of tensor factors. The first `constrained_count()` factors
/// are the energy-constrained subsystems of a bound evaluation.
class SystemLayout {
 public:
  SystemLayout() = default;
  explicit SystemLayout(std::vector<Factor> factors, int constrained = -1);

  const std::vector<Factor>& factors() const { return factors_; }
  int factor_count() const { return static_cast<int>(factors_.size()); }
  int constrained_count() const { return constrained_; }

  int dim(int k) const { return factors_.at(k).dim; }
  const std::string& label(int k) const { return factors_.at(k).label; }
  int index_of(const std::string& label) const;
  bool has_label(const std::string& label) const;

  /// Product of all factor dimensions.
  long total_dim() const;

  /// Layout containing exactly the listed labels, in original factor order.
  SystemLayout sublayout(const std::vector<std::string>& labels) const;

  std::vector<int> dims() const;

  bool operator==(const SystemLayout& o) const;

 private:
  std::vector<Factor> factors_;
  int constrained_ = 0;
};

/// Cap on the total dimension of dense states, default 4096.
long max_total_dim();
void set_max_total_dim(long dim);

}  // namespace qbound
