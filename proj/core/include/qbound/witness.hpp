#pragma once

#include "qbound/gibbs.hpp"

namespace qbound {

/// Exact entropic values for mixtures of the two Gibbs witnesses
/// (product of Gibbs states vs. the correlated pure state with the same
/// marginals) on a bipartite system. The mixture
///   M(s) = (1-s) gamma(E) (x) gamma(E) + s |psi><psi|
/// splits into a block on span{|ii>} plus a diagonal remainder, so its
/// spectrum reduces to one D x D eigenproblem. Both marginals of M(s)
/// equal gamma(E) for every s.
struct GibbsMixture {
  GibbsPoint point;
  double mix_weight;  // s

  /// I(A:B) of M(s).
  double mutual_information() const;
  /// (1/2) || M(s1) - M(s2) ||_1; linear in |s1 - s2|.
  static double distance(const GibbsPoint& point, double s1, double s2);
};

}  // namespace qbound
