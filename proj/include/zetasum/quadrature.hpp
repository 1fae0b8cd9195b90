#pragma once

#include "zetasum/extended_real.hpp"
#include "zetasum/interval.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace zetasum {

using Integrand = std::function<ExtendedReal(const ExtendedReal&)>;

/// n-point Gauss-Legendre nodes and weights on [-1, 1].
class GaussLegendreRule {
 public:
  GaussLegendreRule(int order, int digits);

  int order() const { return static_cast<int>(nodes_.size()); }
  const std::vector<ExtendedReal>& nodes() const { return nodes_; }
  const std::vector<ExtendedReal>& weights() const { return weights_; }

  /// Rule applied to f on [a, b].
  ExtendedReal apply(const Integrand& f, const ExtendedReal& a, const ExtendedReal& b) const;

 private:
  std::vector<ExtendedReal> nodes_;
  std::vector<ExtendedReal> weights_;
};

struct QuadratureOptions {
  /// Order of the coarse rule; the fine rule doubles it. 0 picks a value
  /// from the working precision.
  int base_order = 0;
  std::size_t max_subintervals = 4096;
};

/// Adaptive Gauss-Legendre integration of a smooth f over [a, b].
///
/// Each panel is integrated with an n- and a 2n-point rule; their difference
/// is the panel's error estimate. Panels whose estimate exceeds their share
/// of target_error are bisected. Returns an interval of half-width at most
/// target_error around the fine-rule sum. Throws PrecisionError when the
/// subinterval budget runs out.
Interval quadrature(const Integrand& f, const ExtendedReal& a, const ExtendedReal& b,
                    const ExtendedReal& target_error, const QuadratureOptions& options = {});

}  // namespace zetasum
