#include "zetasum/quadrature.hpp"

#include "zetasum/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace zetasum {

GaussLegendreRule::GaussLegendreRule(int order, int digits) {
  if (order < 1) throw std::invalid_argument("Gauss-Legendre order must be positive");
  const int w = digits + 5;
  const ExtendedReal eps = power_of_ten(-w + 2, w);
  const ExtendedReal pi_w = pi(w);
  std::vector<ExtendedReal> nodes(static_cast<std::size_t>(order), ExtendedReal(w));
  std::vector<ExtendedReal> weights(static_cast<std::size_t>(order), ExtendedReal(w));
  const int half = (order + 1) / 2;
  for (int i = 1; i <= half; ++i) {
    ExtendedReal x = cos(pi_w * ExtendedReal(i - 0.25, w) / ExtendedReal(order + 0.5, w));
    ExtendedReal derivative(w);
    for (int iter = 0; iter < 100; ++iter) {
      ExtendedReal p0(1L, w);
      ExtendedReal p1 = x;
      for (int k = 2; k <= order; ++k) {
        ExtendedReal p2 = ((2L * k - 1) * x * p1 - (k - 1L) * p0) / static_cast<long>(k);
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      if (order == 1) p0 = ExtendedReal(1L, w);
      derivative = static_cast<long>(order) * (x * p1 - p0) / (x * x - 1L);
      ExtendedReal step = p1 / derivative;
      x -= step;
      if (abs(step) < eps) break;
    }
    ExtendedReal weight = 2L / ((1L - x * x) * derivative * derivative);
    nodes[static_cast<std::size_t>(i - 1)] = x;
    nodes[static_cast<std::size_t>(order - i)] = -x;
    weights[static_cast<std::size_t>(i - 1)] = weight;
    weights[static_cast<std::size_t>(order - i)] = weight;
  }
  if (order % 2 == 1) nodes[static_cast<std::size_t>(half - 1)] = ExtendedReal(w);
  nodes_ = std::move(nodes);
  weights_ = std::move(weights);
}

ExtendedReal GaussLegendreRule::apply(const Integrand& f, const ExtendedReal& a,
                                      const ExtendedReal& b) const {
  const ExtendedReal center = ldexp(a + b, -1);
  const ExtendedReal radius = ldexp(b - a, -1);
  ExtendedReal sum(std::min(a.digits(), b.digits()));
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    sum += weights_[i] * f(center + radius * nodes_[i]);
  }
  return sum * radius;
}

Interval quadrature(const Integrand& f, const ExtendedReal& a, const ExtendedReal& b,
                    const ExtendedReal& target_error, const QuadratureOptions& options) {
  if (!(a < b)) throw std::invalid_argument("quadrature requires a < b");
  if (target_error.sign() <= 0) throw std::invalid_argument("target_error must be positive");
  const int digits = std::min({a.digits(), b.digits(), target_error.digits()});
  const int w = digits + 5;
  const int base = options.base_order > 0 ? options.base_order : std::max(10, digits / 3);
  const GaussLegendreRule coarse(base, w);
  const GaussLegendreRule fine(2 * base, w);

  const ExtendedReal lo = a.with_digits(w);
  const ExtendedReal hi = b.with_digits(w);
  const ExtendedReal length = hi - lo;
  // Half the budget goes to rounding in the accepted panels' fine sums.
  const ExtendedReal budget = target_error.with_digits(w) / 2;

  ExtendedReal total(w);
  ExtendedReal error(w);
  std::vector<std::pair<ExtendedReal, ExtendedReal>> pending{{lo, hi}};
  std::size_t processed = 0;
  while (!pending.empty()) {
    auto [l, r] = std::move(pending.back());
    pending.pop_back();
    if (++processed > options.max_subintervals) {
      throw PrecisionError("quadrature: target error not reached within " +
                           std::to_string(options.max_subintervals) + " subintervals");
    }
    ExtendedReal estimate_fine = fine.apply(f, l, r);
    ExtendedReal estimate_coarse = coarse.apply(f, l, r);
    ExtendedReal err = abs(estimate_fine - estimate_coarse);
    if (err <= budget * (r - l) / length) {
      total += estimate_fine;
      error += err;
    } else {
      ExtendedReal mid = ldexp(l + r, -1);
      pending.emplace_back(mid, r);
      pending.emplace_back(std::move(l), std::move(mid));
    }
  }
  error += abs(total) * power_of_ten(-digits, w);
  return Interval::around(total.with_digits(digits), error.with_digits(digits));
}

}  // namespace zetasum
