#pragma once

#include "zetasum/extended_real.hpp"

#include <stdexcept>
#include <utility>

namespace zetasum {

/// Closed interval [lower, upper] of reals.
class Interval {
 public:
  Interval(ExtendedReal lower, ExtendedReal upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (upper_ < lower_) throw std::invalid_argument("interval with lower > upper");
  }

  /// [center - radius, center + radius]
  static Interval around(const ExtendedReal& center, const ExtendedReal& radius) {
    return {center - abs(radius), center + abs(radius)};
  }

  const ExtendedReal& lower() const { return lower_; }
  const ExtendedReal& upper() const { return upper_; }
  ExtendedReal midpoint() const { return ldexp(lower_ + upper_, -1); }
  ExtendedReal width() const { return upper_ - lower_; }
  bool contains(const ExtendedReal& x) const { return lower_ <= x && x <= upper_; }

 private:
  ExtendedReal lower_;
  ExtendedReal upper_;
};

}  // namespace zetasum
