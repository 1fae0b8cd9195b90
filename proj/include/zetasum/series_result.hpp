#pragma once

#include "zetasum/exact_rational.hpp"
#include "zetasum/extended_real.hpp"
#include "zetasum/interval.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace zetasum {

/// A truncated series (or integral) together with a certified bound on what
/// the truncation left out.
///
/// For positive-term series the full value lies in [value, value + tail_bound];
/// otherwise in [value - tail_bound, value + tail_bound].
struct SeriesResult {
  std::string series_id;
  /// Present when every summand was rational and accumulated exactly.
  std::optional<ExactRational> exact_sum;
  ExtendedReal value;
  std::int64_t terms_used = 0;
  ExtendedReal tail_bound;
  bool positive_terms = false;

  Interval enclosure() const {
    if (positive_terms) return {value, value + tail_bound};
    return Interval::around(value, tail_bound);
  }
};

}  // namespace zetasum
