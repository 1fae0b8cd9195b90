#pragma once

#include "zetasum/extended_real.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <utility>
#include <vector>

namespace zetasum::zeros {

enum class ZeroSource { computed, ingested };

/// Ordinates 0 < g_1 < g_2 < ... of nontrivial zeta zeros, each standing for
/// the zero 1/2 + i g_j on the critical line.
class ZeroTable {
 public:
  ZeroTable() = default;
  /// Throws ZeroTableError unless the ordinates are positive and strictly
  /// increasing and none exceeds `height`.
  ZeroTable(std::vector<ExtendedReal> ordinates, ZeroSource source, ExtendedReal claimed_accuracy,
            ExtendedReal height);

  const std::vector<ExtendedReal>& ordinates() const { return ordinates_; }
  std::size_t size() const { return ordinates_.size(); }
  bool empty() const { return ordinates_.empty(); }
  const ExtendedReal& operator[](std::size_t i) const { return ordinates_[i]; }
  ZeroSource source() const { return source_; }
  const ExtendedReal& claimed_accuracy() const { return claimed_accuracy_; }
  /// The table lists every zero with ordinate <= height.
  const ExtendedReal& height() const { return height_; }

  /// The first k zeros. The height becomes the midpoint of the gap after the
  /// k-th zero when the table knows the next one, else the k-th ordinate.
  ZeroTable first(std::size_t k) const;

 private:
  std::vector<ExtendedReal> ordinates_;
  ZeroSource source_ = ZeroSource::computed;
  ExtendedReal claimed_accuracy_{ExtendedReal::kMinDigits};
  ExtendedReal height_{ExtendedReal::kMinDigits};
};

inline constexpr double kDefaultMaxHeight = 1.0e4;

/// Riemann-Siegel theta: arg Gamma(1/4 + it/2) - (t/2) ln pi, continuous in t.
ExtendedReal theta(const ExtendedReal& t);

/// Hardy's Z(t) = e^{i theta(t)} zeta(1/2 + it), with zeta from Euler-Maclaurin
/// summation of the Dirichlet series. Accurate to the precision of t for
/// 0 < t <= max_height; throws PrecisionError above it.
ExtendedReal hardy_z(const ExtendedReal& t, double max_height = kDefaultMaxHeight);

/// Double-precision Z(t) for t in [10, max_height], the workhorse of the
/// sign scan. Tables of ln n and n^-1/2 are built once at construction.
class FastHardyZ {
 public:
  explicit FastHardyZ(double max_height);
  double operator()(double t) const;
  double max_height() const { return max_height_; }

 private:
  double max_height_;
  std::vector<double> log_n_;
  std::vector<double> inv_sqrt_n_;
  std::vector<double> bernoulli_over_factorial_;  // B_2k/(2k)!
};

/// (T/2pi) ln(T/2pi) - T/2pi + 7/8
ExtendedReal smooth_zero_count(const ExtendedReal& T);

/// |#{g_j <= T} - smooth_zero_count(T)| < 2
bool zero_count_check(const ZeroTable& table, const ExtendedReal& T);

struct FindOptions {
  double max_height = kDefaultMaxHeight;
  /// Grid step as a fraction of 0.5/density(t) (capped at 1).
  double step_fraction = 1.0;
  /// Count checks every this many units of height.
  double checkpoint_spacing = 50.0;
  unsigned workers = 0;
  int digits = ExtendedReal::kDefaultDigits;
};

/// Every located zero with the final sign-change bracket around it.
struct ZeroScan {
  std::vector<double> ordinates;
  std::vector<std::pair<double, double>> brackets;
  std::size_t rescans = 0;
};

/// Sign scan + refinement, returning the raw brackets. Throws
/// MissedZeroError when a count check fails after rescanning.
ZeroScan scan_zeros(double t_max, double refine_tol, const FindOptions& options = {});

/// All zeros with ordinate <= t_max as a computed ZeroTable.
ZeroTable find_zeros(const ExtendedReal& t_max, const ExtendedReal& refine_tol,
                     const FindOptions& options = {});

struct LoadOptions {
  int digits = ExtendedReal::kDefaultDigits;
  /// Overrides the accuracy inferred from the number of decimals (<= 0 keeps it).
  double claimed_accuracy = 0.0;
};

/// Parses the text format: one decimal ordinate per line, ascending, '#'
/// comments and blank lines ignored. Validates order and the zero count.
ZeroTable parse_zero_table(std::istream& in, const LoadOptions& options = {});
ZeroTable load_zero_table(const std::filesystem::path& path, const LoadOptions& options = {});

/// Writes the text format with `decimals` digits after the point.
void write_zero_table(std::ostream& out, const ZeroTable& table, int decimals = 12);

}  // namespace zetasum::zeros
