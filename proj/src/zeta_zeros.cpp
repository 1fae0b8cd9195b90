#include "zetasum/zeta_zeros.hpp"

#include "zetasum/complex.hpp"
#include "zetasum/errors.hpp"
#include "zetasum/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>

namespace zetasum::zeros {

namespace {

constexpr double kScanStart = 10.0;  // Z(t) < 0 on (0, 14.13): nothing to find below

unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

// out[i] = fn(i) for i < n. Each element is computed independently, so the
// result does not depend on the number of workers.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t n, unsigned workers, Fn fn) {
  std::vector<T> out(n);
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n / 64, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) out[i] = fn(i);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

int digits_for_height(const ExtendedReal& t) {
  return t.digits() + 10 + static_cast<int>(std::ceil(std::log10(std::abs(t.to_double()) + 1.0)));
}

double density(double t) { return std::log(t / (2 * std::numbers::pi)) / (2 * std::numbers::pi); }

double grid_step(double t, double fraction) {
  double d = density(t);
  double step = d > 0 ? std::min(1.0, 0.5 / d) : 1.0;
  return step * fraction;
}

bool positive(double z) { return z >= 0.0; }

struct Bracket {
  double a, b, fa, fb;
};

// Samples the interval [a, b] more finely when |Z| dips towards zero without
// changing sign; a close pair of zeros hides inside such a dip.
void search_dip(const FastHardyZ& z, double a, double b, double fa, double fb, int depth,
                std::vector<Bracket>& found) {
  constexpr int kPieces = 8;
  double t[kPieces + 1];
  double v[kPieces + 1];
  for (int i = 0; i <= kPieces; ++i) {
    t[i] = a + (b - a) * i / kPieces;
    v[i] = i == 0 ? fa : (i == kPieces ? fb : z(t[i]));
  }
  bool crossed = false;
  for (int i = 0; i < kPieces; ++i) {
    if (positive(v[i]) != positive(v[i + 1])) {
      found.push_back({t[i], t[i + 1], v[i], v[i + 1]});
      crossed = true;
    }
  }
  if (crossed || depth >= 14 || b - a < 1e-7) return;
  int j = 0;
  for (int i = 1; i <= kPieces; ++i) {
    if (std::abs(v[i]) < std::abs(v[j])) j = i;
  }
  if (j == 0 || j == kPieces) return;
  search_dip(z, t[j - 1], t[j + 1], v[j - 1], v[j + 1], depth + 1, found);
}

std::vector<Bracket> scan_window(const FastHardyZ& z, double lo, double hi, double fraction,
                                 unsigned workers) {
  std::vector<double> pts;
  for (double t = lo; t < hi; t += grid_step(t, fraction)) pts.push_back(t);
  pts.push_back(hi);
  auto vals = parallel_map<double>(pts.size(), workers, [&](std::size_t i) { return z(pts[i]); });

  std::vector<Bracket> out;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (positive(vals[i]) != positive(vals[i + 1])) out.push_back({pts[i], pts[i + 1], vals[i], vals[i + 1]});
  }
  std::vector<std::size_t> dips;
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    bool same = positive(vals[i - 1]) == positive(vals[i]) && positive(vals[i]) == positive(vals[i + 1]);
    if (same && std::abs(vals[i]) < std::abs(vals[i - 1]) && std::abs(vals[i]) < std::abs(vals[i + 1])) {
      dips.push_back(i);
    }
  }
  auto dip_brackets = parallel_map<std::vector<Bracket>>(dips.size(), workers, [&](std::size_t k) {
    std::vector<Bracket> found;
    std::size_t i = dips[k];
    search_dip(z, pts[i - 1], pts[i + 1], vals[i - 1], vals[i + 1], 0, found);
    return found;
  });
  for (auto& v : dip_brackets) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end(), [](const Bracket& x, const Bracket& y) { return x.a < y.a; });
  return out;
}

// Safeguarded secant (Illinois) inside the bracket, falling back to bisection
// whenever a step fails to halve the bracket. Trial points stay at least
// 0.45 tol inside the bracket, so a root hugging one end is pinned down by a
// bracket of width <= tol.
std::pair<double, double> refine(const FastHardyZ& z, Bracket br, double tol) {
  double a = br.a, b = br.b, fa = br.fa, fb = br.fb;
  bool bisect = false;
  int side = 0;
  while (b - a > tol) {
    const double width = b - a;
    double x = bisect ? 0.5 * (a + b) : a - fa * (b - a) / (fb - fa);
    if (!std::isfinite(x)) x = 0.5 * (a + b);
    x = std::clamp(x, a + 0.45 * tol, b - 0.45 * tol);
    const double fx = z(x);
    if (positive(fx) == positive(fa)) {
      a = x;
      fa = fx;
      if (side == -1) fb *= 0.5;
      side = -1;
    } else {
      b = x;
      fb = fx;
      if (side == 1) fa *= 0.5;
      side = 1;
    }
    bisect = (b - a) > 0.5 * width;
  }
  return {a, b};
}

struct Checkpoints {
  std::vector<double> heights;
};

std::size_t count_below(const std::vector<double>& zs, double T) {
  return static_cast<std::size_t>(std::upper_bound(zs.begin(), zs.end(), T) - zs.begin());
}

double smooth_count_d(double T) {
  double x = T / (2 * std::numbers::pi);
  return x * std::log(x) - x + 0.875;
}

bool count_ok(const std::vector<double>& zs, double T) {
  return std::abs(static_cast<double>(count_below(zs, T)) - smooth_count_d(T)) < 2.0;
}

}  // namespace

ZeroTable::ZeroTable(std::vector<ExtendedReal> ordinates, ZeroSource source,
                     ExtendedReal claimed_accuracy, ExtendedReal height)
    : ordinates_(std::move(ordinates)),
      source_(source),
      claimed_accuracy_(std::move(claimed_accuracy)),
      height_(std::move(height)) {
  for (std::size_t i = 0; i < ordinates_.size(); ++i) {
    if (ordinates_[i].sign() <= 0) throw ZeroTableError("ordinate must be positive", i + 1);
    if (i > 0 && !(ordinates_[i - 1] < ordinates_[i])) {
      throw ZeroTableError("ordinates must be strictly increasing", i + 1);
    }
  }
  if (!ordinates_.empty() && height_ < ordinates_.back()) {
    throw ZeroTableError("table height below its last ordinate");
  }
}

ZeroTable ZeroTable::first(std::size_t k) const {
  k = std::min(k, ordinates_.size());
  std::vector<ExtendedReal> head(ordinates_.begin(), ordinates_.begin() + static_cast<std::ptrdiff_t>(k));
  ExtendedReal h = height_;
  if (k < ordinates_.size()) {
    h = k == 0 ? ldexp(ordinates_[0], -1) : ldexp(ordinates_[k - 1] + ordinates_[k], -1);
  }
  return ZeroTable(std::move(head), source_, claimed_accuracy_, std::move(h));
}

ExtendedReal theta(const ExtendedReal& t) {
  const int w = digits_for_height(t);
  const ExtendedReal tw = t.with_digits(w);
  const ExtendedReal quarter(0.25, w);
  const ExtendedReal half_t = ldexp(tw, -1);
  // Im ln Gamma(z) for z = 1/4 + it/2, shifted right until Stirling converges.
  const double threshold = 10.0 + w / 2.0;
  const double modulus = std::hypot(0.25, tw.to_double() / 2);
  const long shift = modulus >= threshold ? 0 : static_cast<long>(std::ceil(threshold));
  ExtendedReal arg_sum(w);
  for (long j = 0; j < shift; ++j) arg_sum += atan2(half_t, quarter + j);
  Complex y(quarter + shift, half_t);
  const Complex ln_y = log(y);
  Complex lg = (y - Complex(ExtendedReal(0.5, w), ExtendedReal(w))) * ln_y - y;
  const ExtendedReal eps = power_of_ten(-w, w);
  const Complex inv_y = Complex(ExtendedReal(1L, w), ExtendedReal(w)) / y;
  const Complex inv_y2 = inv_y * inv_y;
  Complex power = inv_y;
  for (int j = 1;; ++j) {
    Complex term = power * (ExtendedReal(bernoulli_even(j), w) / static_cast<long>(2 * j * (2 * j - 1)));
    lg += term;
    if (abs(term) < eps) break;
    power *= inv_y2;
  }
  ExtendedReal result = lg.im - arg_sum - half_t * log(pi(w));
  return result.with_digits(t.digits());
}

// zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
//           + sum_k B_2k/(2k)! s(s+1)...(s+2k-2) N^(-s-2k+1) + R.
// N >= t/pi keeps |s + 2k| / (2 pi N) below ~1/2, so each correction term
// gains about a factor four.
ExtendedReal hardy_z(const ExtendedReal& t, double max_height) {
  if (t.sign() <= 0) throw DomainError("hardy_z requires t > 0");
  if (t.to_double() > max_height) {
    throw PrecisionError("hardy_z: t = " + t.to_string(12) + " above supported height " +
                         std::to_string(max_height));
  }
  const int w = digits_for_height(t);
  const ExtendedReal tw = t.with_digits(w);
  const long N = std::max<long>(w, static_cast<long>(std::ceil(tw.to_double() / std::numbers::pi)) + w);

  Complex zeta(w);
  ExtendedReal ln_n(w), mag(w), sn(w), cs(w);
  for (long n = 1; n < N; ++n) {
    ExtendedReal nn(n, w);
    ln_n = log(nn);
    mag = 1L / sqrt(nn);
    ExtendedReal phase = tw * ln_n;
    mpfr_sin_cos(sn.get(), cs.get(), phase.get(), MPFR_RNDN);
    zeta.re += mag * cs;
    zeta.im -= mag * sn;
  }
  const ExtendedReal n_big(N, w);
  const ExtendedReal ln_big = log(n_big);
  ExtendedReal phase = tw * ln_big;
  mpfr_sin_cos(sn.get(), cs.get(), phase.get(), MPFR_RNDN);
  const ExtendedReal mag_big = 1L / sqrt(n_big);
  const Complex n_pow(mag_big * cs, -(mag_big * sn));  // N^-s
  const Complex s(ExtendedReal(0.5, w), tw);
  const Complex one(ExtendedReal(1L, w), ExtendedReal(w));
  zeta += n_pow * n_big / (s - one);
  zeta += n_pow * ExtendedReal(0.5, w);

  const ExtendedReal eps = power_of_ten(-w, w);
  const ExtendedReal inv_n2 = 1L / (n_big * n_big);
  Complex rising = s;                            // s(s+1)...(s+2k-2)
  Complex power = n_pow * (1L / n_big);          // N^(-s-2k+1)
  ExtendedReal factorial(2L, w);                 // (2k)!
  for (int k = 1; k <= kMaxBernoulliIndex; ++k) {
    Complex term = rising * power * (ExtendedReal(bernoulli_even(k), w) / factorial);
    zeta += term;
    if (abs(term) < eps) break;
    rising *= s + Complex(ExtendedReal(static_cast<long>(2 * k - 1), w), ExtendedReal(w));
    rising *= s + Complex(ExtendedReal(static_cast<long>(2 * k), w), ExtendedReal(w));
    power = power * inv_n2;
    factorial *= static_cast<long>((2 * k + 1) * (2 * k + 2));
  }

  const ExtendedReal th = theta(tw);
  ExtendedReal z = cos(th) * zeta.re - sin(th) * zeta.im;
  return z.with_digits(t.digits());
}

namespace {

long fast_terms(double t) { return std::max<long>(10, static_cast<long>(std::ceil(0.25 * t)) + 10); }

}  // namespace

FastHardyZ::FastHardyZ(double max_height) : max_height_(max_height) {
  const long n_max = fast_terms(max_height) + 1;
  log_n_.resize(static_cast<std::size_t>(n_max) + 1);
  inv_sqrt_n_.resize(static_cast<std::size_t>(n_max) + 1);
  for (long n = 1; n <= n_max; ++n) {
    log_n_[static_cast<std::size_t>(n)] = std::log(static_cast<double>(n));
    inv_sqrt_n_[static_cast<std::size_t>(n)] = 1.0 / std::sqrt(static_cast<double>(n));
  }
  double factorial = 1.0;
  bernoulli_over_factorial_.push_back(1.0);
  for (int k = 1; k <= 60; ++k) {
    factorial *= static_cast<double>((2 * k - 1) * (2 * k));
    bernoulli_over_factorial_.push_back(bernoulli_even(k).to_double() / factorial);
  }
}

double FastHardyZ::operator()(double t) const {
  if (!(t >= kScanStart) || t > max_height_) {
    throw PrecisionError("FastHardyZ: t = " + std::to_string(t) + " outside [10, " +
                         std::to_string(max_height_) + "]");
  }
  using C = std::complex<double>;
  const long N = fast_terms(t);
  double re = 0.0, im = 0.0;
  for (long n = 1; n < N; ++n) {
    const double ph = t * log_n_[static_cast<std::size_t>(n)];
    const double m = inv_sqrt_n_[static_cast<std::size_t>(n)];
    re += m * std::cos(ph);
    im -= m * std::sin(ph);
  }
  C zeta(re, im);
  const double nd = static_cast<double>(N);
  const double ph = t * log_n_[static_cast<std::size_t>(N)];
  const C n_pow = inv_sqrt_n_[static_cast<std::size_t>(N)] * C(std::cos(ph), -std::sin(ph));
  const C s(0.5, t);
  zeta += n_pow * nd / (s - 1.0) + 0.5 * n_pow;
  C rising = s;
  C power = n_pow / nd;
  for (std::size_t k = 1; k < bernoulli_over_factorial_.size(); ++k) {
    const C term = bernoulli_over_factorial_[k] * rising * power;
    zeta += term;
    if (std::abs(term) < 1e-17) break;
    rising *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
    power /= nd * nd;
  }
  // theta(t) ~ (t/2) ln(t/2pi) - t/2 - pi/8 + sum_k (1 - 2^(1-2k)) |B_2k| / (4k(2k-1) t^(2k-1));
  // at t >= 10 six corrections leave an error near 1e-14.
  double th = 0.5 * t * std::log(t / (2 * std::numbers::pi)) - 0.5 * t - std::numbers::pi / 8;
  double inv_t = 1.0 / t, power_t = inv_t;
  for (int k = 1; k <= 6; ++k) {
    double b = std::abs(bernoulli_even(k).to_double());
    th += (1.0 - std::ldexp(1.0, 1 - 2 * k)) * b / (4.0 * k * (2 * k - 1)) * power_t;
    power_t *= inv_t * inv_t;
  }
  return std::cos(th) * zeta.real() - std::sin(th) * zeta.imag();
}

ExtendedReal smooth_zero_count(const ExtendedReal& T) {
  const int w = T.digits() + 5;
  ExtendedReal x = T.with_digits(w) / ldexp(pi(w), 1);
  ExtendedReal r = x * log(x) - x + ExtendedReal(0.875, w);
  return r.with_digits(T.digits());
}

bool zero_count_check(const ZeroTable& table, const ExtendedReal& T) {
  const auto& zs = table.ordinates();
  auto count = static_cast<long>(std::upper_bound(zs.begin(), zs.end(), T) - zs.begin());
  ExtendedReal diff = abs(ExtendedReal(count, T.digits()) - smooth_zero_count(T));
  return diff < 2L;
}

ZeroScan scan_zeros(double t_max, double refine_tol, const FindOptions& options) {
  if (!(t_max > 0)) throw DomainError("find_zeros requires t_max > 0");
  if (t_max > options.max_height) {
    throw PrecisionError("find_zeros: t_max " + std::to_string(t_max) + " above supported height " +
                         std::to_string(options.max_height));
  }
  if (!(refine_tol > 0) || refine_tol < 4 * (std::nextafter(t_max, 2 * t_max) - t_max)) {
    throw PrecisionError("find_zeros: refine_tol too small for double resolution at t_max");
  }
  ZeroScan scan;
  if (t_max <= kScanStart) return scan;
  const unsigned workers = resolve_workers(options.workers);
  const FastHardyZ z(t_max);

  auto locate = [&](double lo, double hi, double fraction) {
    auto brackets = scan_window(z, lo, hi, fraction, workers);
    auto refined = parallel_map<std::pair<double, double>>(
        brackets.size(), workers, [&](std::size_t i) { return refine(z, brackets[i], refine_tol); });
    return refined;
  };

  std::vector<std::pair<double, double>> found = locate(kScanStart, t_max, options.step_fraction);
  auto ordinates = [&] {
    std::vector<double> zs;
    zs.reserve(found.size());
    for (auto& [a, b] : found) zs.push_back(0.5 * (a + b));
    return zs;
  };

  std::vector<double> checkpoints;
  for (double c = kScanStart + options.checkpoint_spacing; c < t_max; c += options.checkpoint_spacing) {
    checkpoints.push_back(c);
  }
  checkpoints.push_back(t_max);

  double previous = kScanStart;
  for (double c : checkpoints) {
    std::vector<double> zs = ordinates();
    if (!count_ok(zs, c)) {
      // Rescan from the gap before the previous checkpoint to the gap after
      // this one, at a quarter of the step.
      std::size_t i0 = count_below(zs, previous);
      std::size_t i1 = count_below(zs, c);
      auto gap_midpoint = [&](std::size_t i, double fallback) {
        return i > 0 && i < zs.size() ? 0.5 * (zs[i - 1] + zs[i]) : fallback;
      };
      const double lo = i0 == 0 ? kScanStart : gap_midpoint(i0, previous);
      const double hi = i1 == zs.size() ? t_max : gap_midpoint(i1, c);
      auto fresh = locate(lo, hi, options.step_fraction / 4);
      std::vector<std::pair<double, double>> merged;
      for (auto& br : found) {
        double mid = 0.5 * (br.first + br.second);
        if (mid < lo || mid > hi) merged.push_back(br);
      }
      merged.insert(merged.end(), fresh.begin(), fresh.end());
      std::sort(merged.begin(), merged.end());
      found = std::move(merged);
      ++scan.rescans;
      if (!count_ok(ordinates(), c)) {
        throw MissedZeroError("zero count check failed at height " + std::to_string(c) +
                              " after rescanning [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
      }
    }
    previous = c;
  }
  scan.brackets = found;
  scan.ordinates = ordinates();
  return scan;
}

ZeroTable find_zeros(const ExtendedReal& t_max, const ExtendedReal& refine_tol, const FindOptions& options) {
  ZeroScan scan = scan_zeros(t_max.to_double(), refine_tol.to_double(), options);
  std::vector<ExtendedReal> ords;
  ords.reserve(scan.ordinates.size());
  for (double g : scan.ordinates) ords.emplace_back(g, options.digits);
  return ZeroTable(std::move(ords), ZeroSource::computed, refine_tol.with_digits(options.digits),
                   t_max.with_digits(options.digits));
}

ZeroTable parse_zero_table(std::istream& in, const LoadOptions& options) {
  std::vector<ExtendedReal> ords;
  std::string line;
  std::size_t line_no = 0;
  int min_decimals = -1;
  while (std::getline(in, line)) {
    ++line_no;
    auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos || line[begin] == '#') continue;
    auto end = line.find_last_not_of(" \t\r");
    std::string text = line.substr(begin, end - begin + 1);
    ExtendedReal g(options.digits);
    try {
      g = ExtendedReal::parse(text, options.digits);
    } catch (const std::invalid_argument&) {
      throw ZeroTableError("cannot parse ordinate '" + text + "'", line_no);
    }
    if (g.sign() <= 0) throw ZeroTableError("ordinate must be positive", line_no);
    if (!ords.empty() && !(ords.back() < g)) {
      throw ZeroTableError("ordinates must be strictly increasing", line_no);
    }
    auto dot = text.find('.');
    int decimals = dot == std::string::npos ? 0 : static_cast<int>(text.size() - dot - 1);
    if (text.find_first_of("eE") != std::string::npos) decimals = 0;
    min_decimals = min_decimals < 0 ? decimals : std::min(min_decimals, decimals);
    ords.push_back(std::move(g));
  }
  ExtendedReal accuracy = options.claimed_accuracy > 0
                              ? ExtendedReal(options.claimed_accuracy, options.digits)
                              : ldexp(power_of_ten(-std::max(min_decimals, 0), options.digits), -1);
  ExtendedReal height = ords.empty() ? ExtendedReal(options.digits) : ords.back();
  ZeroTable table(std::move(ords), ZeroSource::ingested, std::move(accuracy), height);
  if (!table.empty() && !zero_count_check(table, table.height())) {
    throw ZeroTableError("zero count check failed: " + std::to_string(table.size()) +
                         " zeros up to height " + table.height().to_string(12) + ", expected about " +
                         smooth_zero_count(table.height()).to_string(6));
  }
  return table;
}

ZeroTable load_zero_table(const std::filesystem::path& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw ZeroTableError("cannot open zero table " + path.string());
  return parse_zero_table(in, options);
}

void write_zero_table(std::ostream& out, const ZeroTable& table, int decimals) {
  for (const auto& g : table.ordinates()) out << g.to_fixed(decimals) << '\n';
}

}  // namespace zetasum::zeros
