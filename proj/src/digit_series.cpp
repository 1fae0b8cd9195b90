#include "zetasum/digit_series.hpp"

#include "zetasum/errors.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace zetasum::digits {

namespace {

constexpr std::int64_t kChunk = 1 << 15;

// N0/N1 of floor(n/2) and of n, as needed by the two series families.
std::int64_t length(std::uint64_t m) { return std::bit_width(m); }
std::int64_t ones(std::uint64_t m) { return std::popcount(m); }
std::int64_t zeros(std::uint64_t m) { return length(m) - ones(m); }

unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

// Runs fn(chunk_index) for every chunk and returns results in chunk order,
// independently of how chunks were assigned to threads.
template <typename Result, typename Fn>
std::vector<Result> map_chunks(std::size_t chunks, unsigned workers, Result init, Fn fn) {
  std::vector<Result> out(chunks, init);
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(chunks, 1)));
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) out[c] = fn(c);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t c = w; c < chunks; c += workers) out[c] = fn(c);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

void check_index(Series s, std::int64_t n) {
  if (n < first_index(s)) {
    throw DomainError(std::string(series_name(s)) + ": index " + std::to_string(n) +
                      " below first index " + std::to_string(first_index(s)));
  }
  if (n > kMaxIndex) {
    throw std::invalid_argument(std::string(series_name(s)) + ": index " + std::to_string(n) +
                                " exceeds the supported maximum");
  }
}

ExtendedReal real_term(const Term& t, int digits) {
  ExtendedReal x(t.numerator, digits);
  for (std::uint64_t f : t.factors) {
    if (f != 1) mpfr_div_ui(x.get(), x.get(), f, MPFR_RNDN);
  }
  return x;
}

}  // namespace

DigitCounts digit_counts(std::int64_t m) {
  if (m <= 0) throw DomainError("digit_counts requires m >= 1, got " + std::to_string(m));
  const auto u = static_cast<std::uint64_t>(m);
  return {static_cast<std::uint32_t>(zeros(u)), static_cast<std::uint32_t>(ones(u))};
}

std::string_view series_name(Series s) {
  switch (s) {
    case Series::gamma_vacca_alternating: return "gamma_vacca_alternating";
    case Series::log4pi_alternating: return "log4pi_alternating";
    case Series::gamma_paired: return "gamma_paired";
    case Series::log4pi_paired: return "log4pi_paired";
    case Series::gamma_addison: return "gamma_addison";
    case Series::log2pi_dual: return "log2pi_dual";
    case Series::combined_pochti: return "combined_pochti";
    case Series::log2_series: return "log2_series";
    case Series::main_series: return "main_series";
    case Series::pochtipochti_series: return "pochtipochti_series";
  }
  return "unknown";
}

mpz_class Term::denominator() const {
  mpz_class d(1);
  for (std::uint64_t f : factors) d *= mpz_class(static_cast<unsigned long>(f));
  return d;
}

std::int64_t first_index(Series s) {
  switch (s) {
    case Series::gamma_vacca_alternating:
    case Series::log4pi_alternating: return 2;
    case Series::main_series: return 3;
    default: return 1;
  }
}

ExactRational offset(Series s) {
  switch (s) {
    case Series::gamma_addison: return ExactRational(1, 2);
    case Series::log2pi_dual: return ExactRational(-1, 2);
    default: return ExactRational(0L);
  }
}

bool has_positive_terms(Series s) {
  switch (s) {
    case Series::gamma_paired:
    case Series::gamma_addison:
    case Series::combined_pochti:
    case Series::log2_series:
    case Series::main_series:
    case Series::pochtipochti_series: return true;
    default: return false;
  }
}

Term term(Series s, std::int64_t n) {
  check_index(s, n);
  const auto u = static_cast<std::uint64_t>(n);
  const std::array<std::uint64_t, 3> cubic{2 * u, 2 * u + 1, 2 * u + 2};
  const std::int64_t sign = (n % 2 == 0) ? 1 : -1;
  switch (s) {
    case Series::gamma_vacca_alternating:
      return {sign * (ones(u / 2) + zeros(u / 2)), {u, 1, 1}};
    case Series::log4pi_alternating:
      return {sign * (ones(u / 2) - zeros(u / 2)), {u, 1, 1}};
    case Series::gamma_paired: return {ones(u) + zeros(u), {2 * u, 2 * u + 1, 1}};
    case Series::log4pi_paired: return {ones(u) - zeros(u), {2 * u, 2 * u + 1, 1}};
    case Series::gamma_addison: return {ones(u) + zeros(u), cubic};
    case Series::log2pi_dual: return {ones(u) - zeros(u), cubic};
    case Series::combined_pochti: return {2 * ones(u), cubic};
    case Series::log2_series: return {1, cubic};
    case Series::main_series:
    case Series::pochtipochti_series: return {2 * ones(u) + 3, cubic};
  }
  throw std::logic_error("unhandled series");
}

// Tail bounds. Every summand magnitude is dominated by c(n) = a (log2 n + b)/n^p
// because N1(n) + N0(n) = floor(log2 n) + 1 <= log2 n + 1 and the cubic
// denominator exceeds 8n^3 (quadratic: 4n^2). Each c is decreasing for
// n >= 1, so sum_{n>N} c(n) <= int_N^inf c, which evaluates to
//   quadratic, a = 1/4:  (log2 N + b + 1/ln 2) / (4N)
//   cubic,     a = 1/8:  (log2 N + b + 1/(2 ln 2)) / (16 N^2)
// The closed forms below round those constants up.
//
// The alternating pair groups n = 2k, 2k+1 into d(k)/(2k(2k+1)) with
// d = N1 +- N0 of k, |d(k)| <= log2 k + 1. With K = floor(N/2) the complete
// pairs beyond the cut sum to at most P(K) = (log2 K + 1 + 1/ln 2)/(4K). An
// even N also leaves the lone term -d(K)/(N+1) in the tail. For the Vacca
// form d > 0, so the lone term and the pairs have opposite signs and the tail
// is at most max of the two, which never exceeds (floor(log2 N) + 2)/N. For
// the ln(4/pi) form the signs are unrelated and the two pieces add.
ExtendedReal tail_bound(Series s, std::int64_t N, int digits) {
  check_index(s, N);
  const int w = digits + 5;
  const ExtendedReal n(static_cast<long>(N), w);
  const ExtendedReal lg = log2(n);
  const ExtendedReal inv_ln2 = 1L / ln2(w);
  auto pair_bound = [&](std::int64_t k) {
    ExtendedReal kk(static_cast<long>(k), w);
    return (log2(kk) + 1L + inv_ln2) / (4L * kk);
  };
  ExtendedReal bound(w);
  switch (s) {
    case Series::gamma_vacca_alternating:
      bound = ExtendedReal(static_cast<long>(std::bit_width(static_cast<std::uint64_t>(N)) - 1 + 2), w) / n;
      break;
    case Series::log4pi_alternating: {
      const std::int64_t k = N / 2;
      bound = pair_bound(k);
      if (N % 2 == 0) {
        bound += ExtendedReal(static_cast<long>(length(static_cast<std::uint64_t>(k))), w) /
                 ExtendedReal(static_cast<long>(N + 1), w);
      }
      break;
    }
    case Series::gamma_paired:
    case Series::log4pi_paired: bound = (lg + 3L) / (4L * n); break;
    case Series::gamma_addison:
    case Series::log2pi_dual: bound = (lg + 3L) / (8L * n * n); break;
    case Series::log2_series: bound = 1L / (16L * n * n); break;
    case Series::combined_pochti:
    case Series::main_series:
    case Series::pochtipochti_series:
      bound = (2L * lg + 5L + 3L * inv_ln2) / (16L * n * n);
      break;
  }
  // Round the bound up past the working-precision noise.
  bound *= (1L + power_of_ten(-digits + 2, w));
  return bound.with_digits(digits);
}

SeriesResult evaluate(Series s, std::int64_t N, const SummationOptions& options) {
  check_index(s, N);
  if (options.exact_terms < 0 || options.exact_terms > kMaxExactTerms) {
    throw std::invalid_argument("exact_terms must be in [0, " + std::to_string(kMaxExactTerms) + "]");
  }
  const int digits = options.digits;
  const int w = digits + 10;
  const unsigned workers = resolve_workers(options.workers);
  const std::int64_t first = first_index(s);
  const std::int64_t exact_last = std::min(N, std::max(options.exact_terms, first - 1));

  // Exact prefix [first, exact_last].
  ExactRational exact = offset(s);
  if (exact_last >= first) {
    const auto span = static_cast<std::size_t>(exact_last - first + 1);
    const std::size_t chunks = (span + kChunk - 1) / kChunk;
    auto parts = map_chunks(chunks, workers, ExactRational(0L), [&](std::size_t c) {
      const std::int64_t lo = first + static_cast<std::int64_t>(c) * kChunk;
      const std::int64_t hi = std::min(exact_last, lo + kChunk - 1);
      mpq_class acc;
      for (std::int64_t k = lo; k <= hi; ++k) {
        Term t = term(s, k);
        acc += mpq_class(mpz_class(t.numerator), t.denominator());
      }
      return ExactRational(std::move(acc));
    });
    for (const auto& p : parts) exact += p;
  }

  // Floating remainder (exact_last, N], fixed chunk boundaries and in-order
  // reduction so the rounding is the same for any worker count.
  ExtendedReal floating(w);
  if (N > exact_last) {
    const std::int64_t lo0 = exact_last + 1;
    const auto span = static_cast<std::size_t>(N - lo0 + 1);
    const std::size_t chunks = (span + kChunk - 1) / kChunk;
    auto parts = map_chunks(chunks, workers, ExtendedReal(w), [&](std::size_t c) {
      const std::int64_t lo = lo0 + static_cast<std::int64_t>(c) * kChunk;
      const std::int64_t hi = std::min(N, lo + kChunk - 1);
      ExtendedReal acc(w);
      for (std::int64_t k = lo; k <= hi; ++k) acc += real_term(term(s, k), w);
      return acc;
    });
    for (const auto& p : parts) floating += p;
  }

  SeriesResult r;
  r.series_id = std::string(series_name(s));
  r.terms_used = N - first + 1;
  r.positive_terms = has_positive_terms(s);
  ExtendedReal total = ExtendedReal(exact, w) + floating;
  r.value = total.with_digits(digits);
  if (exact_last == N) r.exact_sum = exact;
  // Final rounding to `digits` plus the floating accumulation (each of the
  // floating terms carries at most four roundings at w digits).
  ExtendedReal slack = 2L * abs(total) * power_of_ten(-digits, w) +
                       ExtendedReal(static_cast<long>(4 * (N - exact_last) + 4), w) * power_of_ten(-w + 1, w);
  r.tail_bound = (tail_bound(s, N, digits).with_digits(w) + slack).with_digits(digits);
  return r;
}

SeriesResult gamma_vacca_alternating(std::int64_t N, const SummationOptions& o) {
  return evaluate(Series::gamma_vacca_alternating, N, o);
}
SeriesResult log4pi_alternating(std::int64_t N, const SummationOptions& o) {
  return evaluate(Series::log4pi_alternating, N, o);
}
SeriesResult gamma_paired(std::int64_t N, const SummationOptions& o) {
  return evaluate(Series::gamma_paired, N, o);
}
SeriesResult log4pi_paired(std::int64_t N, const SummationOptions& o) {
  return evaluate(Series::log4pi_paired, N, o);
}
SeriesResult gamma_addison(std::int64_t N, const SummationOptions& o) {
  return evaluate(Series::gamma_addison, N, o);
}
SeriesResult log2pi_dual(std::int64_t N, const SummationOptions& o) {
  return evaluate(Series::log2pi_dual, N, o);
}
SeriesResult combined_pochti(std::int64_t N, const SummationOptions& o) {
  return evaluate(Series::combined_pochti, N, o);
}
SeriesResult log2_series(std::int64_t N, const SummationOptions& o) {
  return evaluate(Series::log2_series, N, o);
}
SeriesResult main_series(std::int64_t N, const SummationOptions& o) {
  return evaluate(Series::main_series, N, o);
}
SeriesResult pochtipochti_series(std::int64_t N, const SummationOptions& o) {
  return evaluate(Series::pochtipochti_series, N, o);
}

}  // namespace zetasum::digits
