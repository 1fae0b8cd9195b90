// zetasum: positive-term representations of gamma - ln(4 pi) + 2 and the
// zero sums around it, from the command line.
//
// Exit status: 0 pass, 1 computational failure, 2 usage error.

#include "zetasum/criteria.hpp"
#include "zetasum/errors.hpp"
#include "zetasum/report.hpp"
#include "zetasum/zeta_zeros.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace zetasum;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int precision = ExtendedReal::kDefaultDigits;
  std::optional<std::int64_t> terms;
  std::string zeros_file;
  std::optional<double> height;
  std::string format = "text";
  bool no_tail_correction = false;
  unsigned workers = 0;
};

double refine_tolerance(double height) {
  // Far above double resolution at the height, far below the zero spacing.
  return std::max(1e-10, 8 * (std::nextafter(height, 2 * height) - height));
}

zeros::ZeroTable zero_table(const Config& c) {
  if (!c.zeros_file.empty()) {
    zeros::LoadOptions lo;
    lo.digits = c.precision;
    return zeros::load_zero_table(c.zeros_file, lo);
  }
  const double h = c.height.value_or(zeros::kDefaultMaxHeight);
  zeros::FindOptions fo;
  fo.digits = c.precision;
  fo.workers = c.workers;
  fo.max_height = std::max(h, zeros::kDefaultMaxHeight);
  return zeros::find_zeros(ExtendedReal(h, c.precision), ExtendedReal(refine_tolerance(h), c.precision), fo);
}

template <typename T>
void emit(const Config& c, const T& value) {
  if (c.format == "json") {
    std::cout << report::to_json(value);
  } else if (c.format == "csv") {
    std::cout << report::to_csv(value);
  } else {
    std::cout << report::to_text(value);
  }
}

int cmd_constants(const Config& c) {
  auto rs = report::constants(c.precision, c.terms, c.workers);
  emit(c, rs);
  for (const auto& r : rs) {
    if (!r.passed()) return kFail;
  }
  return kPass;
}

int cmd_verify(const Config& c, const std::string& id) {
  const auto& ids = criteria::identity_catalog();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
    std::string known;
    for (const auto& k : ids) known += (known.empty() ? "" : ", ") + k;
    throw UsageError("unknown identity '" + id + "' (known: " + known + ")");
  }
  criteria::VerifyParams p;
  p.digits = c.precision;
  p.terms = c.terms;
  p.tail_correction = !c.no_tail_correction;
  p.workers = c.workers;
  std::optional<zeros::ZeroTable> table;
  if (id == "p0_zeros") {
    table = zero_table(c);
    p.zeros = &*table;
  }
  auto r = report::from_identity(criteria::verify_identity(id, p), c.precision);
  emit(c, r);
  return r.passed() ? kPass : kFail;
}

void write_table(const zeros::ZeroTable& t, const std::string& output, int decimals) {
  if (output.empty() || output == "-") {
    zeros::write_zero_table(std::cout, t, decimals);
    return;
  }
  std::ofstream out(output);
  if (!out) throw std::runtime_error("cannot write " + output);
  zeros::write_zero_table(out, t, decimals);
}

int cmd_zeros_check(const Config& c, const std::string& file) {
  zeros::LoadOptions lo;
  lo.digits = c.precision;
  auto t = zeros::load_zero_table(file, lo);
  report::Table out{{"file", "zeros", "height", "expected_count", "count_check"}, {}};
  std::string h = t.empty() ? "0" : t.height().to_string(15);
  std::string expected = t.empty() ? "0" : zeros::smooth_zero_count(t.height()).to_string(8);
  out.rows.push_back({file, std::to_string(t.size()), h, expected, "pass"});
  emit(c, out);
  return kPass;
}

int cmd_li(const Config& c, int n_max) {
  if (n_max < 1 || n_max > criteria::kMaxLiIndex) {
    throw UsageError("li needs 1 <= n_max <= " + std::to_string(criteria::kMaxLiIndex));
  }
  auto t = zero_table(c);
  report::Table out{{"n", "lambda", "tail_bound", "zeros", "positive"}, {}};
  bool all_positive = true;
  for (int n = 1; n <= n_max; ++n) {
    auto r = criteria::li_lambda(n, t, !c.no_tail_correction);
    bool positive = r.value.sign() > 0;
    all_positive = all_positive && positive;
    out.rows.push_back({std::to_string(n), r.value.to_string(c.precision), r.tail_bound.to_string(6),
                        std::to_string(r.terms_used), positive ? "true" : "false"});
  }
  emit(c, out);
  return all_positive ? kPass : kFail;
}

int cmd_gn(const Config& c, int n, std::int64_t k) {
  if (n < 1 || n > criteria::kMaxMultisumOrder) {
    throw UsageError("gn supports n in {1, 2, 3}, got " + std::to_string(n));
  }
  if (k < 0) throw UsageError("--zeros must be nonnegative");
  auto t = zero_table(c);
  if (static_cast<std::size_t>(k) > t.size()) {
    throw UsageError("--zeros " + std::to_string(k) + " exceeds the " + std::to_string(t.size()) +
                     " zeros available");
  }
  auto r = criteria::gn_multisum(n, t, static_cast<std::size_t>(k));
  bool positive = r.value.sign() > 0;
  report::Table out{{"n", "zeros", "value", "positive"}, {}};
  out.rows.push_back({std::to_string(n), std::to_string(k), r.value.to_string(c.precision),
                      positive ? "true" : "false"});
  emit(c, out);
  return positive ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positive-term series for gamma - ln(4 pi) + 2 and sums over zeta zeros"};
  app.fallthrough();
  app.require_subcommand(1);
  Config c;
  app.add_option("--precision", c.precision, "Decimal digits")
      ->envname("ZETASUM_PRECISION")
      ->check(CLI::Range(ExtendedReal::kMinDigits, ExtendedReal::kMaxDigits));
  app.add_option("--terms", c.terms, "Series length (number of zeros for p0_zeros)")
      ->envname("ZETASUM_TERMS")
      ->check(CLI::PositiveNumber);
  app.add_option("--zeros-file", c.zeros_file, "Zero table to ingest instead of computing one")
      ->envname("ZETASUM_ZEROS_FILE");
  app.add_option("--height", c.height, "Height up to which zeros are computed")
      ->envname("ZETASUM_HEIGHT")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", c.format, "Output format")
      ->envname("ZETASUM_FORMAT")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--no-tail-correction", c.no_tail_correction, "Report raw truncated zero sums")
      ->envname("ZETASUM_NO_TAIL_CORRECTION");
  app.add_option("--workers", c.workers, "Worker threads (0: all cores); results do not depend on it")
      ->envname("ZETASUM_WORKERS");

  auto* constants = app.add_subcommand("constants", "Constants along several routes");

  std::string identity;
  auto* verify = app.add_subcommand("verify", "Compare two routes of an identity");
  verify->add_option("identity", identity, "Identity id")->required();

  auto* zeros_cmd = app.add_subcommand("zeros", "Compute, check and export zero tables");
  zeros_cmd->require_subcommand(1);
  std::string output;
  int decimals = 12;
  auto* find = zeros_cmd->add_subcommand("find", "Compute zeros up to --height");
  find->add_option("-o,--output", output, "Output file (default stdout)");
  find->add_option("--decimals", decimals, "Digits after the point")->check(CLI::Range(1, 30));
  std::string check_file;
  auto* check = zeros_cmd->add_subcommand("check", "Validate a zero table file");
  check->add_option("file", check_file, "Zero table")->required();
  std::size_t limit = 0;
  std::string export_file;
  auto* exporter = zeros_cmd->add_subcommand("export", "Write the first --limit zeros of a table");
  exporter->add_option("file", export_file, "Zero table (default: --zeros-file or computed)");
  exporter->add_option("--limit", limit, "Number of zeros (0: all)");
  exporter->add_option("-o,--output", output, "Output file (default stdout)");
  exporter->add_option("--decimals", decimals, "Digits after the point")->check(CLI::Range(1, 30));

  int n_max = 0;
  auto* li = app.add_subcommand("li", "Li coefficients lambda_1 .. lambda_n_max");
  li->add_option("n_max", n_max, "Largest n")->required();

  int gn_order = 0;
  std::int64_t gn_zeros = 100;
  auto* gn = app.add_subcommand("gn", "Partial multisum of G_n over the first K zeros");
  gn->add_option("n", gn_order, "Order n in {1, 2, 3}")->required();
  gn->add_option("--zeros", gn_zeros, "Number K of zeros");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*constants) return cmd_constants(c);
    if (*verify) return cmd_verify(c, identity);
    if (*find) {
      write_table(zero_table(c), output, decimals);
      return kPass;
    }
    if (*check) return cmd_zeros_check(c, check_file);
    if (*exporter) {
      if (!export_file.empty()) c.zeros_file = export_file;
      auto t = zero_table(c);
      write_table(limit == 0 ? t : t.first(limit), output, decimals);
      return kPass;
    }
    if (*li) return cmd_li(c, n_max);
    if (*gn) return cmd_gn(c, gn_order, gn_zeros);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
