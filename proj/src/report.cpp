#include "zetasum/report.hpp"

#include "zetasum/digit_series.hpp"
#include "zetasum/special_series.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zetasum::report {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kBoundDigits = 6;

std::string verdict(bool pass) { return pass ? "pass" : "fail"; }

RouteRow row(const std::string& label, const SeriesResult& r, int digits) {
  return {label, r.value.to_string(digits), r.terms_used, r.tail_bound.to_string(kBoundDigits)};
}

// A route assembled as offset + sum of sign * series value.
struct Derived {
  std::string label;
  ExtendedReal value;
  ExtendedReal bound;
  std::int64_t terms = 0;
};

Derived combine(std::string label, const ExtendedReal& offset,
                std::initializer_list<std::pair<long, const SeriesResult*>> parts) {
  Derived d{std::move(label), offset, ExtendedReal(offset.digits()), 0};
  for (const auto& [sign, r] : parts) {
    d.value += r->value * sign;
    d.bound += r->tail_bound * (sign < 0 ? -sign : sign);
    d.terms = std::max(d.terms, r->terms_used);
  }
  return d;
}

Derived reference(std::string label, ExtendedReal value) {
  ExtendedReal zero(value.digits());
  return {std::move(label), std::move(value), std::move(zero), 0};
}

Report compare(std::string identity, const std::vector<Derived>& routes, int digits) {
  Report out;
  out.identity = std::move(identity);
  const ExtendedReal slack = power_of_ten(5 - digits, digits);
  ExtendedReal worst(digits), tolerance(digits);
  bool pass = true;
  for (std::size_t i = 0; i < routes.size(); ++i) {
    const auto& r = routes[i];
    out.routes.push_back({r.label, r.value.to_string(digits), r.terms, r.bound.to_string(kBoundDigits)});
    if (i == 0) continue;
    ExtendedReal diff = abs(r.value - routes[0].value);
    ExtendedReal tol = routes[0].bound + r.bound + slack;
    pass = pass && diff <= tol;
    worst = max(worst, diff);
    tolerance = max(tolerance, tol);
  }
  out.discrepancy = worst.to_string(kBoundDigits);
  out.tolerance = tolerance.to_string(kBoundDigits);
  out.verdict = verdict(pass);
  return out;
}

Json report_json(const Report& r) {
  Json routes = Json::array();
  for (const auto& x : r.routes) {
    routes.push_back({{"label", x.label}, {"value", x.value}, {"terms", x.terms}, {"tail_bound", x.tail_bound}});
  }
  return {{"identity", r.identity},
          {"routes", routes},
          {"discrepancy", r.discrepancy},
          {"tolerance", r.tolerance},
          {"verdict", r.verdict}};
}

Report report_of(const Json& j) {
  try {
    Report r;
    r.identity = j.at("identity").get<std::string>();
    for (const auto& x : j.at("routes")) {
      r.routes.push_back({x.at("label").get<std::string>(), x.at("value").get<std::string>(),
                          x.at("terms").get<std::int64_t>(), x.at("tail_bound").get<std::string>()});
    }
    r.discrepancy = j.at("discrepancy").get<std::string>();
    r.tolerance = j.at("tolerance").get<std::string>();
    r.verdict = j.at("verdict").get<std::string>();
    if (r.verdict != "pass" && r.verdict != "fail") throw std::invalid_argument("verdict must be pass or fail");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
}

const char* kCsvHeader = "identity,label,value,terms,tail_bound,discrepancy,tolerance,verdict\r\n";

void csv_rows(std::ostringstream& out, const Report& r) {
  for (const auto& x : r.routes) {
    out << csv_field(r.identity) << ',' << csv_field(x.label) << ',' << csv_field(x.value) << ',' << x.terms
        << ',' << csv_field(x.tail_bound) << ',' << csv_field(r.discrepancy) << ',' << csv_field(r.tolerance)
        << ',' << csv_field(r.verdict) << "\r\n";
  }
}

}  // namespace

Report from_identity(const criteria::IdentityReport& r, int digits) {
  Report out;
  out.identity = r.identity_id;
  out.routes.push_back(row(r.route_a.label, r.route_a.result, digits));
  out.routes.push_back(row(r.route_b.label, r.route_b.result, digits));
  out.discrepancy = r.discrepancy.to_string(kBoundDigits);
  out.tolerance = r.tolerance.to_string(kBoundDigits);
  out.verdict = verdict(r.pass);
  return out;
}

std::vector<Report> constants(int digits, std::optional<std::int64_t> terms, unsigned workers) {
  const int d = digits;
  digits::SummationOptions opts;
  opts.digits = d;
  opts.workers = workers;
  const std::int64_t n_big = terms.value_or(1'000'000);
  const std::int64_t n_small = terms.value_or(10'000);

  const SeriesResult addison = digits::gamma_addison(n_big, opts);
  const SeriesResult stieltjes = special::stieltjes({0, std::max<std::int64_t>(n_small, 10), 4}, d);
  const SeriesResult paired = digits::log4pi_paired(n_big, opts);
  const SeriesResult dual = digits::log2pi_dual(n_big, opts);
  const SeriesResult log2s = digits::log2_series(n_small, opts);
  const SeriesResult pochti = digits::combined_pochti(n_big, opts);
  const SeriesResult main = digits::main_series(n_big, opts);
  const SeriesResult p01 = special::p01_integral(terms.value_or(1'000), d);

  const ExtendedReal zero(d);
  const ExtendedReal three_quarters(0.75, d);
  const ExtendedReal ln4pi = log(ldexp(pi(d), 2));

  std::vector<Report> out;
  out.push_back(compare("gamma",
                        {combine("gamma_addison", zero, {{1, &addison}}),
                         combine("stieltjes m=0", zero, {{1, &stieltjes}}),
                         reference("reference (MPFR)", euler_gamma(d))},
                        d));
  out.push_back(compare("ln(4/pi)",
                        {combine("log4pi_paired", zero, {{1, &paired}}),
                         combine("log2pi_dual + 3/4 - log2_series", three_quarters, {{1, &dual}, {-1, &log2s}}),
                         reference("reference (MPFR)", log(ExtendedReal(4L, d) / pi(d)))},
                        d));
  out.push_back(compare("ln(2)",
                        {combine("3/4 - log2_series", three_quarters, {{-1, &log2s}}),
                         combine("log4pi_paired - log2pi_dual", zero, {{1, &paired}, {-1, &dual}}),
                         reference("reference (MPFR)", ln2(d))},
                        d));
  out.push_back(compare("ln(pi)",
                        {combine("gamma_addison + 3/4 - log2_series - combined_pochti", three_quarters,
                                 {{1, &addison}, {-1, &log2s}, {-1, &pochti}}),
                         combine("3/2 - 2 log2_series - log4pi_paired", ExtendedReal(1.5, d),
                                 {{-2, &log2s}, {-1, &paired}}),
                         reference("reference (MPFR)", log(pi(d)))},
                        d));
  out.push_back(compare("gamma - ln(4 pi) + 2",
                        {combine("main_series", zero, {{1, &main}}),
                         combine("p01_integral", zero, {{1, &p01}}),
                         combine("stieltjes m=0 - ln(4 pi) + 2", 2L - ln4pi, {{1, &stieltjes}}),
                         reference("reference (MPFR)", euler_gamma(d) - ln4pi + 2L)},
                        d));
  return out;
}

std::string to_json(const Report& r) { return report_json(r).dump(2) + "\n"; }

std::string to_json(const std::vector<Report>& rs) {
  Json a = Json::array();
  for (const auto& r : rs) a.push_back(report_json(r));
  return a.dump(2) + "\n";
}

std::string to_json(const Table& t) {
  Json a = Json::array();
  for (const auto& row : t.rows) {
    Json o = Json::object();
    for (std::size_t i = 0; i < t.columns.size() && i < row.size(); ++i) o[t.columns[i]] = row[i];
    a.push_back(o);
  }
  return a.dump(2) + "\n";
}

Report report_from_json(std::string_view text) {
  Json j = parse(text);
  if (!j.is_object()) throw std::invalid_argument("report must be a JSON object");
  return report_of(j);
}

std::vector<Report> reports_from_json(std::string_view text) {
  Json j = parse(text);
  if (!j.is_array()) throw std::invalid_argument("report list must be a JSON array");
  std::vector<Report> out;
  for (const auto& x : j) out.push_back(report_of(x));
  return out;
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string to_csv(const Report& r) { return to_csv(std::vector<Report>{r}); }

std::string to_csv(const std::vector<Report>& rs) {
  std::ostringstream out;
  out << kCsvHeader;
  for (const auto& r : rs) csv_rows(out, r);
  return out.str();
}

std::string to_csv(const Table& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << csv_field(t.columns[i]);
  out << "\r\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
    out << "\r\n";
  }
  return out.str();
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << r.identity << ": " << r.verdict << "\n";
  std::size_t width = 0;
  for (const auto& x : r.routes) width = std::max(width, x.label.size());
  for (const auto& x : r.routes) {
    out << "  " << x.label << std::string(width - x.label.size(), ' ') << "  " << x.value;
    if (x.terms > 0) out << "  N=" << x.terms;
    out << "  bound " << x.tail_bound << "\n";
  }
  out << "  discrepancy " << r.discrepancy << "  tolerance " << r.tolerance << "\n";
  return out.str();
}

std::string to_text(const std::vector<Report>& rs) {
  std::string out;
  for (const auto& r : rs) out += to_text(r);
  return out;
}

std::string to_text(const Table& t) {
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) {
      out << (i ? "  " : "") << cells[i];
      if (i + 1 < cells.size()) out << std::string(width[i] - cells[i].size(), ' ');
    }
    out << "\n";
  };
  emit(t.columns);
  for (const auto& row : t.rows) emit(row);
  return out.str();
}

}  // namespace zetasum::report
