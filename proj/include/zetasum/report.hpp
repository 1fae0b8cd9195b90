#pragma once

#include "zetasum/criteria.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zetasum::report {

/// One way of computing a quantity, with decimal values kept as strings.
struct RouteRow {
  std::string label;
  std::string value;
  std::int64_t terms = 0;
  std::string tail_bound;

  bool operator==(const RouteRow&) const = default;
};

/// A quantity computed along several routes and the verdict of comparing them.
struct Report {
  std::string identity;
  std::vector<RouteRow> routes;
  std::string discrepancy;
  std::string tolerance;
  std::string verdict;  // "pass" or "fail"

  bool passed() const { return verdict == "pass"; }
  bool operator==(const Report&) const = default;
};

Report from_identity(const criteria::IdentityReport& r, int digits);

/// The constants gamma, ln(4/pi), ln 2, ln pi and gamma - ln(4 pi) + 2, each
/// along at least two routes. `terms` overrides the default series lengths.
std::vector<Report> constants(int digits, std::optional<std::int64_t> terms = std::nullopt,
                              unsigned workers = 0);

/// Column-named rows of strings (Li table, multisum, zero checks).
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  bool operator==(const Table&) const = default;
};

std::string to_json(const Report& r);
std::string to_json(const std::vector<Report>& rs);
std::string to_json(const Table& t);
/// Throws std::invalid_argument when the text does not follow the schema.
Report report_from_json(std::string_view text);
std::vector<Report> reports_from_json(std::string_view text);

/// One row per route under a fixed header.
std::string to_csv(const Report& r);
std::string to_csv(const std::vector<Report>& rs);
std::string to_csv(const Table& t);
/// RFC 4180 quoting: fields containing a comma, quote, CR or LF are quoted,
/// inner quotes doubled.
std::string csv_field(std::string_view field);

std::string to_text(const Report& r);
std::string to_text(const std::vector<Report>& rs);
std::string to_text(const Table& t);

}  // namespace zetasum::report
