#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trading {

struct FileNotFound : std::runtime_error {
  explicit FileNotFound(const std::string& path)
      : std::runtime_error("file not found: " + path) {}
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& path, std::size_t line, const std::string& what)
      : std::runtime_error(path + ":" + std::to_string(line) + ": " + what), line_number(line) {}
  std::size_t line_number;
};

struct NonPositivePrice : std::runtime_error {
  NonPositivePrice(const std::string& path, std::size_t line)
      : std::runtime_error(path + ":" + std::to_string(line) +
                           ": adjusted close must be a positive finite number"),
        line_number(line) {}
  std::size_t line_number;
};

struct DuplicateDate : std::runtime_error {
  DuplicateDate(const std::string& path, std::size_t line, const std::string& date)
      : std::runtime_error(path + ":" + std::to_string(line) + ": duplicate date " + date),
        line_number(line) {}
  std::size_t line_number;
};

struct EmptyIntersection : std::runtime_error {
  EmptyIntersection() : std::runtime_error("price series share no dates") {}
};

// Proleptic Gregorian calendar date.
struct Date {
  int year = 1970;
  int month = 1;  // 1..12
  int day = 1;    // 1..days_in_month

  auto operator<=>(const Date&) const = default;

  // "YYYY-MM-DD"; rejects malformed text and impossible civil dates.
  static Date parse(std::string_view iso);
  std::string to_string() const;

  // Days since 1970-01-01 (negative before); exact for the whole int range.
  int64_t to_serial() const;
  static Date from_serial(int64_t days);
  Date plus_days(int64_t days) const { return from_serial(to_serial() + days); }

  bool is_valid() const;
};

struct PriceRow {
  Date date;
  double adj_close = 0;
};

struct PriceSeries {
  std::string ticker;
  std::vector<PriceRow> rows;  // strictly increasing dates, positive prices
};

// Two series restricted to their common dates, same order, equal length.
struct PricePair {
  PriceSeries a;
  PriceSeries b;
  std::size_t n() const { return a.rows.size(); }
};

// Reads a CSV with a header row holding "Date" and "Adj Close" columns
// (case-insensitive, surrounding whitespace ignored; extra columns such as
// the full Yahoo layout are accepted and skipped). Rows are sorted by date.
PriceSeries load_prices(const std::string& path, const std::string& ticker);

// Restricts both series to their common dates, preserving order.
PricePair align(const PriceSeries& a, const PriceSeries& b);

}  // namespace trading
