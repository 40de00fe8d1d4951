#include "trading/prices.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <unordered_set>

namespace trading {
namespace {

constexpr bool is_leap(int y) { return y % 4 == 0 && (y % 100 != 0 || y % 400 == 0); }

int days_in_month(int y, int m) {
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (m == 2 && is_leap(y)) return 29;
  return kDays[m - 1];
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      out.push_back(trim(line.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

bool Date::is_valid() const {
  return month >= 1 && month <= 12 && day >= 1 && day <= days_in_month(year, month);
}

Date Date::parse(std::string_view iso) {
  // Exactly YYYY-MM-DD with all-digit fields.
  if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-')
    throw std::invalid_argument("date must be YYYY-MM-DD: " + std::string(iso));
  auto field = [&](std::size_t pos, std::size_t len) {
    int value = 0;
    const char* first = iso.data() + pos;
    auto [ptr, ec] = std::from_chars(first, first + len, value);
    if (ec != std::errc{} || ptr != first + len)
      throw std::invalid_argument("date must be YYYY-MM-DD: " + std::string(iso));
    return value;
  };
  Date d{field(0, 4), field(5, 2), field(8, 2)};
  if (!d.is_valid()) throw std::invalid_argument("impossible civil date: " + std::string(iso));
  return d;
}

std::string Date::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
  return buf;
}

// Howard Hinnant's civil-from-days / days-from-civil algorithms.
int64_t Date::to_serial() const {
  const int64_t y = year - (month <= 2);
  const int64_t era = (y >= 0 ? y : y - 399) / 400;
  const int64_t yoe = y - era * 400;
  const int64_t doy = (153 * (month + (month > 2 ? -3 : 9)) + 2) / 5 + day - 1;
  const int64_t doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + doe - 719468;
}

Date Date::from_serial(int64_t days) {
  const int64_t z = days + 719468;
  const int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const int64_t doe = z - era * 146097;
  const int64_t yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const int64_t y = yoe + era * 400;
  const int64_t doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const int64_t mp = (5 * doy + 2) / 153;
  const int64_t d = doy - (153 * mp + 2) / 5 + 1;
  const int64_t m = mp + (mp < 10 ? 3 : -9);
  return Date{static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d)};
}

PriceSeries load_prices(const std::string& path, const std::string& ticker) {
  std::ifstream in(path);
  if (!in) throw FileNotFound(path);

  std::string line;
  std::size_t line_no = 0;

  // Header: locate the date and adjusted-close columns by name.
  if (!std::getline(in, line)) throw ParseError(path, 1, "missing header row");
  ++line_no;
  const auto header = split_csv(line);
  std::size_t date_col = header.size(), price_col = header.size();
  for (std::size_t i = 0; i < header.size(); ++i) {
    const std::string name = lower(header[i]);
    if (name == "date") date_col = i;
    if (name == "adj close") price_col = i;
  }
  if (date_col == header.size()) throw ParseError(path, 1, "no Date column in header");
  if (price_col == header.size()) throw ParseError(path, 1, "no Adj Close column in header");

  PriceSeries series;
  series.ticker = ticker;
  std::unordered_set<int64_t> seen;

  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != header.size())
      throw ParseError(path, line_no,
                       "expected " + std::to_string(header.size()) + " fields, got " +
                           std::to_string(fields.size()));

    Date date;
    try {
      date = Date::parse(fields[date_col]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(path, line_no, e.what());
    }

    const std::string& raw = fields[price_col];
    double price = 0;
    auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), price);
    if (ec != std::errc{} || ptr != raw.data() + raw.size())
      throw ParseError(path, line_no, "unparseable price: '" + raw + "'");
    if (!std::isfinite(price) || price <= 0) throw NonPositivePrice(path, line_no);

    if (!seen.insert(date.to_serial()).second)
      throw DuplicateDate(path, line_no, date.to_string());
    series.rows.push_back({date, price});
  }

  std::sort(series.rows.begin(), series.rows.end(),
            [](const PriceRow& l, const PriceRow& r) { return l.date < r.date; });
  return series;
}

PricePair align(const PriceSeries& a, const PriceSeries& b) {
  PricePair out;
  out.a.ticker = a.ticker;
  out.b.ticker = b.ticker;
  std::size_t i = 0, j = 0;
  while (i < a.rows.size() && j < b.rows.size()) {
    if (a.rows[i].date < b.rows[j].date) {
      ++i;
    } else if (b.rows[j].date < a.rows[i].date) {
      ++j;
    } else {
      out.a.rows.push_back(a.rows[i++]);
      out.b.rows.push_back(b.rows[j++]);
    }
  }
  if (out.a.rows.empty()) throw EmptyIntersection();
  return out;
}

}  // namespace trading
