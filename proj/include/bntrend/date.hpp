#pragma once

#include <chrono>
#include <compare>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

namespace bntrend {

// Calendar date with day precision. Thin wrapper over std::chrono::sys_days
// so day arithmetic and leap-year rules come from the standard library.
class Date {
public:
  Date() = default;

  // Strict ISO-8601 day form: YYYY-MM-DD, zero padded, valid calendar day.
  static std::optional<Date> try_parse(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
    auto digits = [&](int first, int count) -> std::optional<int> {
      int value = 0;
      for (int i = first; i < first + count; ++i) {
        char c = text[static_cast<std::size_t>(i)];
        if (c < '0' || c > '9') return std::nullopt;
        value = value * 10 + (c - '0');
      }
      return value;
    };
    auto y = digits(0, 4);
    auto m = digits(5, 2);
    auto d = digits(8, 2);
    if (!y || !m || !d) return std::nullopt;
    std::chrono::year_month_day ymd{std::chrono::year{*y},
                                    std::chrono::month{static_cast<unsigned>(*m)},
                                    std::chrono::day{static_cast<unsigned>(*d)}};
    if (!ymd.ok()) return std::nullopt;
    return Date{std::chrono::sys_days{ymd}};
  }

  std::string to_string() const {
    std::chrono::year_month_day ymd{days_};
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
  }

  Date plus_days(long n) const { return Date{days_ + std::chrono::days{n}}; }

  // Whole days from b to a.
  friend long operator-(const Date& a, const Date& b) {
    return (a.days_ - b.days_).count();
  }

  friend auto operator<=>(const Date&, const Date&) = default;

private:
  explicit Date(std::chrono::sys_days d) : days_(d) {}
  std::chrono::sys_days days_{};
};

}  // namespace bntrend
