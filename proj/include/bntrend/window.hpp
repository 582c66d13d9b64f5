#pragma once

#include <optional>
#include <vector>

#include "bntrend/date.hpp"
#include "bntrend/error.hpp"

namespace bntrend {

// One fixed-width span of consecutive days. Indexes are 1-based.
struct Window {
  int index = 0;
  Date first_day;
  Date last_day;
};

// Contiguous, non-overlapping windows covering [start, end]. Windows are
// anchored at `start`, each window_days wide except possibly a shorter final
// window clipped at `end`. W = ceil(total_days / window_days).
class WindowPartition {
public:
  WindowPartition(Date start, Date end, int window_days = 7)
      : start_(start), end_(end), window_days_(window_days) {
    if (start > end)
      throw ConfigError("invalid date range: " + start.to_string() + " is after " +
                        end.to_string());
    if (window_days < 1) throw ConfigError("window length must be at least 1 day");
    long total_days = end - start + 1;
    long count = (total_days + window_days - 1) / window_days;
    windows_.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
      Date first = start.plus_days(i * window_days);
      Date last = start.plus_days((i + 1) * window_days - 1);
      if (last > end) last = end;
      windows_.push_back(Window{static_cast<int>(i) + 1, first, last});
    }
  }

  Date start() const { return start_; }
  Date end() const { return end_; }
  int window_days() const { return window_days_; }
  const std::vector<Window>& windows() const { return windows_; }
  std::size_t size() const { return windows_.size(); }

  const Window& window(int index) const {
    if (index < 1 || static_cast<std::size_t>(index) > windows_.size())
      throw ConfigError("window index out of range: " + std::to_string(index));
    return windows_[static_cast<std::size_t>(index) - 1];
  }

  // 1-based index of the window containing d, or nullopt when out of range.
  std::optional<int> window_of(Date d) const {
    if (d < start_ || d > end_) return std::nullopt;
    return static_cast<int>((d - start_) / window_days_) + 1;
  }

private:
  Date start_;
  Date end_;
  int window_days_;
  std::vector<Window> windows_;
};

}  // namespace bntrend
