#include "oneunit/period.hpp"

#include <string>

#include "oneunit/errors.hpp"

namespace oneunit {

std::optional<PeriodReport> detect_period(std::span<const std::uint32_t> s,
                                          std::size_t max_preperiod, std::size_t max_period) {
  const std::size_t len = s.size();
  if (max_period == 0 || max_preperiod + 2 * max_period > len) {
    throw WindowTooSmall("window of length " + std::to_string(len) +
                         " cannot hold preperiod " + std::to_string(max_preperiod) +
                         " plus two periods of " + std::to_string(max_period));
  }
  for (std::size_t r = 1; r <= max_period; ++r) {
    // The minimal preperiod for r is one past the last mismatch.
    std::size_t start = 0;
    for (std::size_t n = len - r; n-- > 0;) {
      if (s[n + r] != s[n]) {
        start = n + 1;
        break;
      }
    }
    if (start <= max_preperiod) return PeriodReport{start, r};
  }
  return std::nullopt;
}

bool period_holds(std::span<const std::uint32_t> s, const PeriodReport& report) {
  if (report.period == 0) return false;
  for (std::size_t n = report.preperiod; n + report.period < s.size(); ++n) {
    if (s[n + report.period] != s[n]) return false;
  }
  return true;
}

}  // namespace oneunit
