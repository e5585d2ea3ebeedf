#ifndef ONEUNIT_PERIOD_HPP
#define ONEUNIT_PERIOD_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

namespace oneunit {

/// s[n + period] = s[n] for every n >= preperiod inside the observed window.
struct PeriodReport {
  std::size_t preperiod = 0;
  std::size_t period = 1;

  friend bool operator==(const PeriodReport&, const PeriodReport&) = default;
};

/// Finds the smallest period r <= max_period, then the smallest preperiod
/// w <= max_preperiod, with s[n + r] = s[n] for all w <= n < L - r.
///
/// Requires max_preperiod + 2 * max_period <= L (throws WindowTooSmall), so
/// every accepted pair has at least two full periods inside the window.
/// A result is evidence at this window length, not a proof of periodicity.
std::optional<PeriodReport> detect_period(std::span<const std::uint32_t> s,
                                          std::size_t max_preperiod, std::size_t max_period);

/// True iff `report` describes `s` over its whole length.
bool period_holds(std::span<const std::uint32_t> s, const PeriodReport& report);

}  // namespace oneunit

#endif  // ONEUNIT_PERIOD_HPP
