#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

namespace critgraph {

/// Caps the work an exact enumeration may do. Exceeding either limit raises
/// ErrorKind::BudgetExceeded; partial counts are never returned.
struct Budget {
  static constexpr std::uint64_t kDefaultMaxItems = 10'000'000;

  std::uint64_t max_items = kDefaultMaxItems;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  /// Default budget, with max_items overridden by CRITGRAPH_BUDGET when set.
  static Budget from_env();

  Budget with_time_limit(std::chrono::milliseconds limit) const;
};

/// Per-call usage tracker. Not shared between threads.
class BudgetMeter {
 public:
  explicit BudgetMeter(const Budget& budget) : budget_(budget) {}

  /// Counts one produced item (cycle, path, search node).
  void charge_item();
  /// Counts one unit of search work; only polls the deadline.
  void tick();

  std::uint64_t items() const noexcept { return items_; }

 private:
  void check_deadline() const;

  const Budget& budget_;
  std::uint64_t items_ = 0;
  std::uint64_t ticks_ = 0;
};

}  // namespace critgraph
