#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

namespace itline {

/// Outcome of an exact search that may run out of budget.
enum class SearchStatus { Found, NotFound, Unknown };

std::string to_string(SearchStatus s);

inline constexpr std::uint64_t kDefaultNodeBudget = 200'000'000;

/// Node-expansion cap plus an optional wall-clock deadline.
struct SearchBudget {
  std::uint64_t max_nodes = kDefaultNodeBudget;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  static SearchBudget with_timeout(std::uint64_t nodes, std::chrono::duration<double> seconds);
};

/// Default budget, overridden by the ITLINE_BUDGET environment variable.
SearchBudget default_budget();

/// Counts expansions against a budget. Thread safe; the deadline is polled
/// every 1024 expansions.
class BudgetMeter {
 public:
  explicit BudgetMeter(const SearchBudget& budget) : budget_(budget) {}

  /// Returns false once the budget is spent.
  bool spend() {
    const auto used = used_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (used > budget_.max_nodes) {
      exhausted_.store(true, std::memory_order_relaxed);
      return false;
    }
    if (budget_.deadline && (used & 1023) == 0 &&
        std::chrono::steady_clock::now() > *budget_.deadline) {
      exhausted_.store(true, std::memory_order_relaxed);
      return false;
    }
    return !exhausted_.load(std::memory_order_relaxed);
  }

  bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }
  const SearchBudget& budget() const { return budget_; }

 private:
  SearchBudget budget_;
  std::atomic<std::uint64_t> used_{0};
  std::atomic<bool> exhausted_{false};
};

}  // namespace itline
