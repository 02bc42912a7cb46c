#include "itline/budget.hpp"

#include <cstdlib>
#include <stdexcept>

namespace itline {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::NotFound: return "not_found";
    case SearchStatus::Unknown: return "unknown";
  }
  return "?";
}

SearchBudget SearchBudget::with_timeout(std::uint64_t nodes, std::chrono::duration<double> seconds) {
  SearchBudget b;
  b.max_nodes = nodes;
  b.deadline = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(seconds);
  return b;
}

SearchBudget default_budget() {
  SearchBudget b;
  if (const char* env = std::getenv("ITLINE_BUDGET")) {
    try {
      b.max_nodes = std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("ITLINE_BUDGET is not a node count: ") + env);
    }
  }
  return b;
}

}  // namespace itline
