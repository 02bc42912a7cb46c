#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "itline/graph.hpp"

namespace itline {

/// Malformed graph text. `position` is a 1-based line for edge lists and a
/// 0-based byte offset for graph6.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Edge-list text: a header "n m" followed by m lines "u v" (0-based). Repeated
// pairs give parallel edges. Blank lines and lines starting with '#' are skipped.
MultiGraph parse_edgelist(std::string_view text);
std::string serialize_edgelist(const MultiGraph& g);

// graph6, simple graphs only. An optional ">>graph6<<" header is accepted.
MultiGraph parse_graph6(std::string_view text);
std::string serialize_graph6(const MultiGraph& g);

/// Picks graph6 or edge-list by sniffing the first non-blank line.
MultiGraph parse_graph(std::string_view text);

}  // namespace itline
