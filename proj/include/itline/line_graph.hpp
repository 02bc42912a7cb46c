#pragma once

#include <cstddef>
#include <vector>

#include "itline/graph.hpp"

namespace itline {

/// L(G). Vertex i of `graph` stands for edge origin[i] of G; in practice
/// origin[i] == i, kept explicit so callers never rely on it silently.
struct LineGraphResult {
  MultiGraph graph;
  std::vector<EdgeId> origin;
};

LineGraphResult line_graph(const MultiGraph& g);

inline constexpr int kDefaultVertexCap = 5000;

struct IteratedLineGraph {
  bool cap_exceeded = false;
  int level = 0;           // levels actually built
  int next_size = 0;       // vertex count that would have exceeded the cap
  MultiGraph graph;        // L^level(G)
};

/// Raised when some L^i(G), i < n, has no edges, so L^{i+1}(G) does not exist.
class EdgelessLevel : public InputError {
 public:
  explicit EdgelessLevel(int level);
  int level() const { return level_; }

 private:
  int level_;
};

IteratedLineGraph iterated_line_graph(const MultiGraph& g, int n, int cap = kDefaultVertexCap);

bool is_claw_free(const MultiGraph& g);

}  // namespace itline
