#pragma once

#include <string>
#include <vector>

#include "itline/graph.hpp"

namespace itline::families {

/// Path v1..v11 plus v12 joined to v3, v6, v9. Vertex v_i has id i-1.
MultiGraph fig1();

/// 6-cycle c0..c5 with a pendant path of length k at c0, c2 and c4.
/// Ids: cycle 0..5, then the three paths in order, each listed outward.
MultiGraph fig2(int k);

/// Long path x1..xt w1 yt..y1, a tail w1 z1..zs w2, and K4 on w2..w5.
/// Ids: x1..xt, w1, yt..y1, z1..zs, w2, w3, w4, w5. Requires t >= s + 5.
MultiGraph fig3(int s, int t);

/// A graph with two pendent cycles: path p0..p6, a 4-cycle through p4, and
/// a doubled edge p2-d.
MultiGraph fig4a();

/// Center c with three pendant leaves and three paths of s inner vertices,
/// each ending at a vertex of its own K4. Ids: c, leaves, then per arm the s
/// path vertices followed by the four K4 vertices.
MultiGraph fig4b(int s);

MultiGraph path(int n);
MultiGraph cycle(int n);  // n >= 3
MultiGraph star(int m);   // K_{1,m}, center 0
MultiGraph complete(int n);
MultiGraph two_cycle();   // two vertices joined by two parallel edges
MultiGraph petersen();

/// Builds a named family from string parameters, for the CLI. Throws
/// InputError for unknown names or bad parameter counts.
MultiGraph by_name(const std::string& name, const std::vector<int>& params);
std::vector<std::string> names();

}  // namespace itline::families
