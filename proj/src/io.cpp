#include "itline/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

namespace itline {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<long> parse_ints(std::string_view line, std::size_t line_no) {
  std::vector<long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    long value = 0;
    const auto* begin = line.data() + i;
    const auto [ptr, ec] = std::from_chars(begin, line.data() + line.size(), value);
    if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t'))
      throw ParseError("line " + std::to_string(line_no) + ": expected integer near '" +
                           std::string(line.substr(i, 12)) + "'",
                       line_no);
    i = static_cast<std::size_t>(ptr - line.data());
    out.push_back(value);
  }
  return out;
}

}  // namespace

MultiGraph parse_edgelist(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t idx = 0;
  auto next_content = [&](std::size_t& line_no) -> std::optional<std::string_view> {
    while (idx < lines.size()) {
      const auto line = trim(lines[idx++]);
      line_no = idx;
      if (line.empty() || line.front() == '#') continue;
      return line;
    }
    return std::nullopt;
  };

  std::size_t line_no = 0;
  const auto header = next_content(line_no);
  if (!header) throw ParseError("empty edge list: missing 'n m' header", 1);
  const auto nm = parse_ints(*header, line_no);
  if (nm.size() != 2 || nm[0] < 0 || nm[1] < 0)
    throw ParseError("line " + std::to_string(line_no) + ": header must be 'n m'", line_no);

  MultiGraph g(static_cast<int>(nm[0]));
  for (long i = 0; i < nm[1]; ++i) {
    const auto line = next_content(line_no);
    if (!line)
      throw ParseError("expected " + std::to_string(nm[1]) + " edges, found " + std::to_string(i),
                       lines.size());
    const auto uv = parse_ints(*line, line_no);
    if (uv.size() != 2)
      throw ParseError("line " + std::to_string(line_no) + ": edge must be 'u v'", line_no);
    try {
      g.add_edge(static_cast<VertexId>(uv[0]), static_cast<VertexId>(uv[1]));
    } catch (const InputError& err) {
      throw ParseError("line " + std::to_string(line_no) + ": " + err.what(), line_no);
    }
  }
  if (const auto extra = next_content(line_no))
    throw ParseError("line " + std::to_string(line_no) + ": trailing content after edges",
                     line_no);
  return g;
}

std::string serialize_edgelist(const MultiGraph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

MultiGraph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) pos = header.size();
  text = text.substr(0, text.find_last_not_of("\r\n \t") + 1);

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw ParseError("graph6: unexpected end of input", i);
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range", i);
    return c - 63;
  };

  long n = 0;
  if (pos < text.size() && text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~')
      throw ParseError("graph6: graphs with more than 258047 vertices are unsupported", pos);
    for (int i = 1; i <= 3; ++i) n = (n << 6) | byte_at(pos + i);
    pos += 4;
  } else {
    n = byte_at(pos);
    pos += 1;
  }

  MultiGraph g(static_cast<int>(n));
  const long bits = n * (n - 1) / 2;
  const long bytes = (bits + 5) / 6;
  if (static_cast<long>(text.size() - pos) != bytes)
    throw ParseError("graph6: expected " + std::to_string(bytes) + " adjacency bytes, found " +
                         std::to_string(text.size() - pos),
                     pos);
  long k = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i, ++k) {
      const int chunk = byte_at(pos + static_cast<std::size_t>(k / 6));
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = byte_at(pos + static_cast<std::size_t>(bytes - 1));
    if (last & ((1 << (6 - bits % 6)) - 1))
      throw ParseError("graph6: nonzero padding bits", pos + static_cast<std::size_t>(bytes - 1));
  }
  return g;
}

std::string serialize_graph6(const MultiGraph& g) {
  if (!g.is_simple()) throw InputError("graph6 cannot encode parallel edges");
  const long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    throw InputError("graph6 writer supports at most 258047 vertices");
  }
  std::vector<char> adj(static_cast<std::size_t>(n * n), 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u * n + e.v)] = 1;
    adj[static_cast<std::size_t>(e.v * n + e.u)] = 1;
  }
  int chunk = 0;
  int filled = 0;
  for (long j = 1; j < n; ++j) {
    for (long i = 0; i < j; ++i) {
      chunk = (chunk << 1) | adj[static_cast<std::size_t>(i * n + j)];
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

MultiGraph parse_graph(std::string_view text) {
  for (auto line : split_lines(text)) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const bool numeric = std::all_of(line.begin(), line.end(), [](char c) {
      return (c >= '0' && c <= '9') || c == ' ' || c == '\t' || c == '-';
    });
    return numeric ? parse_edgelist(text) : parse_graph6(line);
  }
  throw ParseError("no graph found in input", 0);
}

}  // namespace itline
