#include "rigi/graph6.hpp"

namespace rigi {

namespace {
constexpr int kBias = 63;
}

Graph from_graph6(std::string_view line) {
  std::size_t base = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (line.starts_with(kHeader)) {
    base = kHeader.size();
    line.remove_prefix(kHeader.size());
  }
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw Graph6Error("empty graph6 line", base);

  auto sextet = [&](std::size_t pos) -> int {
    const unsigned char c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126) throw Graph6Error("character outside graph6 range", base + pos);
    return c - kBias;
  };

  long long n;
  std::size_t body_start;
  if (line[0] == '~') {
    if (line.size() >= 2 && line[1] == '~')
      throw Graph6Error("vertex count above supported range", base + 1);
    if (line.size() < 4) throw Graph6Error("truncated vertex count", base + line.size());
    n = static_cast<long long>(sextet(1)) << 12 | sextet(2) << 6 | sextet(3);
    body_start = 4;
  } else {
    n = sextet(0);
    body_start = 1;
  }
  if (n < 1 || n > Graph::kMaxVertices)
    throw Graph6Error("vertex count outside [1, 64]", base);

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (line.size() < body_start + body)
    throw Graph6Error("truncated adjacency data", base + line.size());
  if (line.size() > body_start + body)
    throw Graph6Error("trailing characters after adjacency data", base + body_start + body);

  Graph g(static_cast<int>(n));
  std::size_t bit = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      const int chunk = sextet(body_start + bit / 6);
      if (chunk >> (5 - bit % 6) & 1) g.add_edge(row, col);
    }
  }
  if (bits % 6 != 0) {
    const int last = sextet(body_start + body - 1);
    if (last & ((1 << (6 - bits % 6)) - 1))
      throw Graph6Error("nonzero padding bits", base + body_start + body - 1);
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>((n >> 12 & 63) + kBias));
    out.push_back(static_cast<char>((n >> 6 & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = acc << 1 | static_cast<int>(g.has_edge(row, col));
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace rigi
