#include "abfactor/graph6.hpp"

#include "abfactor/error.hpp"

namespace abfactor {

namespace {

constexpr int kBias = 63;

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  auto sextet = [&](std::size_t i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > kBias + 63) throw InvalidArgument("graph6: invalid character");
    return c - kBias;
  };
  if (text.empty()) throw InvalidArgument("graph6: empty input");
  std::size_t pos = 0;
  int n = 0;
  if (text[0] != '~') {
    n = sextet(0);
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') throw InvalidArgument("graph6: unsupported order header");
    n = (sextet(1) << 12) | (sextet(2) << 6) | sextet(3);
    if (n <= 62) throw InvalidArgument("graph6: non-minimal order header");
    pos = 4;
  }
  if (n > kMaxOrder) throw InvalidArgument("graph6: order exceeds 64");
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() != pos + bytes) throw InvalidArgument("graph6: wrong length for order");

  Graph g(n);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int chunk = sextet(pos + k / 6);
      if ((chunk >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(u, v);
    }
  }
  if (bits % 6 != 0) {
    const int pad = 6 - static_cast<int>(bits % 6);
    if ((sextet(text.size() - 1) & ((1 << pad) - 1)) != 0) {
      throw InvalidArgument("graph6: nonzero padding bits");
    }
  }
  return g;
}

}  // namespace abfactor
