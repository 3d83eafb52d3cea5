#include "xcl/graph6.hpp"

#include <string>

namespace xcl {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

[[noreturn]] void fail(const std::string& what) {
  throw Error(ErrorCode::kParse, "graph6: " + what);
}

int sextet(char ch) {
  const int value = static_cast<unsigned char>(ch) - 63;
  if (value < 0 || value > 63) {
    fail("byte " + std::to_string(static_cast<unsigned char>(ch)) +
         " outside 63..126");
  }
  return value;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) fail("empty input");

  std::size_t pos = 0;
  long long n = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    if (text.size() < 8) fail("truncated 8-byte order field");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(text[i]);
    pos = 8;
  } else {
    if (text.size() < 4) fail("truncated 4-byte order field");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(text[i]);
    pos = 4;
  }
  if (n > kMaxOrder) {
    throw Error(ErrorCode::kOrderOverflow,
                "graph6: order " + std::to_string(n) + " exceeds " +
                    std::to_string(kMaxOrder));
  }

  const int order = static_cast<int>(n);
  const std::size_t bits = static_cast<std::size_t>(order) *
                           static_cast<std::size_t>(order - (order > 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    fail("expected " + std::to_string(bytes) + " data bytes for order " +
         std::to_string(order) + ", found " + std::to_string(text.size() - pos));
  }

  Graph g(order);
  std::size_t k = 0;
  for (int v = 1; v < order; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = sextet(text[pos + k / 6]);
      if (byte & (1 << (5 - static_cast<int>(k % 6)))) g.add_edge(u, v);
    }
  }
  for (; k % 6 != 0; ++k) {
    if (sextet(text[pos + k / 6]) & (1 << (5 - static_cast<int>(k % 6))))
      fail("nonzero padding bits");
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace xcl
