#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ocdom/graph.hpp"

namespace ocdom {

// graph6 text format: one printable token per graph. The order is encoded
// first (one byte n+63 for n <= 62, otherwise '~' followed by three base-64
// bytes), then the upper triangle of the adjacency matrix column by column —
// (0,1), (0,2), (1,2), (0,3), ... — packed big-endian six bits per byte,
// each byte offset by 63.

namespace graph6_detail {

inline int decode_byte(char c, std::string_view what) {
  unsigned char u = static_cast<unsigned char>(c);
  if (u < 63 || u > 126)
    throw std::invalid_argument("graph6: byte outside printable range in " +
                                std::string(what));
  return u - 63;
}

}  // namespace graph6_detail

inline Graph parse_graph6(std::string_view text) {
  using graph6_detail::decode_byte;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("graph6: empty input");

  std::size_t pos = 0;
  long n;
  int first = decode_byte(text[0], "order");
  if (first < 63) {
    n = first;
    pos = 1;
  } else {
    if (text.size() < 4) throw std::invalid_argument("graph6: truncated order");
    if (text[1] == '~')
      throw std::invalid_argument("graph6: order beyond supported range");
    n = 0;
    for (int i = 1; i <= 3; ++i)
      n = (n << 6) | decode_byte(text[i], "order");
    pos = 4;
  }
  if (n > kMaxVertices)
    throw std::invalid_argument("graph6: order " + std::to_string(n) +
                                " exceeds supported maximum of 128");

  Graph g(static_cast<int>(n));
  long bits_needed = n * (n - 1) / 2;
  std::size_t payload = static_cast<std::size_t>((bits_needed + 5) / 6);
  if (text.size() - pos < payload)
    throw std::invalid_argument("graph6: truncated edge payload");
  if (text.size() - pos > payload)
    throw std::invalid_argument("graph6: trailing data after edge payload");

  long bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      int byte = decode_byte(text[pos + bit / 6], "payload");
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(u, v);
    }
  }
  return g;
}

inline std::string emit_graph6(const Graph& g) {
  std::string out;
  int n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, fill = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++fill == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = fill = 0;
      }
    }
  }
  if (fill > 0) out.push_back(static_cast<char>((acc << (6 - fill)) + 63));
  return out;
}

}  // namespace ocdom
