#pragma once

// graph6 codec (ASCII offset 63, upper triangle column by column, 6 bits per
// byte, big-endian within a byte). Sizes up to 62 use one header byte,
// up to 258047 use '~' + 3 bytes, beyond that "~~" + 6 bytes.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "p2fi/error.hpp"
#include "p2fi/graph.hpp"

namespace p2fi {

namespace detail {

inline void graph6_put_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

}  // namespace detail

inline std::string graph6_encode(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  detail::graph6_put_size(out, n);
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<std::uint8_t> packed((bits + 5) / 6, 0);
  // Bit index of (i,j), i<j, in column-major upper-triangle order.
  for (const auto& e : g.edges()) {
    std::uint64_t j = static_cast<std::uint64_t>(e.v);
    std::uint64_t k = j * (j - 1) / 2 + static_cast<std::uint64_t>(e.u);
    packed[k / 6] |= static_cast<std::uint8_t>(1u << (5 - k % 6));
  }
  for (auto b : packed) out.push_back(static_cast<char>(b + 63));
  return out;
}

/// Decodes one graph6 string (an optional ">>graph6<<" header and trailing
/// newline are accepted). Throws ParseError with the offending byte offset.
inline Graph graph6_decode(std::string_view text) {
  std::size_t base = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) base = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  auto byte = [&](std::size_t pos) -> std::uint64_t {
    if (pos >= text.size()) throw ParseError("graph6 truncated", pos);
    auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte outside 63..126", pos);
    return c - 63u;
  };

  std::size_t pos = base;
  std::uint64_t n = 0;
  if (byte(pos) < 63) {
    n = byte(pos);
    pos += 1;
  } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
    for (std::size_t k = 0; k < 6; ++k) n = (n << 6) | byte(pos + 2 + k);
    if (n <= 258047) throw ParseError("graph6 8-byte size header used for small n", pos);
    pos += 8;
  } else {
    for (std::size_t k = 0; k < 3; ++k) n = (n << 6) | byte(pos + 1 + k);
    if (n <= 62) throw ParseError("graph6 4-byte size header used for n <= 62", pos);
    pos += 4;
  }
  if (n > 100000) throw ParseError("graph6 vertex count too large for this library", base);

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t body = (bits + 5) / 6;
  if (text.size() - pos != body)
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                         std::to_string(body),
                     text.size() < pos + body ? text.size() : pos + body);

  EdgeList edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j)
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      std::uint64_t chunk = byte(pos + k / 6);
      if (chunk & (1u << (5 - k % 6)))
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  if (bits % 6 != 0) {
    std::uint64_t last = byte(pos + body - 1);
    std::uint64_t pad_mask = (1u << (6 - bits % 6)) - 1;
    if (last & pad_mask) throw ParseError("graph6 padding bits not zero", pos + body - 1);
  }
  return Graph(static_cast<int>(n), edges);
}

}  // namespace p2fi
