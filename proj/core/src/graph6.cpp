#include "oddspan/graph6.hpp"

namespace oddspan {

auto graph6_encode(const Graph& g) -> std::string {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }

  int chunk = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

auto graph6_decode(std::string_view text) -> Graph {
  if (!text.empty() && text.back() == '\n')
    text.remove_suffix(1);
  if (text.starts_with(">>graph6<<"))
    text.remove_prefix(10);
  if (text.empty())
    throw Error("graph6: empty input");

  for (char c : text) {
    auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126)
      throw Error("graph6: byte outside 63..126");
  }
  auto value = [&](std::size_t i) { return static_cast<int>(static_cast<unsigned char>(text[i])) - 63; };

  int n = 0;
  std::size_t pos = 0;
  if (value(0) < 63) {
    n = value(0);
    pos = 1;
  } else {
    if (text.size() < 4)
      throw Error("graph6: truncated size header");
    if (value(1) == 63)
      throw Error("graph6: sizes above 258047 are not supported");
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    if (n <= 62)
      throw Error("graph6: long-form header used for n <= 62");
    pos = 4;
  }
  if (n > kMaxVertices)
    throw Error("graph6: vertex count " + std::to_string(n) + " exceeds 512");

  const long bits = static_cast<long>(n) * (n - 1) / 2;
  const long bytes = (bits + 5) / 6;
  if (static_cast<long>(text.size() - pos) != bytes)
    throw Error("graph6: body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                std::to_string(bytes));

  GraphBuilder b(n);
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = value(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1)
        b.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    int pad = 6 - static_cast<int>(bits % 6);
    if (value(text.size() - 1) & ((1 << pad) - 1))
      throw Error("graph6: nonzero padding bits");
  }
  return std::move(b).build();
}

} // namespace oddspan
