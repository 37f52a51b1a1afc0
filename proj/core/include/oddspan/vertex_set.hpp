#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>

namespace oddspan {

inline constexpr int kMaxVertices = 512;

/// Fixed-capacity bit set over vertex indices 0..kMaxVertices-1.
class VertexSet
{
public:
  static constexpr int kWords = kMaxVertices / 64;

  VertexSet() = default;

  static auto from_words(std::span<const std::uint64_t> words) -> VertexSet {
    VertexSet s;
    for (std::size_t i = 0; i < words.size() && i < kWords; ++i)
      s._words[i] = words[i];
    return s;
  }

  /// The set {0, 1, ..., n-1}.
  static auto prefix(int n) -> VertexSet {
    VertexSet s;
    for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
      s._words[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return s;
  }

  auto test(int v) const -> bool { return (_words[v >> 6] >> (v & 63)) & 1U; }
  auto set(int v) -> void { _words[v >> 6] |= std::uint64_t{1} << (v & 63); }
  auto reset(int v) -> void { _words[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  auto count() const -> int {
    int c = 0;
    for (auto w : _words)
      c += std::popcount(w);
    return c;
  }

  auto empty() const -> bool {
    for (auto w : _words)
      if (w)
        return false;
    return true;
  }

  /// Smallest member, or -1 when empty.
  auto first() const -> int {
    for (int i = 0; i < kWords; ++i)
      if (_words[i])
        return i * 64 + std::countr_zero(_words[i]);
    return -1;
  }

  /// Smallest member strictly greater than v, or -1.
  auto next(int v) const -> int {
    ++v;
    if (v >= kMaxVertices)
      return -1;
    int wi = v >> 6;
    std::uint64_t w = _words[wi] & (~std::uint64_t{0} << (v & 63));
    while (true) {
      if (w)
        return wi * 64 + std::countr_zero(w);
      if (++wi == kWords)
        return -1;
      w = _words[wi];
    }
  }

  auto operator&=(const VertexSet& o) -> VertexSet& {
    for (int i = 0; i < kWords; ++i)
      _words[i] &= o._words[i];
    return *this;
  }
  auto operator|=(const VertexSet& o) -> VertexSet& {
    for (int i = 0; i < kWords; ++i)
      _words[i] |= o._words[i];
    return *this;
  }
  /// Set difference.
  auto operator-=(const VertexSet& o) -> VertexSet& {
    for (int i = 0; i < kWords; ++i)
      _words[i] &= ~o._words[i];
    return *this;
  }

  friend auto operator&(VertexSet a, const VertexSet& b) -> VertexSet { return a &= b; }
  friend auto operator|(VertexSet a, const VertexSet& b) -> VertexSet { return a |= b; }
  friend auto operator-(VertexSet a, const VertexSet& b) -> VertexSet { return a -= b; }
  friend auto operator==(const VertexSet&, const VertexSet&) -> bool = default;

  auto intersects(const VertexSet& o) const -> bool {
    for (int i = 0; i < kWords; ++i)
      if (_words[i] & o._words[i])
        return true;
    return false;
  }

  auto words() const -> std::span<const std::uint64_t, kWords> { return _words; }

  template <class F>
  auto for_each(F&& f) const -> void {
    for (int i = 0; i < kWords; ++i) {
      std::uint64_t w = _words[i];
      while (w) {
        f(i * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

private:
  std::array<std::uint64_t, kWords> _words{};
};

} // namespace oddspan
