#pragma once

#include "oddspan/graph.hpp"

#include <string>
#include <string_view>

namespace oddspan {

// graph6: size header (63+n, or 126 + three 6-bit chunks above 62), then the
// upper triangle in column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed
// big-endian six bits per byte, each byte offset by 63, last byte zero padded.

auto graph6_encode(const Graph& g) -> std::string;

/// Throws Error on a malformed header, a length mismatch, nonzero padding
/// bits, or bytes outside the printable range 63..126.
auto graph6_decode(std::string_view text) -> Graph;

} // namespace oddspan
