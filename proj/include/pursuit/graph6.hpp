#pragma once

#include "pursuit/graph.hpp"

#include <string>
#include <string_view>

namespace pursuit {

// Largest order the graph6 size prefix can express in its 4-byte form.
inline constexpr int kMaxGraph6Order = 258047;

// Decodes one graph6 line (without its terminating newline). Throws ParseError
// carrying the offending byte offset.
Graph parse_graph6(std::string_view text);

// Encodes g; orders 0..62 use the one-byte size prefix, larger ones the
// four-byte prefix. Throws UnsupportedSizeError beyond kMaxGraph6Order.
std::string write_graph6(const Graph& g);

} // namespace pursuit
