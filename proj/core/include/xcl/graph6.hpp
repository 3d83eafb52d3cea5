#pragma once

#include <string>
#include <string_view>

#include "xcl/graph.hpp"

namespace xcl {

// graph6 as emitted by nauty's geng: order prefix (one byte n+63 for n <= 62,
// '~' plus three bytes otherwise), then the upper triangle column by column
// (x01, x02, x12, x03, ...) packed six bits per byte with offset 63.
//
// parse_graph6 accepts an optional ">>graph6<<" header and a trailing
// newline; anything else malformed throws Error(kParse). Orders above
// kMaxOrder throw Error(kOrderOverflow).
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

}  // namespace xcl
