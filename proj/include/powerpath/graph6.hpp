#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "powerpath/graph.hpp"

namespace powerpath {

// graph6 per the nauty format description: N(n) followed by the upper
// triangle in column order, six bits per printable byte (offset 63).
// Orders up to 68719476735 are representable; the graph order cap applies.
std::string graph6_encode(const Graph& g);

// Accepts an optional ">>graph6<<" header. Throws ParseError with the byte
// offset of the first malformed byte (bad character, wrong length, or
// non-zero padding bits).
Graph graph6_decode(std::string_view text);

// One graph per line; blank lines are skipped. Parse errors carry the
// offset within the offending line and the line number in the message.
std::vector<Graph> read_graph6_lines(std::istream& in);
void write_graph6_lines(std::ostream& out, const std::vector<Graph>& graphs);

}  // namespace powerpath
