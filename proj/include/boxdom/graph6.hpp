#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "boxdom/graph.hpp"

namespace boxdom {

// Decodes one graph6 word.  The optional ">>graph6<<" prefix is accepted.
// Both size encodings are understood: one byte for n <= 62 and the
// three-byte form introduced by '~' for larger graphs.  Throws
// MalformedGraph6 on any structural problem and Oversize when the decoded
// graph has more than max_n vertices.
Graph parse_graph6(std::string_view text, int max_n = kMaxFactorVertices);

// Encodes a graph as a canonical graph6 word (no header, no newline).
// Uses the single-byte size for n <= 62 and the three-byte size above that.
std::string to_graph6(const Graph& g);

// Reads a graph6 file, one word per line; blank lines are skipped.  Throws
// IoError if the file cannot be opened and MalformedGraph6 (with the line
// number) on a bad word.
std::vector<Graph> read_graph6_file(const std::string& path, int max_n = kMaxFactorVertices);

}  // namespace boxdom
