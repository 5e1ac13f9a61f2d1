#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chromabounds/graph.hpp"

namespace chromabounds {

/// Decodes one short-form graph6 record (order <= 62): first byte n+63, then
/// the upper triangle in column order (0,1),(0,2),(1,2),(0,3),... packed
/// big-endian into 6-bit groups, each +63, zero-padded. Rejects the >=63
/// long form, bytes outside 63..126, truncated or oversized records, and
/// nonzero padding; ParseError carries the byte offset.
Graph parse_graph6(std::string_view record);

std::string to_graph6(const Graph& g);

/// Parses a graph6 file, one record per line (blank lines skipped). On a bad
/// record rethrows ParseError with the line number and offset in the message.
std::vector<Graph> read_graph6_lines(const std::string& path);

}  // namespace chromabounds
