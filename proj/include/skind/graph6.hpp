#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "skind/graph.hpp"

namespace skind {

/// Largest order accepted by the decoder.
inline constexpr std::uint64_t kGraph6MaxOrder = 1u << 20;

/// Decodes one graph6 line. An optional ">>graph6<<" header and trailing
/// whitespace are accepted. Throws ParseError on a bad size header, bytes
/// outside 63..126, a length mismatch, or nonzero padding bits.
Graph parse_graph6(std::string_view text);

/// Encodes in graph6 (no header, no newline).
std::string emit_graph6(const Graph& g);

/// Reads every non-empty line of a graph6 file.
std::vector<Graph> read_graph6_file(const std::filesystem::path& path);

} // namespace skind
