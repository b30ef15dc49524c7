#pragma once

#include <rgood/graph.hh>

#include <cstdint>
#include <optional>
#include <string>

namespace rgood
{
    // Standard graph6 encoding (no header, no trailing newline).
    auto to_graph6(const Graph & g) -> std::string;

    // Accepts an optional ">>graph6<<" header and surrounding whitespace. Throws ParseError.
    auto from_graph6(const std::string & text) -> Graph;

    // graph6 string or family spec (see graph_from_family).
    auto parse_graph_argument(const std::string & text, std::optional<std::uint64_t> default_seed = std::nullopt) -> Graph;
}
