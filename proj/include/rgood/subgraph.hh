#pragma once

#include <rgood/graph.hh>
#include <rgood/outcome.hh>

#include <optional>
#include <vector>

namespace rgood
{
    // Injective vertex map pattern -> host; entry i is the host vertex of pattern vertex i.
    using VertexMap = std::vector<int>;

    // Plain (not induced) subgraph containment by backtracking with degree filtering,
    // forward checking and host twin symmetry pruning.
    auto find_subgraph(const Graph & host, const Graph & pattern, Budget & budget) -> Outcome<std::optional<VertexMap>>;

    // As find_subgraph, but pattern vertex i may only use hosts in allowed[i]. No twin pruning.
    auto find_subgraph_within(const Graph & host, const Graph & pattern, const std::vector<VertexSet> & allowed,
        Budget & budget) -> Outcome<std::optional<VertexMap>>;

    auto is_subgraph_embedding(const Graph & host, const Graph & pattern, const VertexMap & map) -> bool;

    // Twin-class id per vertex: u and v share a class iff N(u) \ {v} == N(v) \ {u}.
    auto twin_classes(const Graph & g) -> std::vector<int>;
}
