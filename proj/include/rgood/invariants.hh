#pragma once

#include <rgood/graph.hh>
#include <rgood/outcome.hh>

#include <optional>
#include <vector>

namespace rgood
{
    // Partition of the vertex set into nonempty independent classes.
    struct ProperColoring
    {
        std::vector<std::vector<int>> classes;

        auto colours() const -> int { return int(classes.size()); }
        auto class_sizes() const -> std::vector<int>;
        // colour index of every vertex
        auto colour_of(int order) const -> std::vector<int>;
    };

    auto is_proper_coloring(const Graph & g, const ProperColoring & c) -> bool;

    // A cycle as a vertex sequence v0 v1 ... v(l-1); consecutive vertices and (v(l-1), v0) are adjacent.
    using Cycle = std::vector<int>;
    using Path = std::vector<int>;

    auto is_cycle_in(const Graph & g, const Cycle & c) -> bool;
    auto is_path_in(const Graph & g, const Path & p) -> bool;

    auto chromatic_number(const Graph & g, Budget & budget) -> Outcome<int>;
    auto chromatic_number(const Graph & g) -> Outcome<int>;

    // Minimum class size over all proper colourings using exactly chi(G) colours.
    auto sigma(const Graph & g, Budget & budget) -> Outcome<int>;
    auto sigma(const Graph & g) -> Outcome<int>;

    // A chi(G)-colouring whose smallest class has size sigma(G); classes sorted by size descending,
    // ties broken by smallest member.
    auto optimal_coloring_min_class(const Graph & g, Budget & budget) -> Outcome<ProperColoring>;
    auto optimal_coloring_min_class(const Graph & g) -> Outcome<ProperColoring>;

    auto independence_number(const Graph & g, Budget & budget) -> Outcome<int>;
    auto independence_number(const Graph & g) -> Outcome<int>;

    auto is_equal_clique_union(const Graph & g) -> bool;

    // Longest cycle, lexicographically smallest among the longest ones (which is also the
    // normalised form: starts at its minimum vertex, second vertex smaller than the last).
    // Absent for forests.
    auto longest_cycle(const Graph & g, Budget & budget) -> Outcome<std::optional<Cycle>>;
    auto longest_cycle(const Graph & g) -> Outcome<std::optional<Cycle>>;

    // Best cycle seen by a longest-cycle search that may have run out of budget. The cycle is
    // certified longest only when `certified` is set.
    struct CycleSearchResult
    {
        std::optional<Cycle> best;
        bool certified = false;
    };

    auto longest_cycle_best_effort(const Graph & g, Budget & budget) -> CycleSearchResult;

    // Some cycle with at least min_length vertices, if one exists.
    auto cycle_of_length_at_least(const Graph & g, int min_length, Budget & budget) -> Outcome<std::optional<Cycle>>;

    // A path on m vertices (as a subgraph), if one exists. m >= 1.
    auto has_path(const Graph & g, int m, Budget & budget) -> Outcome<std::optional<Path>>;
    auto has_path(const Graph & g, int m) -> Outcome<std::optional<Path>>;

    // Minimum over vertex orderings of the largest position gap across an edge. |F| >= 1.
    auto bandwidth(const Graph & g, Budget & budget) -> Outcome<int>;
    auto bandwidth(const Graph & g) -> Outcome<int>;

    // Lower bound from a greedily grown clique; used for pruning.
    auto greedy_clique(const Graph & g) -> std::vector<int>;
}
