#pragma once

#include <rgood/graph.hh>
#include <rgood/outcome.hh>
#include <rgood/two_coloring.hh>

#include <cstdint>
#include <optional>
#include <string>

namespace rgood
{
    struct SearchOptions
    {
        std::uint64_t node_limit = default_node_limit;
        // 0 selects std::thread::hardware_concurrency().
        int threads = 0;
        // Subtrees are split on this many edges after the fixed star at vertex 0.
        int split_depth = 8;
    };

    enum class Verdict
    {
        arrows,
        witness,
        undecided
    };

    auto to_string(Verdict v) -> std::string;

    struct ArrowResult
    {
        int order = 0;
        Verdict verdict = Verdict::undecided;
        // Set iff verdict == witness; contains neither a red F nor a blue G.
        std::optional<TwoColoring> witness;
        std::uint64_t nodes = 0;
    };

    // Decides K_N -> (F, G) by exhaustive search over red/blue assignments of the edges of K_N
    // in lexicographic order. Vertex 0 is taken to have maximum red degree d with red
    // neighbours 1..d; branches die as soon as the edge just coloured completes a red F or a
    // blue G. 1 <= N <= 64.
    auto arrows(int n, const Graph & f, const Graph & g, const SearchOptions & options = {}) -> ArrowResult;

    // Throws PreconditionError unless F is connected with |F| >= sigma(G) and chi/sigma are computable.
    auto burr_bound(const Graph & f, const Graph & g) -> int;

    struct RamseyResult
    {
        std::optional<int> value;
        // Largest N known to admit a verified avoiding colouring (0 if none).
        int largest_witnessed = 0;
        // The search started here; below it a verified Burr witness was used instead of search.
        int search_from = 1;
        std::uint64_t nodes = 0;
        std::string note;
    };

    // Smallest N <= cap with K_N -> (F, G).
    auto ramsey_number(const Graph & f, const Graph & g, int cap, const SearchOptions & options = {}) -> RamseyResult;

    struct GoodnessReport
    {
        int burr_bound = 0;
        std::optional<int> exact;
        std::optional<bool> is_good;
        RamseyResult search;
    };

    auto goodness_check(const Graph & f, const Graph & g, int cap, const SearchOptions & options = {}) -> GoodnessReport;
}
