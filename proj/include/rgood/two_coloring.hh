#pragma once

#include <rgood/graph.hh>
#include <rgood/outcome.hh>
#include <rgood/subgraph.hh>

#include <optional>
#include <string>

namespace rgood
{
    enum class Colour
    {
        red,
        blue
    };

    auto to_string(Colour c) -> std::string;

    // Red/blue colouring of K_N, stored as its red graph; every other pair is blue.
    class TwoColoring
    {
    public:
        explicit TwoColoring(Graph red);

        auto order() const -> int { return _red.order(); }
        auto red() const -> const Graph & { return _red; }
        auto blue() const -> const Graph & { return _blue; }
        auto colour(int u, int v) const -> Colour { return _red.adjacent(u, v) ? Colour::red : Colour::blue; }
        auto graph(Colour c) const -> const Graph & { return c == Colour::red ? _red : _blue; }

        auto operator==(const TwoColoring & other) const -> bool { return _red == other._red; }

    private:
        Graph _red, _blue;
    };

    auto blue_graph(const TwoColoring & col) -> Graph;

    struct MonoEmbedding
    {
        Graph pattern;
        Colour colour;
        VertexMap map;
    };

    auto is_valid_mono_embedding(const TwoColoring & col, const MonoEmbedding & e) -> bool;

    auto contains_mono(const TwoColoring & col, const Graph & pattern, Colour colour, Budget & budget)
        -> Outcome<std::optional<MonoEmbedding>>;
    auto contains_mono(const TwoColoring & col, const Graph & pattern, Colour colour)
        -> Outcome<std::optional<MonoEmbedding>>;

    // Red graph: (chi(G) - 1) disjoint copies of K_{|F|-1} and one K_{sigma(G)-1} (omitted when
    // sigma(G) = 1), on N = (chi(G)-1)(|F|-1) + sigma(G) - 1 vertices. Re-verified to contain no
    // red F and no blue G before it is returned; throws InternalError if that fails and
    // PreconditionError when F is disconnected or |F| < sigma(G). Undecided when an invariant
    // or the verification runs out of budget.
    auto burr_witness(const Graph & f, const Graph & g, Budget & budget) -> Outcome<TwoColoring>;
    auto burr_witness(const Graph & f, const Graph & g) -> Outcome<TwoColoring>;

    // Line-oriented text form: "N <order>" then one sorted "u v" line per red edge.
    // Blank lines and lines starting with '#' are ignored on input.
    auto serialize_coloring(const TwoColoring & col) -> std::string;
    auto parse_coloring(const std::string & text) -> TwoColoring;

    // "<N> <graph6 of the red graph>".
    auto coloring_graph6_record(const TwoColoring & col) -> std::string;
}
