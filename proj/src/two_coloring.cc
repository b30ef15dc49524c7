#include <rgood/errors.hh>
#include <rgood/generators.hh>
#include <rgood/graph6.hh>
#include <rgood/invariants.hh>
#include <rgood/two_coloring.hh>

#include <sstream>
#include <vector>

using std::optional;
using std::string;
using std::vector;

namespace rgood
{
    auto to_string(Colour c) -> string
    {
        return c == Colour::red ? "red" : "blue";
    }

    TwoColoring::TwoColoring(Graph red) : _red(std::move(red)), _blue(_red.complement()) {}

    auto blue_graph(const TwoColoring & col) -> Graph
    {
        return col.blue();
    }

    auto is_valid_mono_embedding(const TwoColoring & col, const MonoEmbedding & e) -> bool
    {
        return is_subgraph_embedding(col.graph(e.colour), e.pattern, e.map);
    }

    auto contains_mono(const TwoColoring & col, const Graph & pattern, Colour colour, Budget & budget)
        -> Outcome<optional<MonoEmbedding>>
    {
        if (pattern.order() > col.order())
            throw PreconditionError{"contains_mono: pattern larger than the coloured complete graph"};
        auto found = find_subgraph(col.graph(colour), pattern, budget);
        return found.map([&](const optional<VertexMap> & m) -> optional<MonoEmbedding> {
            if (! m)
                return std::nullopt;
            MonoEmbedding e{pattern, colour, *m};
            if (! is_valid_mono_embedding(col, e))
                throw InternalError{"contains_mono produced an invalid embedding"};
            return e;
        });
    }

    auto contains_mono(const TwoColoring & col, const Graph & pattern, Colour colour) -> Outcome<optional<MonoEmbedding>>
    {
        Budget b;
        return contains_mono(col, pattern, colour, b);
    }

    auto burr_witness(const Graph & f, const Graph & g, Budget & budget) -> Outcome<TwoColoring>
    {
        if (f.order() == 0 || ! is_connected(f))
            throw PreconditionError{"burr_witness: F must be connected and nonempty"};
        auto chi = chromatic_number(g, budget);
        auto sig = sigma(g, budget);
        if (! chi.is_decided() || ! sig.is_decided())
            return Outcome<TwoColoring>::undecided("burr_witness: chi/sigma undecided");
        if (f.order() < *sig)
            throw PreconditionError{"burr_witness: need |F| >= sigma(G)"};

        vector<Graph> blocks(std::max(*chi - 1, 0), complete_graph(f.order() - 1));
        if (*sig > 1)
            blocks.push_back(complete_graph(*sig - 1));
        TwoColoring col(disjoint_union(blocks));

        // a colouring with fewer vertices than a pattern trivially avoids it
        for (auto [pattern, colour] : {std::pair{&f, Colour::red}, std::pair{&g, Colour::blue}}) {
            if (pattern->order() > col.order())
                continue;
            auto hit = contains_mono(col, *pattern, colour, budget);
            if (! hit.is_decided())
                return Outcome<TwoColoring>::undecided("burr_witness: verification undecided");
            if (*hit)
                throw InternalError{"burr_witness: construction contains a " + to_string(colour) + " target"};
        }
        return Outcome<TwoColoring>::decided(std::move(col));
    }

    auto burr_witness(const Graph & f, const Graph & g) -> Outcome<TwoColoring>
    {
        Budget b;
        return burr_witness(f, g, b);
    }

    auto serialize_coloring(const TwoColoring & col) -> string
    {
        std::ostringstream out;
        out << "N " << col.order() << "\n";
        for (auto & e : col.red().edges())
            out << e.u << " " << e.v << "\n";
        return out.str();
    }

    auto parse_coloring(const string & text) -> TwoColoring
    {
        std::istringstream in(text);
        string line;
        optional<int> order;
        vector<Edge> edges;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            auto start = line.find_first_not_of(" \t\r");
            if (start == string::npos || line[start] == '#')
                continue;
            std::istringstream fields(line);
            auto fail = [&](const string & why) {
                return ParseError{"coloring line " + std::to_string(line_no) + ": " + why};
            };
            if (! order) {
                string tag;
                long long n = -1;
                string extra;
                if (! (fields >> tag >> n) || tag != "N" || n < 0 || (fields >> extra))
                    throw fail("expected 'N <order>'");
                if (n > 100000)
                    throw fail("order too large");
                order = int(n);
                continue;
            }
            long long u = -1, v = -1;
            string extra;
            if (! (fields >> u >> v) || (fields >> extra))
                throw fail("expected 'u v'");
            if (u < 0 || v < 0 || u >= *order || v >= *order)
                throw fail("vertex out of range");
            if (u == v)
                throw fail("self-loop");
            edges.emplace_back(int(u), int(v));
        }
        if (! order)
            throw ParseError{"coloring: missing 'N <order>' header"};
        return TwoColoring(Graph(*order, edges));
    }

    auto coloring_graph6_record(const TwoColoring & col) -> string
    {
        return std::to_string(col.order()) + " " + to_graph6(col.red());
    }
}
