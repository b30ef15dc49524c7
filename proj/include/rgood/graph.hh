#pragma once

#include <rgood/vertex_set.hh>

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace rgood
{
    // Undirected edge, always stored with u < v.
    struct Edge
    {
        int u = 0;
        int v = 0;

        Edge() = default;
        Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

        auto operator<=>(const Edge &) const = default;
    };

    // Finite simple undirected graph on vertices 0..order()-1. Immutable once built.
    class Graph
    {
    public:
        Graph() = default;
        explicit Graph(int order);

        // Throws PreconditionError on self-loops or out-of-range endpoints. Duplicate edges collapse.
        Graph(int order, std::span<const Edge> edges);
        Graph(int order, std::initializer_list<Edge> edges);

        auto order() const -> int { return int(_rows.size()); }
        auto size() const -> int { return _size; }

        auto adjacent(int u, int v) const -> bool { return _rows[u].contains(v); }
        auto neighbours(int v) const -> const VertexSet & { return _rows[v]; }
        auto degree(int v) const -> int { return _rows[v].count(); }
        auto all_vertices() const -> VertexSet { return VertexSet::full(order()); }

        // Lexicographic by (u, v).
        auto edges() const -> std::vector<Edge>;

        // Same vertex labels; every edge with an endpoint outside keep is dropped.
        auto restricted_to(const VertexSet & keep) const -> Graph;

        // Relabelled: vertex i of the result is vs[i].
        auto induced(std::span<const int> vs) const -> Graph;

        auto complement() const -> Graph;

        auto operator==(const Graph & other) const -> bool { return _rows == other._rows; }

    private:
        std::vector<VertexSet> _rows;
        int _size = 0;
    };

    auto max_degree(const Graph & g) -> int;
    auto min_degree(const Graph & g) -> int;

    // Vertex sets of the connected components, ordered by smallest member.
    auto components(const Graph & g) -> std::vector<VertexSet>;
    auto is_connected(const Graph & g) -> bool;

    // Vertices reachable from v using only vertices in allowed (v itself need not be in allowed).
    auto reachable_within(const Graph & g, int v, const VertexSet & allowed) -> VertexSet;

    // Vertex sets of the biconnected blocks (bridges give two-vertex blocks; isolated vertices
    // give none). Every cycle lies inside a single block.
    auto biconnected_blocks(const Graph & g) -> std::vector<VertexSet>;

    auto describe(const Graph & g) -> std::string;
}
