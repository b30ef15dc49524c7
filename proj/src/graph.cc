#include <rgood/errors.hh>
#include <rgood/graph.hh>
#include <rgood/outcome.hh>

#include <algorithm>
#include <sstream>

using std::span;
using std::string;
using std::vector;

namespace rgood
{
    auto to_string(Status s) -> string
    {
        switch (s) {
        case Status::decided: return "decided";
        case Status::undecided: return "undecided";
        case Status::error: return "error";
        }
        return "?";
    }

    Graph::Graph(int order)
    {
        if (order < 0)
            throw PreconditionError{"graph order must be nonnegative"};
        _rows.assign(order, VertexSet(order));
    }

    Graph::Graph(int order, span<const Edge> edges) : Graph(order)
    {
        for (auto & e : edges) {
            if (e.u < 0 || e.v >= order)
                throw PreconditionError{"edge endpoint out of range"};
            if (e.u == e.v)
                throw PreconditionError{"self-loop at vertex " + std::to_string(e.u)};
            if (! _rows[e.u].contains(e.v)) {
                _rows[e.u].insert(e.v);
                _rows[e.v].insert(e.u);
                ++_size;
            }
        }
    }

    Graph::Graph(int order, std::initializer_list<Edge> edges) : Graph(order, span<const Edge>{edges.begin(), edges.size()}) {}

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> out;
        out.reserve(_size);
        for (int u = 0; u < order(); ++u)
            for (int v = _rows[u].next(u); v >= 0; v = _rows[u].next(v))
                out.emplace_back(u, v);
        return out;
    }

    auto Graph::restricted_to(const VertexSet & keep) const -> Graph
    {
        Graph result(order());
        for (int u = 0; u < order(); ++u)
            if (keep.contains(u)) {
                result._rows[u] = _rows[u] & keep;
                result._size += result._rows[u].count();
            }
        result._size /= 2;
        return result;
    }

    auto Graph::induced(span<const int> vs) const -> Graph
    {
        vector<Edge> es;
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (adjacent(vs[i], vs[j]))
                    es.emplace_back(int(i), int(j));
        return Graph(int(vs.size()), es);
    }

    auto Graph::complement() const -> Graph
    {
        Graph result(order());
        for (int u = 0; u < order(); ++u) {
            result._rows[u] = _rows[u].complement();
            result._rows[u].erase(u);
            result._size += result._rows[u].count();
        }
        result._size /= 2;
        return result;
    }

    auto max_degree(const Graph & g) -> int
    {
        int best = 0;
        for (int v = 0; v < g.order(); ++v)
            best = std::max(best, g.degree(v));
        return best;
    }

    auto min_degree(const Graph & g) -> int
    {
        if (g.order() == 0)
            return 0;
        int best = g.order();
        for (int v = 0; v < g.order(); ++v)
            best = std::min(best, g.degree(v));
        return best;
    }

    auto reachable_within(const Graph & g, int v, const VertexSet & allowed) -> VertexSet
    {
        VertexSet seen(g.order()), frontier(g.order());
        frontier.insert(v);
        seen.insert(v);
        while (! frontier.empty()) {
            VertexSet next(g.order());
            for (int u : frontier)
                next |= g.neighbours(u);
            next &= allowed;
            next -= seen;
            seen |= next;
            frontier = std::move(next);
        }
        return seen;
    }

    auto biconnected_blocks(const Graph & g) -> vector<VertexSet>
    {
        int n = g.order();
        vector<int> disc(n, -1), low(n, 0);
        vector<Edge> stack;
        vector<VertexSet> blocks;
        int time = 0;
        auto visit = [&](auto & self, int u, int parent) -> void {
            disc[u] = low[u] = time++;
            for (int w : g.neighbours(u)) {
                if (disc[w] == -1) {
                    stack.push_back({u, w});
                    self(self, w, u);
                    low[u] = std::min(low[u], low[w]);
                    if (low[w] >= disc[u]) {
                        VertexSet block(n);
                        while (true) {
                            auto e = stack.back();
                            stack.pop_back();
                            block.insert(e.u);
                            block.insert(e.v);
                            if ((e.u == u && e.v == w) || (e.u == w && e.v == u))
                                break;
                        }
                        blocks.push_back(std::move(block));
                    }
                }
                else if (w != parent && disc[w] < disc[u]) {
                    stack.push_back({u, w});
                    low[u] = std::min(low[u], disc[w]);
                }
            }
        };
        for (int v = 0; v < n; ++v)
            if (disc[v] == -1)
                visit(visit, v, -1);
        return blocks;
    }

    auto components(const Graph & g) -> vector<VertexSet>
    {
        vector<VertexSet> out;
        auto unseen = g.all_vertices();
        while (! unseen.empty()) {
            auto comp = reachable_within(g, unseen.first(), unseen);
            unseen -= comp;
            out.push_back(std::move(comp));
        }
        return out;
    }

    auto is_connected(const Graph & g) -> bool
    {
        return components(g).size() <= 1;
    }

    auto describe(const Graph & g) -> string
    {
        std::ostringstream s;
        s << "n=" << g.order() << " e=" << g.size() << " {";
        bool first = true;
        for (auto & e : g.edges()) {
            s << (first ? "" : " ") << e.u << "-" << e.v;
            first = false;
        }
        s << "}";
        return s.str();
    }
}
