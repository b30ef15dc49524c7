#include <rgood/catalogue.hh>
#include <rgood/errors.hh>

#include <algorithm>
#include <map>
#include <set>

using std::uint64_t;
using std::vector;

namespace rgood
{
    namespace
    {
        // Equitable refinement starting from the unit partition; returns a cell index per vertex.
        auto refine(const Graph & g) -> vector<int>
        {
            int n = g.order();
            vector<int> cell(n, 0);
            int cells = 1;
            while (true) {
                std::map<vector<int>, int> ids;
                vector<vector<int>> keys(n);
                for (int v = 0; v < n; ++v) {
                    keys[v].push_back(cell[v]);
                    vector<int> around;
                    for (int u : g.neighbours(v))
                        around.push_back(cell[u]);
                    std::sort(around.begin(), around.end());
                    keys[v].insert(keys[v].end(), around.begin(), around.end());
                    ids.emplace(keys[v], 0);
                }
                int next = 0;
                for (auto & [key, id] : ids)
                    id = next++;
                for (int v = 0; v < n; ++v)
                    cell[v] = ids[keys[v]];
                if (next == cells)
                    return cell;
                cells = next;
            }
        }

        struct Labeller
        {
            const Graph & g;
            int n;
            int total_bits;
            vector<int> cell_at;   // cell required at each position
            vector<int> cell_of;   // cell of each vertex
            vector<int> perm;
            vector<bool> used;
            uint64_t best = ~uint64_t{0};
            vector<int> best_perm;

            auto place(int p, uint64_t code, int bits, bool tight) -> void
            {
                if (p == n) {
                    if (code < best || best_perm.empty()) {
                        best = code;
                        best_perm = perm;
                    }
                    return;
                }
                for (int v = 0; v < n; ++v) {
                    if (used[v] || cell_of[v] != cell_at[p])
                        continue;
                    uint64_t col = 0;
                    for (int i = 0; i < p; ++i)
                        col = (col << 1) | (g.adjacent(perm[i], v) ? 1 : 0);
                    uint64_t next = (code << p) | col;
                    int next_bits = bits + p;
                    bool next_tight = false;
                    if (tight && ! best_perm.empty()) {
                        uint64_t best_prefix = next_bits == 0 ? 0 : best >> (total_bits - next_bits);
                        if (next > best_prefix)
                            continue;
                        next_tight = next == best_prefix;
                    }
                    perm[p] = v;
                    used[v] = true;
                    place(p + 1, next, next_bits, next_tight || best_perm.empty());
                    used[v] = false;
                }
            }
        };

        auto label(const Graph & g) -> Labeller
        {
            int n = g.order();
            if (n > 11)
                throw PreconditionError{"canonical form supports order <= 11"};
            Labeller l{g, n, n * (n - 1) / 2, {}, refine(g), vector<int>(n), vector<bool>(n, false), ~uint64_t{0}, {}};
            l.cell_at = l.cell_of;
            std::sort(l.cell_at.begin(), l.cell_at.end());
            l.place(0, 0, 0, true);
            return l;
        }
    }

    auto canonical_code(const Graph & g) -> uint64_t
    {
        if (g.order() <= 1)
            return 0;
        return label(g).best;
    }

    auto canonical_form(const Graph & g) -> Graph
    {
        if (g.order() <= 1)
            return g;
        auto l = label(g);
        return g.induced(l.best_perm);
    }

    auto all_graphs(int n) -> vector<Graph>
    {
        if (n < 0 || n > 8)
            throw PreconditionError{"all_graphs supports 0 <= n <= 8"};
        if (n == 0)
            return {Graph(0)};
        vector<Graph> layer{Graph(1)};
        for (int m = 2; m <= n; ++m) {
            std::map<uint64_t, Graph> seen;
            for (auto & base : layer) {
                auto base_edges = base.edges();
                for (uint64_t mask = 0; mask < (uint64_t{1} << (m - 1)); ++mask) {
                    auto es = base_edges;
                    for (int u = 0; u < m - 1; ++u)
                        if ((mask >> u) & 1)
                            es.emplace_back(u, m - 1);
                    Graph candidate(m, es);
                    auto l = label(candidate);
                    if (! seen.contains(l.best))
                        seen.emplace(l.best, candidate.induced(l.best_perm));
                }
            }
            layer.clear();
            for (auto & [code, graph] : seen)
                layer.push_back(std::move(graph));
        }
        return layer;
    }

    auto connected_graphs(int n) -> vector<Graph>
    {
        vector<Graph> out;
        for (auto & g : all_graphs(n))
            if (is_connected(g))
                out.push_back(g);
        return out;
    }
}
