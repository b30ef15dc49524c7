#include <rgood/errors.hh>
#include <rgood/invariants.hh>

#include <algorithm>
#include <limits>
#include <numeric>

using std::optional;
using std::vector;

namespace rgood
{
    auto ProperColoring::class_sizes() const -> vector<int>
    {
        vector<int> sizes;
        for (auto & c : classes)
            sizes.push_back(int(c.size()));
        return sizes;
    }

    auto ProperColoring::colour_of(int order) const -> vector<int>
    {
        vector<int> colour(order, -1);
        for (int c = 0; c < colours(); ++c)
            for (int v : classes[c])
                colour[v] = c;
        return colour;
    }

    auto is_proper_coloring(const Graph & g, const ProperColoring & c) -> bool
    {
        vector<int> seen(g.order(), 0);
        for (auto & cls : c.classes) {
            if (cls.empty())
                return false;
            for (int v : cls) {
                if (v < 0 || v >= g.order() || seen[v]++)
                    return false;
                for (int u : cls)
                    if (g.adjacent(u, v))
                        return false;
            }
        }
        return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
    }

    auto is_cycle_in(const Graph & g, const Cycle & c) -> bool
    {
        if (c.size() < 3)
            return false;
        VertexSet seen(g.order());
        for (std::size_t i = 0; i < c.size(); ++i) {
            int v = c[i];
            if (v < 0 || v >= g.order() || seen.contains(v))
                return false;
            seen.insert(v);
            if (! g.adjacent(v, c[(i + 1) % c.size()]))
                return false;
        }
        return true;
    }

    auto is_path_in(const Graph & g, const Path & p) -> bool
    {
        VertexSet seen(g.order());
        for (std::size_t i = 0; i < p.size(); ++i) {
            int v = p[i];
            if (v < 0 || v >= g.order() || seen.contains(v))
                return false;
            seen.insert(v);
            if (i > 0 && ! g.adjacent(p[i - 1], v))
                return false;
        }
        return ! p.empty();
    }

    auto greedy_clique(const Graph & g) -> vector<int>
    {
        vector<int> clique;
        auto candidates = g.all_vertices();
        while (! candidates.empty()) {
            int pick = -1, pick_score = -1;
            for (int v : candidates) {
                int score = (g.neighbours(v) & candidates).count();
                if (score > pick_score)
                    pick = v, pick_score = score;
            }
            clique.push_back(pick);
            candidates &= g.neighbours(pick);
        }
        return clique;
    }

    namespace
    {
        // DSATUR branch and bound.
        struct ColourSearch
        {
            const Graph & g;
            Budget & budget;
            int n;
            int lower;
            int best;
            vector<int> colour, best_colour;
            vector<vector<int>> neighbour_colour_count;
            bool aborted = false;

            ColourSearch(const Graph & graph, Budget & b) :
                g(graph), budget(b), n(graph.order()), colour(n, -1),
                neighbour_colour_count(n, vector<int>(n + 1, 0))
            {
                lower = int(greedy_clique(g).size());
                best = n + 1;
            }

            auto set(int v, int c, int delta) -> void
            {
                colour[v] = delta > 0 ? c : -1;
                for (int u : g.neighbours(v))
                    neighbour_colour_count[u][c] += delta;
            }

            auto pick(int used) const -> int
            {
                int pick = -1, pick_sat = -1, pick_deg = -1;
                for (int v = 0; v < n; ++v) {
                    if (colour[v] != -1)
                        continue;
                    int sat = 0;
                    for (int c = 0; c < used; ++c)
                        sat += neighbour_colour_count[v][c] > 0;
                    int deg = 0;
                    for (int u : g.neighbours(v))
                        deg += colour[u] == -1;
                    if (sat > pick_sat || (sat == pick_sat && deg > pick_deg))
                        pick = v, pick_sat = sat, pick_deg = deg;
                }
                return pick;
            }

            auto search(int coloured, int used) -> void
            {
                if (aborted || best == lower)
                    return;
                if (! budget.spend()) {
                    aborted = true;
                    return;
                }
                if (coloured == n) {
                    if (used < best) {
                        best = used;
                        best_colour = colour;
                    }
                    return;
                }
                int v = pick(used);
                for (int c = 0; c < used; ++c)
                    if (neighbour_colour_count[v][c] == 0) {
                        set(v, c, 1);
                        search(coloured + 1, used);
                        set(v, c, -1);
                        if (aborted || best == lower)
                            return;
                    }
                if (used + 1 < best) {
                    set(v, used, 1);
                    search(coloured + 1, used + 1);
                    set(v, used, -1);
                }
            }
        };

        // Enumerates proper colourings with exactly k colours, colours introduced in order,
        // minimising the smallest class.
        struct MinClassSearch
        {
            const Graph & g;
            Budget & budget;
            int n, k;
            vector<int> order, colour, sizes, best_colour;
            int best;
            bool aborted = false;

            MinClassSearch(const Graph & graph, Budget & b, int colours) :
                g(graph), budget(b), n(graph.order()), k(colours), order(n), colour(n, -1), sizes(colours, 0),
                best(std::numeric_limits<int>::max())
            {
                // descending degree, then smallest index
                std::iota(order.begin(), order.end(), 0);
                std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
            }

            auto search(int i, int used) -> void
            {
                if (aborted || best == 1)
                    return;
                if (! budget.spend()) {
                    aborted = true;
                    return;
                }
                if (n - i < k - used)
                    return;
                if (used == k && *std::min_element(sizes.begin(), sizes.end()) >= best)
                    return;
                if (i == n) {
                    best = *std::min_element(sizes.begin(), sizes.end());
                    best_colour = colour;
                    return;
                }
                int v = order[i];
                for (int c = 0; c <= std::min(used, k - 1); ++c) {
                    bool clash = false;
                    for (int u : g.neighbours(v))
                        if (colour[u] == c) {
                            clash = true;
                            break;
                        }
                    if (clash)
                        continue;
                    colour[v] = c;
                    ++sizes[c];
                    search(i + 1, std::max(used, c + 1));
                    --sizes[c];
                    colour[v] = -1;
                    if (aborted || best == 1)
                        return;
                }
            }
        };

        auto to_coloring(const vector<int> & colour, int k) -> ProperColoring
        {
            ProperColoring result;
            result.classes.assign(k, {});
            for (int v = 0; v < int(colour.size()); ++v)
                result.classes[colour[v]].push_back(v);
            std::sort(result.classes.begin(), result.classes.end(), [](auto & a, auto & b) {
                if (a.size() != b.size())
                    return a.size() > b.size();
                return a.front() < b.front();
            });
            return result;
        }
    }

    auto chromatic_number(const Graph & g, Budget & budget) -> Outcome<int>
    {
        if (g.order() == 0)
            return Outcome<int>::decided(0);
        ColourSearch s(g, budget);
        s.search(0, 0);
        if (s.aborted)
            return Outcome<int>::undecided("chromatic number: node budget exceeded");
        return Outcome<int>::decided(s.best);
    }

    auto chromatic_number(const Graph & g) -> Outcome<int>
    {
        Budget b;
        return chromatic_number(g, b);
    }

    auto optimal_coloring_min_class(const Graph & g, Budget & budget) -> Outcome<ProperColoring>
    {
        auto chi = chromatic_number(g, budget);
        if (! chi.is_decided())
            return Outcome<ProperColoring>::undecided(chi.message());
        if (*chi == 0)
            return Outcome<ProperColoring>::decided(ProperColoring{});
        MinClassSearch s(g, budget, *chi);
        s.search(0, 0);
        if (s.aborted)
            return Outcome<ProperColoring>::undecided("sigma: node budget exceeded");
        if (s.best_colour.empty())
            return Outcome<ProperColoring>::error("no colouring with chi colours found");
        return Outcome<ProperColoring>::decided(to_coloring(s.best_colour, *chi));
    }

    auto optimal_coloring_min_class(const Graph & g) -> Outcome<ProperColoring>
    {
        Budget b;
        return optimal_coloring_min_class(g, b);
    }

    auto sigma(const Graph & g, Budget & budget) -> Outcome<int>
    {
        return optimal_coloring_min_class(g, budget).map([](const ProperColoring & c) {
            return c.classes.empty() ? 0 : int(c.classes.back().size());
        });
    }

    auto sigma(const Graph & g) -> Outcome<int>
    {
        Budget b;
        return sigma(g, b);
    }

    namespace
    {
        struct IndependentSetSearch
        {
            const Graph & g;
            Budget & budget;
            int best = 0;
            bool aborted = false;

            auto search(const VertexSet & candidates, int size) -> void
            {
                if (aborted)
                    return;
                if (! budget.spend()) {
                    aborted = true;
                    return;
                }
                int remaining = candidates.count();
                if (remaining == 0) {
                    best = std::max(best, size);
                    return;
                }
                if (size + remaining <= best)
                    return;

                int low = -1, low_deg = g.order() + 1, high = -1, high_deg = -1;
                for (int v : candidates) {
                    int d = (g.neighbours(v) & candidates).count();
                    if (d < low_deg)
                        low = v, low_deg = d;
                    if (d > high_deg)
                        high = v, high_deg = d;
                }

                // a vertex of degree at most one can always be taken
                if (low_deg <= 1) {
                    auto rest = candidates - g.neighbours(low);
                    rest.erase(low);
                    search(rest, size + 1);
                    return;
                }

                auto with = candidates - g.neighbours(high);
                with.erase(high);
                search(with, size + 1);
                auto without = candidates;
                without.erase(high);
                search(without, size);
            }
        };
    }

    auto independence_number(const Graph & g, Budget & budget) -> Outcome<int>
    {
        IndependentSetSearch s{g, budget};
        s.search(g.all_vertices(), 0);
        if (s.aborted)
            return Outcome<int>::undecided("independence number: node budget exceeded");
        return Outcome<int>::decided(s.best);
    }

    auto independence_number(const Graph & g) -> Outcome<int>
    {
        Budget b;
        return independence_number(g, b);
    }

    auto is_equal_clique_union(const Graph & g) -> bool
    {
        int common = -1;
        for (auto & comp : components(g)) {
            int size = comp.count();
            for (int v : comp)
                if (g.degree(v) != size - 1)
                    return false;
            if (common != -1 && size != common)
                return false;
            common = size;
        }
        return true;
    }

    namespace
    {
        struct CycleSearch
        {
            const Graph & g;
            Budget & budget;
            int at_least;
            int stop_at;

            optional<Cycle> best;
            int best_len = 0;
            bool aborted = false, done = false;

            int start = 0;
            vector<int> path;
            VertexSet on_path, allowed;
            vector<VertexSet> blocks = biconnected_blocks(g);

            vector<int> disc, low, parent, tree_block;
            vector<Edge> edge_stack;
            vector<VertexSet> found_blocks;
            int clock = 0;

            auto dfs(int u, const VertexSet & scope) -> void
            {
                disc[u] = low[u] = clock++;
                for (int w : g.neighbours(u) & scope) {
                    if (disc[w] == -1) {
                        parent[w] = u;
                        edge_stack.push_back({u, w});
                        dfs(w, scope);
                        low[u] = std::min(low[u], low[w]);
                        if (low[w] >= disc[u]) {
                            VertexSet block(g.order());
                            int id = int(found_blocks.size());
                            while (true) {
                                auto e = edge_stack.back();
                                edge_stack.pop_back();
                                block.insert(e.u);
                                block.insert(e.v);
                                if (parent[e.v] == e.u)
                                    tree_block[e.v] = id;
                                else if (parent[e.u] == e.v)
                                    tree_block[e.u] = id;
                                if (e == Edge{u, w})
                                    break;
                            }
                            found_blocks.push_back(std::move(block));
                        }
                    }
                    else if (w != parent[u] && disc[w] < disc[u]) {
                        edge_stack.push_back({u, w});
                        low[u] = std::min(low[u], disc[w]);
                    }
                }
            }

            // Vertices on some v-start path inside free + {v, start}: the blocks crossed by the
            // DFS tree path from start to v. Empty when v cannot get back to start.
            auto usable(int v, const VertexSet & free) -> VertexSet
            {
                int n = g.order();
                auto scope = free;
                scope.insert(v);
                scope.insert(start);
                disc.assign(n, -1);
                low.assign(n, 0);
                parent.assign(n, -1);
                tree_block.assign(n, -1);
                edge_stack.clear();
                found_blocks.clear();
                clock = 0;
                dfs(start, scope);
                VertexSet out(n);
                if (disc[v] == -1)
                    return out;
                for (int x = v; x != start; x = parent[x])
                    out |= found_blocks[tree_block[x]];
                return out;
            }

            auto block_of(int u, int v) const -> const VertexSet &
            {
                for (auto & b : blocks)
                    if (b.contains(u) && b.contains(v))
                        return b;
                throw InternalError{"longest cycle: edge outside every block"};
            }

            auto needed() const -> int { return std::max(best_len + 1, at_least); }

            auto extend(int v) -> void
            {
                if (! budget.spend()) {
                    aborted = true;
                    return;
                }
                int len = int(path.size());
                if (len >= 3 && len >= at_least && len > best_len && g.adjacent(v, start)) {
                    best = path;
                    best_len = len;
                    if (best_len >= stop_at) {
                        done = true;
                        return;
                    }
                }

                auto free = allowed - on_path;
                VertexSet next(g.order());
                if (len == 1) {
                    auto reach = reachable_within(g, v, free);
                    reach.erase(v);
                    if (! reach.intersects(g.neighbours(start)) || len + reach.count() < needed())
                        return;
                    next = g.neighbours(v) & free;
                }
                else {
                    auto use = usable(v, free);
                    if (use.empty() || len + use.count() - 2 < needed())
                        return;
                    next = g.neighbours(v) & free & use;
                }

                auto saved = allowed;
                for (int w : next) {
                    // the whole cycle stays in the block of its first edge
                    if (len == 1)
                        allowed = saved & block_of(start, w);
                    path.push_back(w);
                    on_path.insert(w);
                    extend(w);
                    on_path.erase(w);
                    path.pop_back();
                    if (aborted || done)
                        break;
                }
                allowed = std::move(saved);
            }

            auto run() -> void
            {
                int n = g.order();
                for (start = 0; start < n && ! aborted && ! done; ++start) {
                    if (g.degree(start) < 2)
                        continue;
                    allowed = VertexSet(n);
                    for (int u = start + 1; u < n; ++u)
                        allowed.insert(u);
                    auto reach = reachable_within(g, start, allowed);
                    if (reach.count() < needed())
                        continue;
                    allowed &= reach;
                    on_path = VertexSet(n);
                    on_path.insert(start);
                    path.assign(1, start);
                    extend(start);
                }
            }
        };
    }

    auto longest_cycle_best_effort(const Graph & g, Budget & budget) -> CycleSearchResult
    {
        CycleSearch s{g, budget, 3, std::numeric_limits<int>::max()};
        s.run();
        return CycleSearchResult{s.best, ! s.aborted};
    }

    auto longest_cycle(const Graph & g, Budget & budget) -> Outcome<optional<Cycle>>
    {
        auto r = longest_cycle_best_effort(g, budget);
        if (! r.certified)
            return Outcome<optional<Cycle>>::undecided("longest cycle: node budget exceeded");
        return Outcome<optional<Cycle>>::decided(r.best);
    }

    auto longest_cycle(const Graph & g) -> Outcome<optional<Cycle>>
    {
        Budget b;
        return longest_cycle(g, b);
    }

    auto cycle_of_length_at_least(const Graph & g, int min_length, Budget & budget) -> Outcome<optional<Cycle>>
    {
        CycleSearch s{g, budget, std::max(3, min_length), std::max(3, min_length)};
        s.run();
        if (s.aborted)
            return Outcome<optional<Cycle>>::undecided("cycle search: node budget exceeded");
        return Outcome<optional<Cycle>>::decided(s.best);
    }

    namespace
    {
        struct PathSearch
        {
            const Graph & g;
            Budget & budget;
            int m;
            vector<int> path;
            VertexSet on_path;
            bool aborted = false, found = false;

            auto extend(int v) -> void
            {
                if (! budget.spend()) {
                    aborted = true;
                    return;
                }
                int len = int(path.size());
                if (len == m) {
                    found = true;
                    return;
                }
                auto free = g.all_vertices() - on_path;
                auto reach = reachable_within(g, v, free);
                if (len - 1 + reach.count() < m)
                    return;
                for (int w : g.neighbours(v) & free) {
                    path.push_back(w);
                    on_path.insert(w);
                    extend(w);
                    if (found || aborted)
                        return;
                    on_path.erase(w);
                    path.pop_back();
                }
            }
        };
    }

    auto has_path(const Graph & g, int m, Budget & budget) -> Outcome<optional<Path>>
    {
        if (m < 1)
            throw PreconditionError{"has_path: m must be at least 1"};
        if (m > g.order())
            return Outcome<optional<Path>>::decided(std::nullopt);
        PathSearch s{g, budget, m};
        for (int start = 0; start < g.order(); ++start) {
            s.on_path = VertexSet(g.order());
            s.on_path.insert(start);
            s.path.assign(1, start);
            s.extend(start);
            if (s.found)
                return Outcome<optional<Path>>::decided(s.path);
            if (s.aborted)
                return Outcome<optional<Path>>::undecided("path search: node budget exceeded");
        }
        return Outcome<optional<Path>>::decided(std::nullopt);
    }

    auto has_path(const Graph & g, int m) -> Outcome<optional<Path>>
    {
        Budget b;
        return has_path(g, m, b);
    }

    namespace
    {
        // Decides whether the (connected) graph has a layout of bandwidth at most k.
        struct LayoutSearch
        {
            const Graph & g;
            Budget & budget;
            int k;
            vector<int> position;
            VertexSet placed;
            bool aborted = false;

            auto place(int pos) -> bool
            {
                int n = g.order();
                if (pos == n)
                    return true;
                if (! budget.spend()) {
                    aborted = true;
                    return false;
                }
                auto unplaced = g.all_vertices() - placed;
                // every placed vertex must still fit its unplaced neighbours inside its window
                for (int u : placed) {
                    int waiting = (g.neighbours(u) & unplaced).count();
                    if (waiting > 0 && waiting > position[u] + k - pos + 1)
                        return false;
                }
                for (int v : unplaced) {
                    bool ok = true;
                    for (int u : g.neighbours(v) & placed)
                        if (pos - position[u] > k) {
                            ok = false;
                            break;
                        }
                    if (! ok)
                        continue;
                    position[v] = pos;
                    placed.insert(v);
                    if (place(pos + 1))
                        return true;
                    placed.erase(v);
                    if (aborted)
                        return false;
                }
                return false;
            }
        };

        auto eccentricity(const Graph & g, int v) -> int
        {
            VertexSet seen(g.order()), frontier(g.order());
            seen.insert(v);
            frontier.insert(v);
            int depth = 0;
            while (true) {
                VertexSet next(g.order());
                for (int u : frontier)
                    next |= g.neighbours(u);
                next -= seen;
                if (next.empty())
                    return depth;
                seen |= next;
                frontier = std::move(next);
                ++depth;
            }
        }
    }

    auto bandwidth(const Graph & g, Budget & budget) -> Outcome<int>
    {
        if (g.order() < 1)
            throw PreconditionError{"bandwidth: graph must have at least one vertex"};
        int result = 0;
        for (auto & comp : components(g)) {
            auto vs = comp.to_vector();
            if (vs.size() == 1)
                continue;
            auto h = g.induced(vs);
            int diameter = 0;
            for (int v = 0; v < h.order(); ++v)
                diameter = std::max(diameter, eccentricity(h, v));
            int k = std::max({1, (max_degree(h) + 1) / 2, (h.order() - 1 + diameter - 1) / diameter, result});
            for (;; ++k) {
                LayoutSearch s{h, budget, k, vector<int>(h.order(), -1), VertexSet(h.order())};
                if (s.place(0))
                    break;
                if (s.aborted)
                    return Outcome<int>::undecided("bandwidth: node budget exceeded");
            }
            result = std::max(result, k);
        }
        return Outcome<int>::decided(result);
    }

    auto bandwidth(const Graph & g) -> Outcome<int>
    {
        Budget b;
        return bandwidth(g, b);
    }
}
