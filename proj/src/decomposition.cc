#include <rgood/errors.hh>
#include <rgood/pipeline.hh>

#include <algorithm>
#include <map>

using std::optional;
using std::string;
using std::vector;

namespace rgood
{
    auto erdos_gallai(const Graph & h, int c, Budget & budget) -> Outcome<ErdosGallaiResult>
    {
        if (c < 3 || c > h.order())
            throw PreconditionError{"erdos_gallai: need 3 <= c <= |H|"};
        auto found = cycle_of_length_at_least(h, c, budget);
        if (! found.is_decided())
            return Outcome<ErdosGallaiResult>::undecided(found.message());

        ErdosGallaiResult r;
        r.long_cycle = *found;
        r.edges = h.size();
        r.bound = Rational(c - 1) * Rational(h.order() - 1) / Rational(2) + Rational(1);
        r.edge_bound_holds = Rational(r.edges) < r.bound;
        if (! r.long_cycle && ! r.edge_bound_holds)
            throw InternalError{"erdos_gallai: no long cycle and the edge bound fails"};
        return Outcome<ErdosGallaiResult>::decided(r);
    }

    auto CycleDecomposition::lengths() const -> vector<int>
    {
        vector<int> out;
        for (auto & c : cycles)
            out.push_back(int(c.size()));
        return out;
    }

    auto CycleDecomposition::cycle_vertices(int i) const -> VertexSet
    {
        return VertexSet::of(leftover.universe(), cycles.at(i));
    }

    auto extract_longest_cycles(const Graph & red, int min_len, std::uint64_t node_limit_per_cycle) -> CycleDecomposition
    {
        if (min_len < 3)
            throw PreconditionError{"extract_longest_cycles: min_len must be at least 3"};
        CycleDecomposition d;
        d.min_len = min_len;
        d.leftover = red.all_vertices();
        while (true) {
            Budget budget(node_limit_per_cycle);
            auto found = longest_cycle_best_effort(red.restricted_to(d.leftover), budget);
            if (! found.certified)
                d.certified = false;
            if (! found.best || int(found.best->size()) < min_len)
                break;
            for (int v : *found.best)
                d.leftover.erase(v);
            d.cycles.push_back(std::move(*found.best));
        }
        return d;
    }

    auto prune_heavy_red(const Graph & red, const VertexSet & w, int threshold, const Rational & eps) -> PruneResult
    {
        PruneResult r;
        r.kept = VertexSet(red.order());
        r.heavy = VertexSet(red.order());
        for (int v : w) {
            if ((red.neighbours(v) & w).count() >= threshold)
                r.heavy.insert(v);
            else
                r.kept.insert(v);
        }
        r.guarantee_holds = Rational(r.kept.count()) >= (Rational(1) - eps) * Rational(w.count());
        return r;
    }

    auto all_cross_pairs_blue(const TwoColoring & col, const vector<VertexSet> & parts) -> bool
    {
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j)
                for (int u : parts[i])
                    if ((col.red().neighbours(u) & parts[j]).count() > 0)
                        return false;
        return true;
    }

    namespace
    {
        auto positions(const Cycle & c) -> std::map<int, int>
        {
            std::map<int, int> pos;
            for (int i = 0; i < int(c.size()); ++i)
                pos[c[i]] = i;
            return pos;
        }

        // Red cycle through both cross edges, using the long way round each cycle.
        auto splice(const Cycle & ci, const Cycle & cj, Edge first, Edge second, const VertexSet & on_i) -> Cycle
        {
            auto pi = positions(ci), pj = positions(cj);
            auto orient = [&](Edge e) { return on_i.contains(e.u) ? std::pair{e.u, e.v} : std::pair{e.v, e.u}; };
            auto [s1, t1] = orient(first);
            auto [s2, t2] = orient(second);
            if (pi[s1] > pi[s2]) {
                std::swap(s1, s2);
                std::swap(t1, t2);
            }
            int p1 = pi[s1], p2 = pi[s2], q1 = pj[t1], q2 = pj[t2];
            int li = int(ci.size()), lj = int(cj.size());
            Cycle out;
            for (int x = p2;; x = (x + 1) % li) {
                out.push_back(ci[x]);
                if (x == p1)
                    break;
            }
            int step = q1 < q2 ? -1 : 1;
            for (int y = q1;; y = (y + step + lj) % lj) {
                out.push_back(cj[y]);
                if (y == q2)
                    break;
            }
            return out;
        }
    }

    auto blue_multipartite(const TwoColoring & col, const CycleDecomposition & decomp, Rational::Int beta) -> MultipartiteWitness
    {
        MultipartiteWitness w;
        int r = int(decomp.cycles.size());
        int order = col.order();
        w.ignored.assign(r, VertexSet(order));
        if (r == 0)
            return w;

        int shortest = int(decomp.cycles.back().size());
        w.segment_size = (shortest + 1) / 2;
        vector<vector<vector<int>>> segments(r);
        for (int i = 0; i < r; ++i) {
            auto & c = decomp.cycles[i];
            for (std::size_t s = 0; s < c.size(); s += w.segment_size)
                segments[i].emplace_back(c.begin() + s, c.begin() + std::min(c.size(), s + w.segment_size));
        }

        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                for (auto & seg_s : segments[i])
                    for (auto & seg_t : segments[j]) {
                        vector<Edge> red_edges;
                        for (int s : seg_s)
                            for (int t : seg_t)
                                if (col.red().adjacent(s, t))
                                    red_edges.push_back(Edge{s, t});
                        if (red_edges.empty())
                            continue;

                        optional<std::pair<Edge, Edge>> independent;
                        for (std::size_t a = 0; a < red_edges.size() && ! independent; ++a)
                            for (std::size_t b = a + 1; b < red_edges.size(); ++b) {
                                auto & e = red_edges[a];
                                auto & f = red_edges[b];
                                if (e.u != f.u && e.u != f.v && e.v != f.u && e.v != f.v) {
                                    independent = std::pair{e, f};
                                    break;
                                }
                            }

                        if (independent) {
                            MaximalityViolation v{i, j, independent->first, independent->second,
                                splice(decomp.cycles[i], decomp.cycles[j], independent->first, independent->second,
                                    decomp.cycle_vertices(i))};
                            w.violations.push_back(v);
                            if (decomp.certified) {
                                w.status = MultipartiteStatus::maximality_violation;
                                w.message = "two independent red edges between cycles " + std::to_string(i + 1) + " and " +
                                    std::to_string(j + 1) + ": " + std::to_string(v.first.u) + "-" + std::to_string(v.first.v) +
                                    ", " + std::to_string(v.second.u) + "-" + std::to_string(v.second.v) +
                                    " (they close a red cycle of length " + std::to_string(v.longer_cycle.size()) + ")";
                                for (int x = 0; x < r; ++x)
                                    w.parts.push_back(decomp.cycle_vertices(x) - w.ignored[x]);
                                return w;
                            }
                            // greedy vertex cover of the red bipartite graph between the runs
                            auto open = red_edges;
                            while (! open.empty()) {
                                std::map<int, int> hits;
                                for (auto & e : open)
                                    ++hits[e.u], ++hits[e.v];
                                int pick = std::max_element(hits.begin(), hits.end(),
                                    [](auto & a, auto & b) { return a.second < b.second; })->first;
                                w.ignored[decomp.cycle_vertices(i).contains(pick) ? i : j].insert(pick);
                                std::erase_if(open, [&](const Edge & e) { return e.u == pick || e.v == pick; });
                            }
                            continue;
                        }

                        std::erase_if(red_edges, [&](const Edge & e) {
                            auto side = [&](int x) { return decomp.cycle_vertices(i).contains(x) ? i : j; };
                            return w.ignored[side(e.u)].contains(e.u) || w.ignored[side(e.v)].contains(e.v);
                        });
                        if (red_edges.empty())
                            continue;
                        if (red_edges.size() == 1) {
                            auto & e = red_edges.front();
                            int t = decomp.cycle_vertices(j).contains(e.u) ? e.u : e.v;
                            w.ignored[j].insert(t);
                        }
                        else {
                            auto & e = red_edges[0];
                            auto & f = red_edges[1];
                            int centre = (e.u == f.u || e.u == f.v) ? e.u : e.v;
                            w.ignored[decomp.cycle_vertices(i).contains(centre) ? i : j].insert(centre);
                        }
                    }

        for (int i = 0; i < r; ++i)
            w.parts.push_back(decomp.cycle_vertices(i) - w.ignored[i]);

        if (! all_cross_pairs_blue(col, w.parts))
            throw InternalError{"blue_multipartite: parts are not completely blue to each other"};

        for (int i = 0; i < r; ++i) {
            auto need = Rational::Int(decomp.cycles[i].size()) - beta;
            if (Rational::Int(w.parts[i].count()) < need) {
                w.status = MultipartiteStatus::beta_exceeded;
                w.message += "cycle " + std::to_string(i + 1) + ": removed " + std::to_string(w.ignored[i].count()) +
                    " of " + std::to_string(decomp.cycles[i].size()) + " vertices, more than beta = " + int128_to_string(beta) + "; ";
            }
        }
        if (w.status == MultipartiteStatus::ok && ! w.violations.empty())
            w.message = std::to_string(w.violations.size()) + " maximality violation(s) on a non-certified decomposition";
        return w;
    }

    auto common_blue_neighborhood(const TwoColoring & col, const CycleDecomposition & decomp, const vector<int> & ws,
        int cycle_index, int delta) -> NeighbourhoodCheck
    {
        if (cycle_index < 0 || cycle_index >= int(decomp.cycles.size()))
            throw PreconditionError{"common_blue_neighborhood: cycle index out of range"};
        if (int(ws.size()) > delta)
            throw PreconditionError{"common_blue_neighborhood: more than delta vertices"};
        VertexSet distinct(col.order());
        for (int w : ws) {
            if (w < 0 || w >= col.order() || ! decomp.leftover.contains(w))
                throw PreconditionError{"common_blue_neighborhood: vertex " + std::to_string(w) + " is not in W"};
            if (distinct.contains(w))
                throw PreconditionError{"common_blue_neighborhood: repeated vertex"};
            distinct.insert(w);
        }

        auto & cycle = decomp.cycles[cycle_index];
        int length = int(cycle.size());
        NeighbourhoodCheck out;
        out.common = decomp.cycle_vertices(cycle_index);
        for (int w : ws)
            out.common &= col.blue().neighbours(w);
        out.size_bound_holds = 2 * out.common.count() >= length - delta * delta;

        if (! decomp.certified)
            return out;

        // successors on the cycle of each w's red neighbours
        vector<VertexSet> shifted;
        for (int w : ws) {
            VertexSet s(col.order());
            for (int p = 0; p < length; ++p)
                if (col.red().adjacent(w, cycle[p]))
                    s.insert(cycle[(p + 1) % length]);
            shifted.push_back(std::move(s));
        }
        for (std::size_t j = 0; j < ws.size(); ++j) {
            if ((col.red().neighbours(ws[j]) & shifted[j]).count() > 0)
                out.violations.push_back("vertex " + std::to_string(ws[j]) + " is red to two consecutive vertices of cycle " +
                    std::to_string(cycle_index + 1));
            for (std::size_t l = 0; l < ws.size(); ++l)
                if (l != j && (col.red().neighbours(ws[l]) & shifted[j]).count() > 1)
                    out.violations.push_back("vertex " + std::to_string(ws[l]) + " has more than one red neighbour among the successors of " +
                        std::to_string(ws[j]) + "'s red neighbours on cycle " + std::to_string(cycle_index + 1));
        }
        if (! out.size_bound_holds)
            out.violations.push_back("common blue neighbourhood has " + std::to_string(out.common.count()) +
                " vertices, below (c - delta^2)/2 with c = " + std::to_string(length));
        return out;
    }
}
