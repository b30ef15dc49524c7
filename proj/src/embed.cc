#include <rgood/errors.hh>
#include <rgood/pipeline.hh>

#include <algorithm>

using std::vector;

namespace rgood
{
    namespace
    {
        struct Embedder
        {
            const TwoColoring & col;
            const Graph & g;
            vector<int> order;             // placement order of G vertices
            vector<VertexSet> domains;     // target intersected with blue neighbourhoods of placed neighbours
            vector<int> map;
            VertexSet used;
            std::uint64_t limit;
            EmbedOutcome & out;
            int deepest = -1;

            auto record_stuck(int depth, int v) -> void
            {
                if (depth > deepest) {
                    deepest = depth;
                    out.stuck_vertex = v;
                    out.stuck_candidates = (domains[v] - used).count();
                }
            }

            auto place(int depth) -> bool
            {
                if (depth == int(order.size()))
                    return true;
                int v = order[depth];
                auto candidates = domains[v] - used;
                if (candidates.empty())
                    record_stuck(depth, v);
                for (int x : candidates) {
                    if (out.placements >= limit)
                        return false;
                    ++out.placements;
                    map[v] = x;
                    used.insert(x);
                    vector<std::pair<int, VertexSet>> saved;
                    bool alive = true;
                    for (int u : g.neighbours(v)) {
                        if (map[u] != -1)
                            continue;
                        saved.emplace_back(u, domains[u]);
                        domains[u] &= col.blue().neighbours(x);
                    }
                    for (int d = depth + 1; d < int(order.size()) && alive; ++d) {
                        int u = order[d];
                        if ((domains[u] - used).empty()) {
                            record_stuck(d, u);
                            alive = false;
                        }
                    }
                    if (alive && place(depth + 1))
                        return true;
                    for (auto & [u, dom] : saved)
                        domains[u] = std::move(dom);
                    used.erase(x);
                    map[v] = -1;
                }
                return false;
            }
        };
    }

    auto embed_classes(const TwoColoring & col, const PartitionPlan & plan, const Graph & g, const ProperColoring & classes,
        std::uint64_t placement_limit) -> EmbedOutcome
    {
        int k = classes.colours();
        if (int(plan.targets.size()) != k)
            throw PreconditionError{"embed_classes: plan and colouring disagree on the number of classes"};
        if (! is_proper_coloring(g, classes))
            throw PreconditionError{"embed_classes: classes are not a proper colouring of G"};

        EmbedOutcome out;
        Embedder e{col, g, {}, vector<VertexSet>(g.order(), VertexSet(col.order())), vector<int>(g.order(), -1),
            VertexSet(col.order()), placement_limit, out};
        auto class_of = classes.colour_of(g.order());
        for (int c = k - 1; c >= 0; --c) {
            auto members = classes.classes[c];
            std::stable_sort(members.begin(), members.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
            for (int v : members) {
                e.order.push_back(v);
                e.domains[v] = plan.targets[c];
            }
        }

        if (e.place(0)) {
            Embedding emb{e.map, class_of, plan.targets};
            if (! verify_embedding(col, g, emb))
                throw InternalError{"embed_classes: produced map failed verification"};
            out.embedding = std::move(emb);
            out.stuck_vertex = -1;
            out.stuck_candidates = 0;
            return out;
        }
        if (out.placements >= placement_limit)
            out.diagnostic = "placement budget of " + std::to_string(placement_limit) + " exhausted; ";
        if (out.stuck_vertex >= 0)
            out.diagnostic += "vertex " + std::to_string(out.stuck_vertex) + " of class A_" +
                std::to_string(class_of[out.stuck_vertex] + 1) + " has " + std::to_string(out.stuck_candidates) +
                " candidate hosts at the deepest point reached";
        return out;
    }

    auto verify_embedding(const TwoColoring & col, const Graph & g, const Embedding & e) -> bool
    {
        if (int(e.map.size()) != g.order())
            return false;
        VertexSet seen(col.order());
        for (int v = 0; v < g.order(); ++v) {
            int x = e.map[v];
            if (x < 0 || x >= col.order() || seen.contains(x))
                return false;
            seen.insert(x);
            if (! e.class_targets.empty() && ! e.class_targets.at(e.class_of.at(v)).contains(x))
                return false;
        }
        for (auto [u, v] : g.edges())
            if (col.colour(e.map[u], e.map[v]) != Colour::blue)
                return false;
        return true;
    }
}
