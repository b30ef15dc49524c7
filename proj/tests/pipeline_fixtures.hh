#pragma once

#include <rgood/generators.hh>
#include <rgood/invariants.hh>
#include <rgood/pipeline.hh>

#include <random>

namespace fixture
{
    using namespace rgood;

    // Relaxed parameters for G with the host order taken from the colouring.
    inline auto params_for(const TwoColoring & col, const Graph & g, const Rational & eps, Rational::Int beta,
        std::optional<int> min_cycle = std::nullopt) -> PipelineParams
    {
        auto classes = *optimal_coloring_min_class(g);
        return make_params(std::max(2, max_degree(g)), eps, g.order(), classes.colours(), classes.class_sizes().back(), false,
            ParamOverrides{beta, col.order(), min_cycle});
    }

    // (copies) red cliques of the given size followed by `isolated` vertices.
    inline auto blocked(int copies, int size, int isolated) -> TwoColoring
    {
        return TwoColoring(disjoint_union({clique_union(copies, size), Graph(isolated)}));
    }

    // Disjoint red cliques with a few edges removed, plus at most one red star between each pair
    // of cliques and `extra` further vertices with a few red edges into the cliques.
    inline auto near_cliques(std::uint64_t seed, int cliques, int lo, int hi, int extra, int extra_degree) -> TwoColoring
    {
        std::mt19937_64 rng(seed);
        auto pick = [&](int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); };
        std::vector<std::vector<int>> blocks;
        std::vector<Edge> red;
        int next = 0;
        for (int c = 0; c < cliques; ++c) {
            int size = pick(lo, hi);
            std::vector<int> block;
            for (int i = 0; i < size; ++i)
                block.push_back(next++);
            for (int i = 0; i < size; ++i)
                for (int j = i + 1; j < size; ++j)
                    if (size < 5 || pick(0, 9) != 0)
                        red.push_back({block[i], block[j]});
            blocks.push_back(block);
        }
        for (int a = 0; a < cliques; ++a)
            for (int b = a + 1; b < cliques; ++b) {
                if (pick(0, 2) == 0)
                    continue;
                int centre = blocks[a][pick(0, int(blocks[a].size()) - 1)];
                int leaves = pick(1, 3);
                for (int l = 0; l < leaves; ++l)
                    red.push_back({centre, blocks[b][pick(0, int(blocks[b].size()) - 1)]});
            }
        for (int e = 0; e < extra; ++e) {
            int w = next++;
            for (int d = 0; d < extra_degree; ++d)
                red.push_back({w, pick(0, w - 1)});
        }
        return TwoColoring(Graph(next, red));
    }
}
