#include "oracles.hh"

#include <rgood/catalogue.hh>
#include <rgood/errors.hh>
#include <rgood/generators.hh>

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace rgood;

namespace
{
    auto relabel(const Graph & g, std::uint64_t seed) -> Graph
    {
        std::vector<int> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), std::mt19937_64(seed));
        std::vector<Edge> es;
        for (auto e : g.edges())
            es.push_back({perm[e.u], perm[e.v]});
        return Graph(g.order(), es);
    }
}

TEST_CASE("number of isomorphism classes matches the known sequence")
{
    std::vector<std::size_t> all{1, 1, 2, 4, 11, 34, 156, 1044, 12346};
    std::vector<std::size_t> connected{1, 1, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 0; n <= 8; ++n) {
        CAPTURE(n);
        CHECK(all_graphs(n).size() == all[n]);
        CHECK(connected_graphs(n).size() == connected[n]);
    }
}

TEST_CASE("canonical form is invariant under relabelling")
{
    for (int seed = 0; seed < 300; ++seed) {
        auto g = random_gnp(3 + seed % 9, 0.45, seed);
        auto h = relabel(g, seed * 31 + 1);
        CHECK(canonical_form(g) == canonical_form(h));
        CHECK(canonical_code(g) == canonical_code(h));
        if (g.order() <= 8)
            CHECK(oracle::isomorphic(canonical_form(g), g));
    }
    CHECK(canonical_code(petersen_graph()) == canonical_code(relabel(petersen_graph(), 5)));
}

TEST_CASE("canonical form separates non-isomorphic graphs")
{
    auto graphs = all_graphs(6);
    std::set<std::uint64_t> codes;
    for (auto & g : graphs) {
        CHECK(canonical_form(g) == g);
        codes.insert(canonical_code(g));
    }
    CHECK(codes.size() == graphs.size());
    CHECK(std::is_sorted(graphs.begin(), graphs.end(),
        [](auto & a, auto & b) { return canonical_code(a) < canonical_code(b); }));
}

TEST_CASE("catalogue representatives are pairwise non-isomorphic by brute force, n = 5")
{
    auto graphs = all_graphs(5);
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i + 1; j < graphs.size(); ++j)
            CHECK(! oracle::isomorphic(graphs[i], graphs[j]));
}

TEST_CASE("catalogue limits")
{
    CHECK_THROWS_AS(canonical_form(Graph(12)), PreconditionError);
    CHECK_THROWS_AS(all_graphs(10), PreconditionError);
}
