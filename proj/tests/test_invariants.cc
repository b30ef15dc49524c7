#include "oracles.hh"

#include <rgood/catalogue.hh>
#include <rgood/errors.hh>
#include <rgood/generators.hh>
#include <rgood/invariants.hh>

#include <doctest.h>

using namespace rgood;

namespace
{
    auto value(const auto & outcome)
    {
        REQUIRE(outcome.is_decided());
        return *outcome;
    }
}

TEST_CASE("degrees")
{
    CHECK(max_degree(cycle_graph(5)) == 2);
    CHECK(min_degree(cycle_graph(5)) == 2);
    CHECK(max_degree(complete_graph(4)) == 3);
    CHECK(max_degree(path_graph(6)) == 2);
    CHECK(min_degree(path_graph(6)) == 1);
}

TEST_CASE("chromatic number, sigma and independence number examples")
{
    auto c5 = cycle_graph(5), p6 = path_graph(6), k4s = clique_union(3, 4);
    CHECK(value(chromatic_number(c5)) == 3);
    CHECK(value(chromatic_number(p6)) == 2);
    CHECK(value(chromatic_number(k4s)) == 4);
    CHECK(value(sigma(path_graph(5))) == 2);
    CHECK(value(sigma(c5)) == 1);
    CHECK(value(sigma(k4s)) == 3);
    CHECK(value(independence_number(c5)) == 2);
    CHECK(value(independence_number(p6)) == 3);
    CHECK(value(independence_number(k4s)) == 3);
    CHECK(value(chromatic_number(Graph(0))) == 0);
    CHECK(value(chromatic_number(Graph(3))) == 1);
    CHECK(value(sigma(Graph(3))) == 3);
    CHECK(value(chromatic_number(petersen_graph())) == 3);
    CHECK(value(independence_number(petersen_graph())) == 4);
}

TEST_CASE("optimal colouring with minimum class")
{
    auto check = [](const Graph & g, std::vector<int> sizes) {
        auto c = value(optimal_coloring_min_class(g));
        CHECK(is_proper_coloring(g, c));
        CHECK(c.class_sizes() == sizes);
    };
    check(cycle_graph(5), {2, 2, 1});
    check(path_graph(4), {2, 2});
    check(clique_union(3, 4), {3, 3, 3, 3});
    check(path_graph(5), {3, 2});
    check(star_graph(3), {3, 1});
}

TEST_CASE("equal clique unions")
{
    CHECK(is_equal_clique_union(clique_union(3, 4)));
    CHECK(! is_equal_clique_union(disjoint_union({complete_graph(3), complete_graph(2)})));
    CHECK(! is_equal_clique_union(cycle_graph(5)));
    CHECK(is_equal_clique_union(Graph(4)));
}

TEST_CASE("longest cycle examples")
{
    auto k4 = value(longest_cycle(complete_graph(4)));
    REQUIRE(k4);
    CHECK(k4->size() == 4);
    CHECK(*k4 == std::vector<int>{0, 1, 2, 3});
    CHECK(! value(longest_cycle(path_graph(7))));
    CHECK(! value(longest_cycle(star_graph(5))));
    auto p = value(longest_cycle(petersen_graph()));
    REQUIRE(p);
    CHECK(p->size() == 9);
    CHECK(is_cycle_in(petersen_graph(), *p));
}

TEST_CASE("longest cycle is the lexicographically smallest among the longest")
{
    auto g = disjoint_union({cycle_graph(5), complete_graph(5)});
    auto c = value(longest_cycle(g));
    REQUIRE(c);
    CHECK(*c == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("longest cycle budget")
{
    Budget tiny(3);
    auto r = longest_cycle(complete_graph(9), tiny);
    CHECK(r.status() == Status::undecided);
    CHECK_THROWS(r.value());
    Budget small(5);
    auto best = longest_cycle_best_effort(complete_graph(9), small);
    CHECK(! best.certified);
    if (best.best)
        CHECK(is_cycle_in(complete_graph(9), *best.best));
}

TEST_CASE("paths")
{
    auto g = disjoint_union({complete_graph(3), Graph(1)});
    CHECK(! value(has_path(g, 4)));
    auto p = value(has_path(path_graph(6), 6));
    REQUIRE(p);
    CHECK(is_path_in(path_graph(6), *p));
    CHECK(! value(has_path(path_graph(3), 4)));
    CHECK(value(has_path(Graph(1), 1)));
    CHECK_THROWS_AS(has_path(path_graph(3), 0), PreconditionError);
}

TEST_CASE("Hamilton paths in G(10, 1/2) agree with the subset oracle")
{
    for (int seed = 0; seed < 60; ++seed) {
        auto g = random_gnp(10, seed % 3 == 0 ? 0.25 : 0.5, seed);
        auto p = value(has_path(g, 10));
        CHECK(bool(p) == (oracle::longest_path(g) == 10));
        if (p)
            CHECK(is_path_in(g, *p));
    }
}

TEST_CASE("path powers and bandwidth")
{
    auto p42 = path_power(4, 2);
    CHECK(p42.size() == 5);
    CHECK(! p42.adjacent(0, 3));
    CHECK(path_power(6, 1) == path_graph(6));
    CHECK(path_power(5, 4) == complete_graph(5));
    CHECK(value(bandwidth(path_graph(7))) == 1);
    CHECK(value(bandwidth(complete_graph(5))) == 4);
    CHECK(value(bandwidth(star_graph(4))) == 2);
    CHECK(value(bandwidth(Graph(3))) == 0);
    CHECK(value(bandwidth(cycle_graph(6))) == 2);
    CHECK_THROWS_AS(bandwidth(Graph(0)), PreconditionError);
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k < n; ++k)
            CHECK(value(bandwidth(path_power(n, k))) == k);
}

TEST_CASE("proper colouring and cycle checks")
{
    auto c5 = cycle_graph(5);
    CHECK(is_proper_coloring(c5, ProperColoring{{{0, 2}, {1, 3}, {4}}}));
    CHECK(! is_proper_coloring(c5, ProperColoring{{{0, 1}, {2, 3}, {4}}}));
    CHECK(! is_proper_coloring(c5, ProperColoring{{{0, 2}, {1, 3}}}));
    CHECK(! is_proper_coloring(c5, ProperColoring{{{0, 2}, {1, 3}, {4}, {}}}));
    CHECK(is_cycle_in(c5, {2, 3, 4, 0, 1}));
    CHECK(! is_cycle_in(c5, {0, 1, 2}));
    CHECK(! is_cycle_in(complete_graph(3), {0, 1}));
    CHECK(is_path_in(c5, {1}));
    CHECK(! is_path_in(c5, {1, 1}));
}

TEST_CASE("greedy clique is a clique")
{
    for (int seed = 0; seed < 20; ++seed) {
        auto g = random_gnp(12, 0.5, seed);
        auto c = greedy_clique(g);
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                CHECK(g.adjacent(c[i], c[j]));
    }
}

TEST_CASE("solvers agree with brute-force oracles on every graph up to 7 vertices")
{
    for (int n = 1; n <= 7; ++n)
        for (auto & g : all_graphs(n)) {
            CAPTURE(describe(g));
            int chi = value(chromatic_number(g));
            CHECK(chi == oracle::chi(g));
            CHECK(value(sigma(g)) == oracle::sigma(g));
            CHECK(value(independence_number(g)) == oracle::alpha(g));
            auto c = value(longest_cycle(g));
            CHECK((c ? int(c->size()) : 0) == oracle::longest_cycle(g));
            if (c)
                CHECK(is_cycle_in(g, *c));
            CHECK(value(bandwidth(g)) == oracle::bandwidth(g));
            int lp = oracle::longest_path(g);
            CHECK(bool(value(has_path(g, lp))));
            if (lp < n)
                CHECK(! value(has_path(g, lp + 1)));
            auto col = value(optimal_coloring_min_class(g));
            CHECK(is_proper_coloring(g, col));
            CHECK(col.colours() == chi);
            CHECK(col.class_sizes().back() == oracle::sigma(g));
        }
}

TEST_CASE("solvers agree with brute-force oracles on sampled 8-vertex graphs")
{
    auto graphs = all_graphs(8);
    for (std::size_t i = 0; i < graphs.size(); i += 7) {
        auto & g = graphs[i];
        CAPTURE(describe(g));
        CHECK(value(chromatic_number(g)) == oracle::chi(g));
        CHECK(value(sigma(g)) == oracle::sigma(g));
        CHECK(value(independence_number(g)) == oracle::alpha(g));
        auto c = value(longest_cycle(g));
        CHECK((c ? int(c->size()) : 0) == oracle::longest_cycle(g));
        CHECK(value(bandwidth(g)) == oracle::bandwidth(g));
    }
}

TEST_CASE("sigma <= n / chi <= alpha and the equal-clique-union characterisation, n <= 8")
{
    for (int n = 1; n <= 8; ++n)
        for (auto & g : all_graphs(n)) {
            int chi = value(chromatic_number(g)), s = value(sigma(g)), a = value(independence_number(g));
            CHECK(s * chi <= n);
            CHECK(n <= a * chi);
            bool tight = a * (max_degree(g) + 1) == n;
            CHECK(tight == is_equal_clique_union(g));
        }
}
