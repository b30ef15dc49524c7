#include "oracles.hh"

#include <rgood/catalogue.hh>
#include <rgood/errors.hh>
#include <rgood/generators.hh>
#include <rgood/ramsey.hh>

#include <doctest.h>

using namespace rgood;

namespace
{
    auto exact(const Graph & f, const Graph & g, int cap) -> int
    {
        auto r = ramsey_number(f, g, cap);
        REQUIRE(r.value);
        return *r.value;
    }

    auto verify_witness(const ArrowResult & r, const Graph & f, const Graph & g)
    {
        REQUIRE(r.verdict == Verdict::witness);
        REQUIRE(r.witness);
        CHECK(! oracle::contains(r.witness->red(), f));
        CHECK(! oracle::contains(r.witness->blue(), g));
    }
}

TEST_CASE("arrows examples")
{
    auto p3 = path_graph(3);
    CHECK(arrows(3, p3, p3).verdict == Verdict::arrows);
    auto two = arrows(2, p3, p3);
    verify_witness(two, p3, p3);
    auto six = arrows(6, path_graph(4), complete_graph(3));
    verify_witness(six, path_graph(4), complete_graph(3));
    CHECK(arrows(7, path_graph(4), complete_graph(3)).verdict == Verdict::arrows);
    CHECK(arrows(1, Graph(1), Graph(1)).verdict == Verdict::arrows);
    CHECK_THROWS_AS(arrows(0, p3, p3), PreconditionError);
    CHECK_THROWS_AS(arrows(65, p3, p3), PreconditionError);
}

TEST_CASE("arrows agrees with exhaustive enumeration for tiny orders")
{
    auto patterns = connected_graphs(3);
    for (auto & g : connected_graphs(4))
        patterns.push_back(g);
    for (auto & f : patterns)
        for (auto & g : patterns)
            for (int n = 2; n <= 5; ++n) {
                auto r = arrows(n, f, g);
                CHECK((r.verdict == Verdict::arrows) == oracle::arrows(n, f, g));
                if (r.verdict == Verdict::witness)
                    verify_witness(r, f, g);
            }
}

TEST_CASE("arrows is monotone and thread count does not change the verdict")
{
    SearchOptions one{default_node_limit, 1, 4};
    SearchOptions many{default_node_limit, 4, 6};
    auto f = path_graph(4), g = cycle_graph(4);
    bool before = false;
    for (int n = 3; n <= 7; ++n) {
        auto a = arrows(n, f, g, one);
        auto b = arrows(n, f, g, many);
        CHECK(a.verdict == b.verdict);
        if (a.witness && b.witness)
            CHECK(*a.witness == *b.witness);
        bool now = a.verdict == Verdict::arrows;
        CHECK((! before || now));
        before = now;
    }
}

TEST_CASE("budget exhaustion yields undecided")
{
    auto r = arrows(8, path_graph(5), complete_graph(4), SearchOptions{50, 1, 2});
    CHECK(r.verdict == Verdict::undecided);
    CHECK(! r.witness);
}

TEST_CASE("Burr bound")
{
    CHECK(burr_bound(path_graph(4), path_graph(4)) == 5);
    CHECK(burr_bound(path_graph(4), complete_graph(3)) == 7);
    for (int n = 2; n <= 9; ++n)
        CHECK(burr_bound(path_graph(n), complete_graph(2)) == n);
    CHECK(burr_bound(path_graph(4), path_power(4, 2)) == 7);
    CHECK_THROWS_AS(burr_bound(Graph(3), path_graph(3)), PreconditionError);
    CHECK_THROWS_AS(burr_bound(path_graph(2), Graph(4)), PreconditionError);
}

TEST_CASE("small path Ramsey numbers")
{
    CHECK(exact(path_graph(3), path_graph(3), 6) == 3);
    CHECK(exact(path_graph(3), path_graph(4), 6) == 4);
    CHECK(exact(path_graph(4), path_graph(4), 7) == 5);
    CHECK(exact(path_graph(4), complete_graph(3), 9) == 7);
    CHECK(exact(cycle_graph(4), cycle_graph(4), 8) == 6);
}

TEST_CASE("Ramsey number stays undecided below the answer")
{
    auto r = ramsey_number(path_graph(4), complete_graph(3), 6);
    CHECK(! r.value);
    CHECK(r.largest_witnessed == 6);
}

TEST_CASE("trees are K_3-good")
{
    for (int n = 2; n <= 5; ++n)
        for (auto & t : connected_graphs(n)) {
            if (t.size() != n - 1)
                continue;
            CAPTURE(describe(t));
            CHECK(exact(t, complete_graph(3), 2 * (n - 1) + 3) == 2 * (n - 1) + 1);
        }
    CHECK(exact(path_graph(3), complete_graph(4), 9) == 7);
    CHECK(exact(path_graph(2), complete_graph(4), 9) == 4);
}

TEST_CASE("goodness verdicts")
{
    auto pp = goodness_check(path_graph(4), path_graph(4), 7);
    CHECK(pp.burr_bound == 5);
    REQUIRE(pp.is_good);
    CHECK(*pp.is_good);

    auto cc = goodness_check(cycle_graph(4), cycle_graph(4), 8);
    CHECK(cc.burr_bound == 5);
    REQUIRE(cc.exact);
    CHECK(*cc.exact == 6);
    REQUIRE(cc.is_good);
    CHECK(! *cc.is_good);

    auto undecided = goodness_check(path_graph(4), complete_graph(3), 5);
    CHECK(! undecided.is_good);
}
