#include <rgood/cli.hh>
#include <rgood/generators.hh>
#include <rgood/graph6.hh>
#include <rgood/two_coloring.hh>

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;
using namespace rgood;

namespace
{
    struct Ran
    {
        int code;
        json report;
        std::string err;
    };

    auto run(std::vector<std::string> args) -> Ran
    {
        args.insert(args.begin(), "rgood");
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        json report = out.str().empty() ? json() : json::parse(out.str(), nullptr, false);
        return {code, report, err.str()};
    }

    auto temp(const std::string & name) -> std::string
    {
        return (std::filesystem::temp_directory_path() / ("rgood_test_" + name)).string();
    }

    auto slurp(const std::string & path) -> std::string
    {
        std::ifstream f(path);
        std::stringstream s;
        s << f.rdbuf();
        return s.str();
    }
}

TEST_CASE("invariants command")
{
    auto c5 = run({"invariants", "cycle:5"});
    CHECK(c5.code == 0);
    CHECK(c5.report["verdict"] == "decided");
    CHECK(c5.report["data"]["chi"]["value"] == 3);
    CHECK(c5.report["data"]["sigma"]["value"] == 1);
    CHECK(c5.report["data"]["alpha"]["value"] == 2);
    for (auto field : {"command", "inputs", "verdict", "data", "budget", "timing"})
        CHECK(c5.report.contains(field));

    auto p6 = run({"invariants", to_graph6(path_graph(6))});
    CHECK(p6.report["data"]["chi"]["value"] == 2);
    CHECK(p6.report["data"]["sigma"]["value"] == 3);
    CHECK(p6.report["data"]["alpha"]["value"] == 3);
    CHECK(p6.report["data"]["longest_path"]["value"]["length"] == 6);
    CHECK(p6.report["data"]["bandwidth"]["value"] == 1);
}

TEST_CASE("parse errors exit with 2")
{
    CHECK(run({"invariants", ""}).code == 2);
    CHECK(run({"invariants", "bogus:3"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"invariants"}).code == 2);
    CHECK(run({"pipeline", temp("missing_file"), "path:3", "--eps", "0.1"}).code == 2);
}

TEST_CASE("budget exhaustion exits with 3")
{
    auto r = run({"--budget", "2", "invariants", "petersen:"});
    CHECK(r.code == 3);
    CHECK(r.report["verdict"] == "undecided");
}

TEST_CASE("precondition failures exit with 4")
{
    CHECK(run({"eg-check", "complete:4", "7"}).code == 4);
    CHECK(run({"witness", "empty:3", "path:3"}).code == 4);
}

TEST_CASE("goodness command")
{
    auto r = run({"goodness", "path:4", "path:4", "--cap", "6"});
    CHECK(r.code == 0);
    CHECK(r.report["verdict"] == "good");
    CHECK(r.report["data"]["summary"] == "good, R=5, bound=5");

    auto c = run({"goodness", "cycle:4", "cycle:4", "--cap", "7"});
    CHECK(c.code == 1);
    CHECK(c.report["verdict"] == "not-good");

    auto u = run({"goodness", "path:4", "complete:3", "--cap", "5"});
    CHECK(u.code == 3);
}

TEST_CASE("ramsey and arrows commands")
{
    auto r = run({"ramsey", "path:3", "path:4", "--cap", "6"});
    CHECK(r.code == 0);
    CHECK(r.report["data"]["value"] == 4);

    auto path = temp("arrow_witness.txt");
    auto w = run({"arrows", "6", "path:4", "complete:3", "--out", path});
    CHECK(w.code == 1);
    CHECK(w.report["verdict"] == "witness");
    auto col = parse_coloring(slurp(path));
    CHECK(col.order() == 6);
    std::filesystem::remove(path);

    CHECK(run({"arrows", "7", "path:4", "complete:3"}).code == 0);
}

TEST_CASE("witness command writes a re-parsable colouring")
{
    auto path = temp("witness.txt");
    auto r = run({"witness", "path:4", "complete:3", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.report["verdict"] == "witness");
    auto col = parse_coloring(slurp(path));
    CHECK(col.red() == clique_union(2, 3));
    CHECK(serialize_coloring(col) == slurp(path));
    std::filesystem::remove(path);
}

TEST_CASE("eg-check command")
{
    CHECK(run({"eg-check", "complete:5", "5"}).report["verdict"] == "long-cycle");
    CHECK(run({"eg-check", "star:5", "3"}).report["verdict"] == "edge-bound");
}

TEST_CASE("generate command and seeds")
{
    auto a = run({"--seed", "9", "generate", "random:20,3,s"});
    CHECK(a.code == 0);
    CHECK(a.report["data"]["graph6"] == to_graph6(random_bounded_degree(20, 3, 9)));
    CHECK(run({"generate", "random:20,3,s"}).code == 2);
}

TEST_CASE("pipeline command on the three K_4 instance")
{
    auto coloring = temp("blocked.txt");
    {
        std::ofstream f(coloring);
        f << serialize_coloring(TwoColoring(disjoint_union({clique_union(3, 11), Graph(3)})));
    }
    auto trace = temp("trace.json"), out = temp("embedding.txt");
    auto r = run({"pipeline", coloring, "cliques:3,4", "--eps", "1/100", "--beta", "1", "--trace", trace, "--out", out});
    CHECK(r.code == 0);
    CHECK(r.report["verdict"] == "embedding");
    auto t = json::parse(slurp(trace));
    CHECK(t.size() == 8);
    CHECK(t.back()["outcome"] == "verified");
    CHECK(slurp(out).find("0 0\n") != std::string::npos);

    auto again = run({"pipeline", "red:cliques:3,11+empty:3", "cliques:3,4", "--eps", "1/100", "--beta", "1"});
    CHECK(again.report["data"]["embedding"] == r.report["data"]["embedding"]);

    auto strict = run({"pipeline", coloring, "cliques:3,4", "--eps", "1/100", "--strict"});
    CHECK(strict.code == 4);
    for (auto p : {coloring, trace, out})
        std::filesystem::remove(p);
}

TEST_CASE("reports are deterministic apart from timing")
{
    auto a = run({"invariants", "petersen:"}).report;
    auto b = run({"invariants", "petersen:"}).report;
    a.erase("timing");
    b.erase("timing");
    CHECK(a == b);
}
