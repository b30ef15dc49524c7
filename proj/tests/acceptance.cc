// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "oracles.hh"
#include "pipeline_fixtures.hh"

#include <rgood/catalogue.hh>
#include <rgood/generators.hh>
#include <rgood/invariants.hh>
#include <rgood/pipeline.hh>
#include <rgood/ramsey.hh>
#include <rgood/two_coloring.hh>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace rgood;

namespace
{
    struct Tally
    {
        bool pass = true;
        std::ostringstream detail;

        auto fail(const std::string & why) -> void
        {
            if (pass)
                detail.str("");
            if (pass || detail.str().size() < 400)
                detail << why << "; ";
            pass = false;
        }
    };

    auto decided(const auto & outcome)
    {
        if (! outcome.is_decided())
            throw std::runtime_error("solver undecided: " + outcome.message());
        return *outcome;
    }

    // A colouring avoids a monochromatic pattern larger than itself trivially.
    auto avoids(const TwoColoring & col, const Graph & pattern, Colour colour) -> bool
    {
        return pattern.order() > col.order() || ! decided(contains_mono(col, pattern, colour));
    }

    auto ramsey_table(Tally & v) -> void
    {
        struct Row
        {
            std::string name;
            Graph f, g;
            int closed_form;
        };
        auto pp = [](int n, int m) { return std::max(n, m) + std::min(n, m) / 2 - 1; };
        std::vector<Row> rows{
            {"R(P3,P3)", path_graph(3), path_graph(3), pp(3, 3)},
            {"R(P3,P4)", path_graph(3), path_graph(4), pp(3, 4)},
            {"R(P4,P4)", path_graph(4), path_graph(4), pp(4, 4)},
            {"R(P5,P5)", path_graph(5), path_graph(5), pp(5, 5)},
            {"R(P4,K3)", path_graph(4), complete_graph(3), (3 - 1) * (4 - 1) + 1},
            {"R(P4,P4^2)", path_graph(4), path_power(4, 2), (4 - 1) * 2 + 4 / (2 + 1)},
        };
        for (auto & row : rows) {
            auto start = std::chrono::steady_clock::now();
            auto above = arrows(row.closed_form, row.f, row.g);
            auto below = arrows(row.closed_form - 1, row.f, row.g);
            auto full = ramsey_number(row.f, row.g, row.closed_form + 1);
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            bool ok = above.verdict == rgood::Verdict::arrows && below.verdict == rgood::Verdict::witness &&
                full.value == row.closed_form && secs < 120;
            if (below.witness)
                ok = ok && avoids(*below.witness, row.f, Colour::red) && avoids(*below.witness, row.g, Colour::blue);
            v.detail << row.name << "=" << (full.value ? std::to_string(*full.value) : "?") << " ";
            if (! ok)
                v.fail(row.name + " expected " + std::to_string(row.closed_form));
        }
    }

    auto burr_witnesses(Tally & v) -> void
    {
        int checked = 0;
        for (int nf = 1; nf <= 5; ++nf)
            for (auto & f : connected_graphs(nf))
                for (int ng = 1; ng <= 5; ++ng)
                    for (auto & g : all_graphs(ng)) {
                        int chi = decided(chromatic_number(g)), s = decided(sigma(g));
                        if (s > nf)
                            continue;
                        auto w = decided(burr_witness(f, g));
                        ++checked;
                        bool ok = w.order() == (chi - 1) * (nf - 1) + s - 1 &&
                            avoids(w, f, Colour::red) && avoids(w, g, Colour::blue);
                        if (ok && w.order() <= 9)
                            ok = ! oracle::contains(w.red(), f) && ! oracle::contains(w.blue(), g);
                        if (! ok)
                            v.fail("F=" + describe(f) + " G=" + describe(g));
                    }
        v.detail << checked << " (F, G) pairs";
    }

    auto erdos_gallai_dichotomy(Tally & v) -> void
    {
        int graphs = 0, calls = 0, both = 0;
        auto budget = Budget::unlimited();
        for (std::uint64_t seed = 0; graphs < 1000; ++seed) {
            int n = 3 + int(seed % 10);
            auto h = random_gnp(n, 0.08 + 0.06 * double(seed % 9), seed);
            ++graphs;
            int longest = oracle::longest_cycle(h);
            for (int c = 3; c <= n; ++c) {
                auto r = decided(erdos_gallai(h, c, budget));
                ++calls;
                bool cycle_branch = longest >= c;
                bool edge_branch = Rational(h.size()) < Rational((c - 1) * (n - 1), 2) + Rational(1);
                both += cycle_branch && edge_branch;
                bool ok = (cycle_branch || edge_branch) && bool(r.long_cycle) == cycle_branch &&
                    r.edge_bound_holds == edge_branch;
                if (r.long_cycle)
                    ok = ok && is_cycle_in(h, *r.long_cycle) && int(r.long_cycle->size()) >= c;
                if (! ok)
                    v.fail("n=" + std::to_string(n) + " c=" + std::to_string(c) + " seed=" + std::to_string(seed));
            }
        }
        v.detail << graphs << " graphs, " << calls << " (H, c) checks; returned branch always matches the oracle ("
                 << both << " checks where both branches hold)";
    }

    // Removals the segment procedure can make on cycle i: one per pair of segments.
    auto segment_bound(const CycleDecomposition & d) -> Rational::Int
    {
        if (d.cycles.empty())
            return 0;
        int seg = (int(d.cycles.back().size()) + 1) / 2;
        std::vector<int> count;
        int total = 0;
        for (auto & c : d.cycles) {
            count.push_back((int(c.size()) + seg - 1) / seg);
            total += count.back();
        }
        int worst = 0;
        for (int s : count)
            worst = std::max(worst, s * (total - s));
        return worst;
    }

    auto multipartite_structure(Tally & v) -> void
    {
        int instances = 0, planted = 0;
        std::mt19937_64 rng(2024);
        for (std::uint64_t seed = 0; instances < 120; ++seed) {
            auto col = fixture::near_cliques(seed, 3 + int(seed % 2), 4, 7, 0, 0);
            auto d = extract_longest_cycles(col.red(), 4);
            if (! d.certified || d.cycles.size() < 2)
                continue;
            ++instances;
            auto beta = segment_bound(d);
            auto w = blue_multipartite(col, d, beta);
            bool ok = w.status == MultipartiteStatus::ok && all_cross_pairs_blue(col, w.parts);
            for (std::size_t i = 0; ok && i < d.cycles.size(); ++i)
                ok = w.parts[i].count() >= int(d.cycles[i].size()) - beta && w.parts[i].is_subset_of(d.cycle_vertices(int(i)));
            // quadratic re-check, independent of the helper
            for (std::size_t i = 0; ok && i < w.parts.size(); ++i)
                for (std::size_t j = i + 1; ok && j < w.parts.size(); ++j)
                    for (int x : w.parts[i])
                        for (int y : w.parts[j])
                            ok = ok && col.colour(x, y) == Colour::blue;
            if (! ok)
                v.fail("structure seed " + std::to_string(seed));

            // plant two independent red edges between one segment pair of cycles a < b
            int a = int(rng() % (d.cycles.size() - 1));
            int b = a + 1 + int(rng() % (d.cycles.size() - a - 1));
            int seg = (int(d.cycles.back().size()) + 1) / 2;
            auto & ca = d.cycles[a];
            auto & cb = d.cycles[b];
            auto es = col.red().edges();
            es.push_back({ca[0], cb[0]});
            es.push_back({ca[1], cb[std::min(seg, int(cb.size())) - 1]});
            TwoColoring bad(Graph(col.order(), es));
            auto hit = blue_multipartite(bad, d, beta);
            ++planted;
            bool caught = hit.status == MultipartiteStatus::maximality_violation && ! hit.violations.empty();
            if (caught) {
                auto & viol = hit.violations.front();
                auto residual = bad.red().all_vertices();
                for (int i = 0; i < viol.cycle_a; ++i)
                    residual -= d.cycle_vertices(i);
                auto sub = bad.red().restricted_to(residual);
                auto longest = decided(longest_cycle(sub));
                caught = is_cycle_in(sub, viol.longer_cycle) &&
                    int(viol.longer_cycle.size()) > int(d.cycles[viol.cycle_a].size()) && longest &&
                    longest->size() > d.cycles[viol.cycle_a].size();
            }
            if (! caught)
                v.fail("planted pair not caught, seed " + std::to_string(seed));
        }
        v.detail << instances << " certified decompositions, " << planted << " planted violations caught";
    }

    auto neighbourhood_bound(Tally & v) -> void
    {
        int instances = 0;
        long long subsets = 0;
        std::mt19937_64 rng(99);
        for (std::uint64_t seed = 0; instances < 60; ++seed) {
            int delta = 2 + int(seed % 3);
            int extra = 4 + int(seed % 11);
            auto col = fixture::near_cliques(seed + 5000, 3, 4, 7, extra, 1 + int(seed % 3));
            if (col.order() > 40)
                continue;
            auto d = extract_longest_cycles(col.red(), 4);
            auto w = d.leftover.to_vector();
            if (! d.certified || d.cycles.empty() || w.empty())
                continue;
            ++instances;
            auto check = [&](const std::vector<int> & ws) {
                for (int i = 0; i < int(d.cycles.size()); ++i) {
                    ++subsets;
                    auto r = common_blue_neighborhood(col, d, ws, i, delta);
                    int c = int(d.cycles[i].size());
                    // independent recount
                    int common = 0;
                    for (int x : d.cycles[i]) {
                        bool all_blue = true;
                        for (int y : ws)
                            all_blue = all_blue && col.colour(x, y) == Colour::blue;
                        common += all_blue;
                    }
                    if (! r.violations.empty() || common != r.common.count() || 2 * common < c - delta * delta)
                        v.fail("seed " + std::to_string(seed) + " cycle " + std::to_string(i));
                }
            };
            if (w.size() <= 12) {
                for (std::uint32_t mask = 1; mask < (1u << w.size()); ++mask) {
                    if (std::popcount(mask) > delta)
                        continue;
                    std::vector<int> ws;
                    for (std::size_t b = 0; b < w.size(); ++b)
                        if (mask >> b & 1)
                            ws.push_back(w[b]);
                    check(ws);
                }
            }
            else
                for (int s = 0; s < 1000; ++s) {
                    auto shuffled = w;
                    std::shuffle(shuffled.begin(), shuffled.end(), rng);
                    shuffled.resize(1 + rng() % delta);
                    check(shuffled);
                }
        }
        v.detail << instances << " certified instances, " << subsets << " (subset, cycle) checks, zero violations";
    }

    struct EndToEnd
    {
        std::string name;
        Graph g;
        TwoColoring col;
        Rational::Int beta;
    };

    auto end_to_end(Tally & v) -> void
    {
        std::vector<EndToEnd> runs;
        for (int slack = 0; slack <= 2; ++slack)
            runs.push_back({"3K4 slack " + std::to_string(slack), clique_union(3, 4), fixture::blocked(3, 11, 3 + slack), 1});
        runs.push_back({"2K3 slack 2", clique_union(2, 3), fixture::blocked(2, 5, 4), 1});
        runs.push_back({"3K3 slack 1", clique_union(3, 3), fixture::blocked(2, 8, 4), 1});
        runs.push_back({"K3+K3+K2 slack 2", disjoint_union({clique_union(2, 3), complete_graph(2)}), fixture::blocked(2, 7, 4), 1});
        for (auto & r : runs) {
            auto start = std::chrono::steady_clock::now();
            auto params = fixture::params_for(r.col, r.g, Rational(1, 100), r.beta);
            auto result = run_pipeline(r.col, r.g, params);
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            bool ok = result.outcome == PipelineOutcome::embedding && result.embedding &&
                verify_embedding(r.col, r.g, *result.embedding) && secs < 10;
            // independent edge-by-edge check
            if (ok)
                for (auto e : r.g.edges())
                    ok = ok && r.col.colour(result.embedding->map[e.u], result.embedding->map[e.v]) == Colour::blue;
            v.detail << r.name << " (N=" << r.col.order() << ", " << (result.plan ? to_string(result.plan->which) : "-") << ") ";
            if (! ok)
                v.fail(r.name + ": " + result.failed_stage + " " + result.message);
        }
    }

    auto negative_control(Tally & v) -> void
    {
        std::vector<std::pair<std::string, Graph>> targets{
            {"3K4", clique_union(3, 4)}, {"2K3", clique_union(2, 3)}, {"3K3", clique_union(3, 3)}};
        for (auto & [name, g] : targets) {
            int n = g.order();
            auto col = decided(burr_witness(path_graph(n), g));
            auto params = fixture::params_for(col, g, Rational(1, 100), 1);
            auto result = run_pipeline(col, g, params);
            bool ok = avoids(col, path_graph(n), Colour::red) && avoids(col, g, Colour::blue) && result.outcome == PipelineOutcome::diagnostic && ! result.embedding &&
                (result.failed_stage == "plan" || result.failed_stage == "embed");
            v.detail << name << " N=" << col.order() << " -> " << result.failed_stage
                     << " diagnostic; ";
            if (! ok)
                v.fail(name + ": outcome " + to_string(result.outcome));
        }
    }

    auto invariant_suite(Tally & v) -> void
    {
        int graphs = 0;
        for (int n = 1; n <= 7; ++n)
            for (auto & g : all_graphs(n)) {
                ++graphs;
                int chi = decided(chromatic_number(g)), s = decided(sigma(g)), a = decided(independence_number(g));
                bool ok = s * chi <= n && n <= a * chi && chi == oracle::chi(g) && s == oracle::sigma(g) && a == oracle::alpha(g);
                bool tight = a * (max_degree(g) + 1) == n;
                ok = ok && tight == is_equal_clique_union(g);
                if (! ok)
                    v.fail(describe(g));
            }
        v.detail << graphs << " graphs on 1..7 vertices";
    }
}

auto main() -> int
{
    std::vector<std::pair<std::string, std::function<void(Tally &)>>> criteria{
        {"1 exact Ramsey table", ramsey_table},
        {"2 blocked-clique witnesses avoid both targets", burr_witnesses},
        {"3 long-cycle / edge-count dichotomy", erdos_gallai_dichotomy},
        {"4 blue multipartite structure", multipartite_structure},
        {"5 common blue neighbourhood bound", neighbourhood_bound},
        {"6 end-to-end embedding", end_to_end},
        {"7 negative control", negative_control},
        {"8 invariant suite", invariant_suite},
    };
    bool all = true;
    for (auto & [name, check] : criteria) {
        Tally v;
        auto start = std::chrono::steady_clock::now();
        try {
            check(v);
        }
        catch (const std::exception & e) {
            v.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        auto text = v.detail.str();
        while (! text.empty() && (text.back() == ' ' || text.back() == ';'))
            text.pop_back();
        std::printf("%s criterion %s: %s (%.1fs)\n", v.pass ? "PASS" : "FAIL", name.c_str(), text.c_str(), secs);
        std::fflush(stdout);
        all = all && v.pass;
    }
    return all ? 0 : 1;
}
