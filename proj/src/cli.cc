#include <rgood/catalogue.hh>
#include <rgood/cli.hh>
#include <rgood/errors.hh>
#include <rgood/generators.hh>
#include <rgood/graph6.hh>
#include <rgood/invariants.hh>
#include <rgood/pipeline.hh>
#include <rgood/ramsey.hh>
#include <rgood/two_coloring.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

using nlohmann::json;
using std::optional;
using std::string;
using std::vector;

namespace rgood::cli
{
    namespace
    {
        struct Report
        {
            json inputs = json::object();
            string verdict;
            json data = json::object();
            std::uint64_t budget_limit = 0;
            std::uint64_t budget_used = 0;
            int code = exit_decided;
        };

        template <typename T>
        auto outcome_json(const Outcome<T> & o, auto && value) -> json
        {
            if (o.is_decided())
                return json{{"status", "decided"}, {"value", value(*o)}};
            return json{{"status", to_string(o.status())}, {"message", o.message()}};
        }

        auto write_file(const string & path, const string & text) -> void
        {
            std::ofstream f(path);
            if (! f || ! (f << text))
                throw PreconditionError{"cannot write '" + path + "'"};
        }

        auto read_file(const string & path) -> string
        {
            std::ifstream f(path);
            if (! f)
                throw ParseError{"cannot read '" + path + "'"};
            std::stringstream s;
            s << f.rdbuf();
            return s.str();
        }

        auto graph_input(const string & text, optional<std::uint64_t> seed) -> std::pair<Graph, json>
        {
            auto g = parse_graph_argument(text, seed);
            return {g, json{{"argument", text}, {"graph6", to_graph6(g)}}};
        }

        auto invariants(const Graph & g, std::uint64_t limit, Report & report) -> void
        {
            Budget budget(limit);
            bool all = true;
            auto note = [&](const auto & o) {
                all = all && o.is_decided();
                return o;
            };
            auto id = [](const auto & v) { return json(v); };
            report.data["n"] = g.order();
            report.data["e"] = g.size();
            report.data["max_degree"] = max_degree(g);
            report.data["min_degree"] = min_degree(g);
            report.data["chi"] = outcome_json(note(chromatic_number(g, budget)), id);
            report.data["sigma"] = outcome_json(note(sigma(g, budget)), id);
            report.data["alpha"] = outcome_json(note(independence_number(g, budget)), id);
            if (g.order() > 0)
                report.data["bandwidth"] = outcome_json(note(bandwidth(g, budget)), id);
            report.data["longest_cycle"] = outcome_json(note(longest_cycle(g, budget)), [](const optional<Cycle> & c) {
                return c ? json{{"length", c->size()}, {"cycle", *c}} : json{{"length", 0}};
            });
            json path = json{{"status", "decided"}, {"value", json{{"length", 0}}}};
            for (int m = g.order(); m >= 1; --m) {
                auto p = note(has_path(g, m, budget));
                if (! p.is_decided()) {
                    path = json{{"status", to_string(p.status())}, {"message", p.message()}};
                    break;
                }
                if (*p) {
                    path = json{{"status", "decided"}, {"value", json{{"length", m}, {"path", **p}}}};
                    break;
                }
            }
            report.data["longest_path"] = path;
            report.data["equal_clique_union"] = is_equal_clique_union(g);
            report.budget_limit = limit;
            report.budget_used = budget.used();
            report.verdict = all ? "decided" : "undecided";
            report.code = all ? exit_decided : exit_undecided;
        }

        auto ramsey_json(const RamseyResult & r) -> json
        {
            return json{{"value", r.value ? json(*r.value) : json(nullptr)}, {"largest_witnessed", r.largest_witnessed},
                {"search_from", r.search_from}, {"nodes", r.nodes}, {"note", r.note}};
        }
    }

    auto run(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int
    {
        auto started = std::chrono::steady_clock::now();
        CLI::App app{"Ramsey goodness toolkit: invariants, exact small Ramsey numbers and the path-goodness embedding pipeline"};
        app.require_subcommand(1);
        app.set_version_flag("--version", "rgood 1.0");

        std::uint64_t limit = default_node_limit;
        optional<std::uint64_t> seed;
        int threads = 0;
        app.add_option("--budget", limit, "Node budget for each exact search")->capture_default_str();
        app.add_option("--seed", seed, "Seed for random family terms whose seed field is 's'");
        app.add_option("--threads", threads, "Worker threads for Ramsey searches (0 = all cores)");

        string graph_a, graph_b, out_path, coloring_arg, trace_path, eps_text, beta_text;
        int cap = 12, c = 3, host = 0, split_depth = 8;
        optional<long long> host_override;
        optional<int> min_cycle, delta;
        bool strict = false;
        std::uint64_t placements = default_placement_limit;

        auto * inv = app.add_subcommand("invariants", "Graph invariants of one graph");
        inv->add_option("graph", graph_a, "graph6 string or family spec")->required();

        auto * ram = app.add_subcommand("ramsey", "Exact R(F, G) by exhaustive search up to a cap");
        auto * good = app.add_subcommand("goodness", "Compare R(F, G) with the Burr lower bound");
        for (auto * s : {ram, good}) {
            s->add_option("F", graph_a, "F (graph6 or family spec)")->required();
            s->add_option("G", graph_b, "G (graph6 or family spec)")->required();
            s->add_option("--cap", cap, "Largest N searched")->capture_default_str();
            s->add_option("--split-depth", split_depth, "Edges fixed per parallel task")->capture_default_str();
        }

        auto * arr = app.add_subcommand("arrows", "Decide whether every colouring of K_N has a red F or a blue G");
        arr->add_option("N", host, "Order of the complete graph")->required();
        arr->add_option("F", graph_a, "F (graph6 or family spec)")->required();
        arr->add_option("G", graph_b, "G (graph6 or family spec)")->required();
        arr->add_option("--split-depth", split_depth)->capture_default_str();
        arr->add_option("--out", out_path, "Write a witness colouring here");

        auto * wit = app.add_subcommand("witness", "Blocked-clique colouring one vertex below the Burr bound");
        wit->add_option("F", graph_a, "F (graph6 or family spec)")->required();
        wit->add_option("G", graph_b, "G (graph6 or family spec)")->required();
        wit->add_option("--out", out_path, "Write the colouring here");

        auto * eg = app.add_subcommand("eg-check", "Long cycle or edge-count certificate for H and c");
        eg->add_option("H", graph_a, "H (graph6 or family spec)")->required();
        eg->add_option("c", c)->required();

        auto * gen = app.add_subcommand("generate", "Print the graph6 form of a family spec");
        gen->add_option("spec", graph_a)->required();

        auto * pipe = app.add_subcommand("pipeline", "Embed G in the blue graph of a colouring with no long red path");
        pipe->add_option("coloring", coloring_arg, "Colouring file, or red:<graph spec> for the red graph")->required();
        pipe->add_option("G", graph_b, "G (graph6 or family spec)")->required();
        pipe->add_option("--eps", eps_text, "epsilon, e.g. 1/243 or 0.05")->required();
        pipe->add_option("--beta", beta_text, "beta override (relaxed mode)");
        pipe->add_option("--N", host_override, "Host order override (relaxed mode; default: the colouring's order)");
        pipe->add_option("--min-cycle", min_cycle, "Shortest cycle kept by the decomposition (relaxed mode)");
        pipe->add_option("--delta", delta, "Degree bound (default: max(2, max degree of G))");
        pipe->add_flag("--strict", strict, "Derive beta and N from epsilon; reject overrides");
        pipe->add_option("--placements", placements, "Placement budget of the embedding search")->capture_default_str();
        pipe->add_option("--trace", trace_path, "Write the stage trace (JSON) here");
        pipe->add_option("--out", out_path, "Write the embedding here");

        try {
            app.parse(argc, argv);
        }
        catch (const CLI::CallForHelp & e) {
            return app.exit(e, out, err);
        }
        catch (const CLI::CallForAllHelp & e) {
            return app.exit(e, out, err);
        }
        catch (const CLI::CallForVersion & e) {
            return app.exit(e, out, err);
        }
        catch (const CLI::ParseError & e) {
            app.exit(e, out, err);
            return exit_parse;
        }

        string command;
        for (int i = 0; i < argc; ++i)
            command += (i ? " " : "") + string(argv[i]);

        Report report;
        SearchOptions search{limit, threads, split_depth};
        try {
            if (inv->parsed()) {
                auto [g, in] = graph_input(graph_a, seed);
                report.inputs["graph"] = in;
                invariants(g, limit, report);
            }
            else if (ram->parsed() || good->parsed()) {
                auto [f, fin] = graph_input(graph_a, seed);
                auto [g, gin] = graph_input(graph_b, seed);
                report.inputs = json{{"F", fin}, {"G", gin}, {"cap", cap}};
                report.budget_limit = limit;
                if (ram->parsed()) {
                    auto r = ramsey_number(f, g, cap, search);
                    report.data = ramsey_json(r);
                    report.budget_used = r.nodes;
                    report.verdict = r.value ? "decided" : "undecided";
                    report.code = r.value ? exit_decided : exit_undecided;
                }
                else {
                    auto r = goodness_check(f, g, cap, search);
                    report.data = json{{"burr_bound", r.burr_bound}, {"exact", r.exact ? json(*r.exact) : json(nullptr)},
                        {"search", ramsey_json(r.search)}};
                    report.budget_used = r.search.nodes;
                    if (! r.is_good) {
                        report.verdict = "undecided";
                        report.code = exit_undecided;
                        report.data["summary"] = "undecided, R > " + std::to_string(r.search.largest_witnessed) +
                            ", bound=" + std::to_string(r.burr_bound);
                    }
                    else {
                        report.verdict = *r.is_good ? "good" : "not-good";
                        report.code = *r.is_good ? exit_decided : exit_negative;
                        report.data["summary"] = report.verdict.substr(0, report.verdict.size()) + ", R=" +
                            std::to_string(*r.exact) + ", bound=" + std::to_string(r.burr_bound);
                    }
                }
            }
            else if (arr->parsed()) {
                auto [f, fin] = graph_input(graph_a, seed);
                auto [g, gin] = graph_input(graph_b, seed);
                report.inputs = json{{"N", host}, {"F", fin}, {"G", gin}};
                auto r = arrows(host, f, g, search);
                report.budget_limit = limit;
                report.budget_used = r.nodes;
                report.verdict = to_string(r.verdict);
                report.data = json{{"nodes", r.nodes}};
                if (r.witness) {
                    report.data["witness"] = coloring_graph6_record(*r.witness);
                    if (! out_path.empty())
                        write_file(out_path, serialize_coloring(*r.witness));
                }
                report.code = r.verdict == Verdict::arrows ? exit_decided
                    : r.verdict == Verdict::witness        ? exit_negative
                                                           : exit_undecided;
            }
            else if (wit->parsed()) {
                auto [f, fin] = graph_input(graph_a, seed);
                auto [g, gin] = graph_input(graph_b, seed);
                report.inputs = json{{"F", fin}, {"G", gin}};
                Budget budget(limit);
                auto w = burr_witness(f, g, budget);
                report.budget_limit = limit;
                report.budget_used = budget.used();
                if (! w.is_decided()) {
                    report.verdict = "undecided";
                    report.code = exit_undecided;
                    report.data["message"] = w.message();
                }
                else {
                    report.verdict = "witness";
                    report.data = json{{"N", w->order()}, {"red_edges", w->red().size()}, {"red", describe(w->red())},
                        {"record", coloring_graph6_record(*w)}};
                    if (! out_path.empty())
                        write_file(out_path, serialize_coloring(*w));
                }
            }
            else if (eg->parsed()) {
                auto [h, hin] = graph_input(graph_a, seed);
                report.inputs = json{{"H", hin}, {"c", c}};
                Budget budget(limit);
                auto r = erdos_gallai(h, c, budget);
                report.budget_limit = limit;
                report.budget_used = budget.used();
                if (! r.is_decided()) {
                    report.verdict = "undecided";
                    report.code = exit_undecided;
                }
                else {
                    report.verdict = r->long_cycle ? "long-cycle" : "edge-bound";
                    report.data = json{{"edges", r->edges}, {"bound", r->bound.to_string()}, {"edge_bound_holds", r->edge_bound_holds}};
                    if (r->long_cycle)
                        report.data["cycle"] = *r->long_cycle;
                }
            }
            else if (gen->parsed()) {
                auto g = graph_from_family(graph_a, seed);
                report.inputs = json{{"spec", graph_a}};
                report.verdict = "decided";
                report.data = json{{"graph6", to_graph6(g)}, {"n", g.order()}, {"e", g.size()}};
            }
            else if (pipe->parsed()) {
                auto col = coloring_arg.starts_with("red:") ? TwoColoring(parse_graph_argument(coloring_arg.substr(4), seed))
                                                            : parse_coloring(read_file(coloring_arg));
                auto [g, gin] = graph_input(graph_b, seed);
                report.inputs = json{{"coloring", coloring_arg}, {"coloring_record", coloring_graph6_record(col)}, {"G", gin}};
                Budget budget(limit);
                auto classes = optimal_coloring_min_class(g, budget);
                if (! classes.is_decided())
                    throw PreconditionError{"could not colour G optimally within the budget"};
                ParamOverrides over;
                if (! beta_text.empty())
                    over.beta = Rational::parse(beta_text).floor();
                if (host_override)
                    over.host_order = *host_override;
                else if (! strict)
                    over.host_order = col.order();
                over.min_cycle = min_cycle;
                int d = delta.value_or(std::max(2, max_degree(g)));
                auto params = make_params(d, Rational::parse(eps_text), g.order(), classes->colours(),
                    classes->class_sizes().back(), strict, over);
                auto result = run_pipeline(col, g, params, PipelineOptions{limit, placements});

                report.budget_limit = limit;
                report.verdict = to_string(result.outcome);
                report.data = json{{"message", result.message}, {"failed_stage", result.failed_stage},
                    {"failed_step", result.failed_step}};
                json trace = json::array();
                for (auto & r : result.trace)
                    trace.push_back(to_json(r));
                if (! trace_path.empty())
                    write_file(trace_path, trace.dump(2) + "\n");
                report.data["stages"] = trace.size();
                if (result.red_path)
                    report.data["red_path"] = *result.red_path;
                if (result.embedding) {
                    report.data["embedding"] = result.embedding->map;
                    if (! out_path.empty()) {
                        string text = "# G vertex, host vertex\n";
                        for (int v = 0; v < g.order(); ++v)
                            text += std::to_string(v) + " " + std::to_string(result.embedding->map[v]) + "\n";
                        write_file(out_path, text);
                    }
                }
                bool undecided = result.outcome == PipelineOutcome::diagnostic && result.failed_stage == "red-path";
                report.code = result.outcome == PipelineOutcome::embedding ? exit_decided
                    : undecided                                            ? exit_undecided
                                                                           : exit_negative;
                if (undecided)
                    report.verdict = "undecided";
            }
        }
        catch (const ParseError & e) {
            err << "parse error: " << e.what() << "\n";
            return exit_parse;
        }
        catch (const PreconditionError & e) {
            err << "precondition failed: " << e.what() << "\n";
            return exit_precondition;
        }
        catch (const InternalError & e) {
            err << "internal error: " << e.what() << "\n";
            return exit_internal;
        }

        auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
        json doc{{"command", command}, {"inputs", report.inputs}, {"verdict", report.verdict}, {"data", report.data},
            {"budget", json{{"limit", report.budget_limit}, {"used", report.budget_used}}}, {"timing", json{{"ms", elapsed}}}};
        if (seed)
            doc["inputs"]["seed"] = *seed;
        out << doc.dump(2) << "\n";
        return report.code;
    }

    auto run(const vector<string> & args, std::ostream & out, std::ostream & err) -> int
    {
        vector<const char *> argv;
        for (auto & a : args)
            argv.push_back(a.c_str());
        return run(int(argv.size()), argv.data(), out, err);
    }
}
