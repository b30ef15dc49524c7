#include <rgood/errors.hh>
#include <rgood/graph6.hh>
#include <rgood/pipeline.hh>

#include <algorithm>
#include <cstdio>

using nlohmann::json;
using std::string;
using std::vector;

namespace rgood
{
    auto to_string(PipelineOutcome o) -> string
    {
        switch (o) {
        case PipelineOutcome::red_path: return "red_path";
        case PipelineOutcome::embedding: return "embedding";
        case PipelineOutcome::diagnostic: return "diagnostic";
        }
        return "?";
    }

    auto fingerprint(const string & text) -> string
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : text) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return buf;
    }

    auto to_json(const StageRecord & r) -> json
    {
        return json{{"stage", r.stage}, {"step", r.step}, {"inputs_hash", r.inputs_hash}, {"certified", r.certified},
            {"outcome", r.outcome}, {"data", r.data}};
    }

    namespace
    {
        auto sizes(const vector<VertexSet> & sets) -> vector<int>
        {
            vector<int> out;
            for (auto & s : sets)
                out.push_back(s.count());
            return out;
        }

        auto checks_json(const vector<CapacityCheck> & checks) -> json
        {
            auto out = json::array();
            for (auto & c : checks)
                out.push_back(json{{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds}});
            return out;
        }

        struct Run
        {
            PipelineResult result;
            string input_hash;

            auto record(string stage, string step, bool certified, string outcome, json data) -> void
            {
                StageRecord r{std::move(stage), std::move(step), input_hash, certified, std::move(outcome), std::move(data)};
                input_hash = fingerprint(input_hash + r.stage + r.data.dump());
                result.trace.push_back(std::move(r));
            }

            auto fail(const string & stage, const string & step, const string & message) -> PipelineResult
            {
                result.outcome = PipelineOutcome::diagnostic;
                result.failed_stage = stage;
                result.failed_step = step;
                result.message = message;
                return std::move(result);
            }
        };
    }

    auto run_pipeline(const TwoColoring & col, const Graph & g, const PipelineParams & params, const PipelineOptions & options)
        -> PipelineResult
    {
        if (g.order() != params.n)
            throw PreconditionError{"run_pipeline: |G| = " + std::to_string(g.order()) + " but n = " + std::to_string(params.n)};
        if (col.order() != params.host_order)
            throw PreconditionError{"run_pipeline: colouring has order " + std::to_string(col.order()) + " but N = " +
                std::to_string(params.host_order)};
        if (max_degree(g) > params.delta)
            throw PreconditionError{"run_pipeline: max degree of G exceeds delta"};

        Run run;
        run.input_hash = fingerprint(serialize_coloring(col) + "|" + to_graph6(g));

        Budget budget(options.node_limit);
        auto classes = optimal_coloring_min_class(g, budget);
        if (! classes.is_decided())
            return run.fail("params", "colour-classes", "could not compute an optimal colouring of G: " + classes.message());
        if (classes->colours() != params.k)
            throw PreconditionError{"run_pipeline: chi(G) = " + std::to_string(classes->colours()) + " but k = " +
                std::to_string(params.k)};
        int sig = classes->class_sizes().back();
        if (sig != params.sigma)
            throw PreconditionError{"run_pipeline: sigma(G) = " + std::to_string(sig) + " but sigma = " + std::to_string(params.sigma)};
        Budget alpha_budget(options.node_limit);
        auto alpha = independence_number(g, alpha_budget);

        json req = json::array();
        for (auto & q : params.requirements)
            req.push_back(json{{"step", q.step}, {"condition", q.condition}, {"min_n", q.min_n}});
        long long reference = (long long)(params.k - 1) * (params.n - 1) + params.sigma;
        run.record("params", "parameters", true, "ok",
            json{{"delta", params.delta}, {"eps", params.eps.to_string()}, {"beta", int128_to_string(params.beta)},
                {"n", params.n}, {"k", params.k}, {"sigma", params.sigma}, {"N", params.host_order},
                {"strict", params.strict}, {"min_cycle", params.min_cycle}, {"overrides", params.overrides},
                {"order_requirements", req}, {"class_sizes", classes->class_sizes()},
                {"alpha", alpha.is_decided() ? json(*alpha) : json(nullptr)},
                {"burr_reference", reference},
                {"note", "the host order formula uses (k-1)n; the exact lower bound (k-1)(n-1)+sigma = " +
                        std::to_string(reference) + " differs by k-1"}});

        Budget path_budget(options.node_limit);
        auto path = has_path(col.red(), params.n, path_budget);
        if (! path.is_decided()) {
            run.record("red-path", "red-path", false, "undecided", json{{"nodes", path_budget.used()}});
            return run.fail("red-path", "red-path", "red path search undecided: " + path.message());
        }
        if (*path) {
            run.record("red-path", "red-path", true, "found", json{{"path", **path}});
            run.result.outcome = PipelineOutcome::red_path;
            run.result.red_path = **path;
            run.result.message = "the red graph contains a path on " + std::to_string(params.n) + " vertices";
            return std::move(run.result);
        }
        run.record("red-path", "red-path", true, "absent", json{{"nodes", path_budget.used()}});

        auto decomp = extract_longest_cycles(col.red(), params.min_cycle, options.node_limit);
        run.result.decomposition = decomp;
        json eg = nullptr;
        int leftover = decomp.leftover.count();
        if (leftover >= params.min_cycle) {
            Budget eg_budget(options.node_limit);
            auto res = erdos_gallai(col.red().induced(decomp.leftover.to_vector()),
                params.min_cycle, eg_budget);
            if (res.is_decided())
                eg = json{{"long_cycle", res->long_cycle.has_value()}, {"edges", res->edges},
                    {"bound", res->bound.to_string()}, {"edge_bound_holds", res->edge_bound_holds}};
        }
        run.record("decomposition", "ordered-longest-cycles", decomp.certified, "ok",
            json{{"r", decomp.cycles.size()}, {"lengths", decomp.lengths()}, {"W", leftover}, {"min_len", decomp.min_len},
                {"erdos_gallai_on_W", eg}});

        auto prune = prune_heavy_red(col.red(), decomp.leftover, params.heavy_threshold(), params.eps);
        run.result.prune = prune;
        run.record("prune", "heavy-vertex-pruning", true, prune.guarantee_holds ? "ok" : "guarantee-not-met",
            json{{"threshold", params.heavy_threshold()}, {"W0", prune.heavy.count()}, {"W_prime", prune.kept.count()},
                {"guarantee_holds", prune.guarantee_holds}});

        auto witness = blue_multipartite(col, decomp, params.beta);
        run.result.multipartite = witness;
        json violations = json::array();
        for (auto & v : witness.violations)
            violations.push_back(json{{"cycles", {v.cycle_a + 1, v.cycle_b + 1}}, {"first", {v.first.u, v.first.v}},
                {"second", {v.second.u, v.second.v}}, {"longer_cycle_length", v.longer_cycle.size()}});
        bool multipartite_ok = witness.status == MultipartiteStatus::ok;
        run.record("multipartite", "blue-multipartite", decomp.certified,
            witness.status == MultipartiteStatus::ok ? "ok"
                : witness.status == MultipartiteStatus::maximality_violation ? "maximality-violation" : "beta-exceeded",
            json{{"segment_size", witness.segment_size}, {"V_sizes", sizes(witness.parts)}, {"removed", sizes(witness.ignored)},
                {"violations", violations}, {"message", witness.message}});
        if (! multipartite_ok)
            return run.fail("multipartite", "blue-multipartite", witness.message);

        json nb = json::array();
        vector<vector<int>> probes;
        auto wp = prune.kept.to_vector();
        for (int w : wp)
            probes.push_back({w});
        if (int(wp.size()) > 1)
            probes.emplace_back(wp.begin(), wp.begin() + std::min<std::size_t>(params.delta, wp.size()));
        string nb_failure;
        for (int i = 0; i < int(decomp.cycles.size()); ++i) {
            int smallest = -1;
            bool bound = true;
            for (auto & ws : probes) {
                auto check = common_blue_neighborhood(col, decomp, ws, i, params.delta);
                bound = bound && check.size_bound_holds;
                if (smallest < 0 || check.common.count() < smallest)
                    smallest = check.common.count();
                if (nb_failure.empty() && ! check.violations.empty())
                    nb_failure = check.violations.front();
            }
            nb.push_back(json{{"cycle", i + 1}, {"length", decomp.cycles[i].size()}, {"probes", probes.size()},
                {"smallest_common", smallest}, {"size_bound_holds", bound}});
        }
        run.record("neighbourhoods", "common-blue-neighbourhood", decomp.certified, nb_failure.empty() ? "ok" : "violation",
            json{{"cycles", nb}});
        if (! nb_failure.empty() && decomp.certified)
            return run.fail("neighbourhoods", "common-blue-neighbourhood", "maximality violation: " + nb_failure);

        auto plan = partition_plan(col, decomp, witness, *classes, params, alpha.is_decided() ? *alpha : 0);
        run.result.plan = plan;
        string why;
        if (plan.feasible && ! plan_invariants_hold(plan, decomp, why))
            throw InternalError{"partition_plan: " + why};
        run.record("plan", "class-allocation", plan.cbar_exact, plan.feasible ? "feasible" : "infeasible",
            json{{"case", to_string(plan.which)}, {"trivial", plan.trivial}, {"class_sizes", plan.class_sizes},
                {"Lambda", plan.lambda_set}, {"Gamma", plan.gamma_set}, {"h", plan.h}, {"cbar", plan.cbar},
                {"U", plan.u.count()}, {"W", plan.w.count()}, {"W0", plan.w0.count()}, {"W_prime", plan.w_prime.count()},
                {"V_sizes", sizes(witness.parts)}, {"Q_sizes", sizes(plan.q)}, {"checks", checks_json(plan.checks)},
                {"outside_hypothesis", plan.outside_hypothesis}, {"diagnostic", plan.diagnostic}});
        if (! plan.feasible)
            return run.fail("plan", "class-allocation", plan.diagnostic);

        auto embedded = embed_classes(col, plan, g, *classes, options.placement_limit);
        if (! embedded.embedding) {
            run.record("embed", "embedding", true, "failed",
                json{{"placements", embedded.placements}, {"stuck_vertex", embedded.stuck_vertex},
                    {"stuck_candidates", embedded.stuck_candidates}});
            return run.fail("embed", "embedding", embedded.diagnostic);
        }
        run.record("embed", "embedding", true, "verified", json{{"placements", embedded.placements}, {"map", embedded.embedding->map}});
        run.result.outcome = PipelineOutcome::embedding;
        run.result.embedding = embedded.embedding;
        run.result.message = "G embeds in the blue graph";
        return std::move(run.result);
    }
}
