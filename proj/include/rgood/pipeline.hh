#pragma once

#include <rgood/graph.hh>
#include <rgood/invariants.hh>
#include <rgood/outcome.hh>
#include <rgood/rational.hh>
#include <rgood/subgraph.hh>
#include <rgood/two_coloring.hh>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rgood
{
    // Lower bound on n under which one step of the embedding argument becomes meaningful.
    struct OrderRequirement
    {
        std::string step;
        std::string condition;
        std::string min_n;
    };

    struct PipelineParams
    {
        int delta = 3;
        Rational eps;
        Rational::Int beta = 0;
        int n = 0;
        int k = 0;
        int sigma = 0;
        long long host_order = 0; // N
        bool strict = false;
        // ceil(eps^2 n), raised to 3: the shortest cycle the decomposition keeps.
        int min_cycle = 3;
        std::vector<std::string> overrides;
        std::vector<OrderRequirement> requirements;

        auto delta_eps_n() const -> Rational { return Rational(delta) * eps * Rational(n); }
        auto eps_n() const -> Rational { return eps * Rational(n); }
        auto heavy_threshold() const -> int;
    };

    struct ParamOverrides
    {
        std::optional<Rational::Int> beta;
        std::optional<long long> host_order;
        std::optional<int> min_cycle;
    };

    // Strict mode: requires 0 < eps <= 1/delta^5 and derives beta = ceil(1/eps^7) and
    // N = (k-1)n + sigma + ceil(delta^4 eps n); overrides are rejected. Relaxed mode takes
    // the overrides and records them. Throws PreconditionError.
    auto make_params(int delta, const Rational & eps, int n, int k, int sigma, bool strict,
        const ParamOverrides & overrides = {}) -> PipelineParams;

    // Either a cycle with at least c vertices, or a certificate that e(H) < (c-1)(|H|-1)/2 + 1.
    struct ErdosGallaiResult
    {
        std::optional<Cycle> long_cycle;
        bool edge_bound_holds = false;
        long long edges = 0;
        Rational bound;
    };

    // Throws PreconditionError unless 3 <= c <= |H|, InternalError if neither branch holds.
    auto erdos_gallai(const Graph & h, int c, Budget & budget) -> Outcome<ErdosGallaiResult>;

    struct CycleDecomposition
    {
        std::vector<Cycle> cycles;
        VertexSet leftover; // W
        int min_len = 3;
        bool certified = true;

        auto lengths() const -> std::vector<int>;
        auto cycle_vertices(int i) const -> VertexSet;
    };

    // Ordered disjoint longest cycles: each is a longest cycle of the red graph after removing
    // the previous ones; stops once that is shorter than min_len. A step that exceeds
    // node_limit_per_cycle keeps the best cycle found so far and clears `certified`.
    auto extract_longest_cycles(const Graph & red, int min_len, std::uint64_t node_limit_per_cycle = default_node_limit)
        -> CycleDecomposition;

    struct PruneResult
    {
        VertexSet kept;  // W'
        VertexSet heavy; // W0
        bool guarantee_holds = false; // |W'| >= (1 - eps)|W|
    };

    auto prune_heavy_red(const Graph & red, const VertexSet & w, int threshold, const Rational & eps) -> PruneResult;

    // Two independent red edges between segments of two cycles; `longer_cycle` is the red cycle
    // they yield, which is longer than the earlier cycle of the pair.
    struct MaximalityViolation
    {
        int cycle_a = 0;
        int cycle_b = 0;
        Edge first;
        Edge second;
        Cycle longer_cycle;
    };

    enum class MultipartiteStatus
    {
        ok,
        maximality_violation,
        beta_exceeded
    };

    struct MultipartiteWitness
    {
        std::vector<VertexSet> parts;   // V_i
        std::vector<VertexSet> ignored; // removed from C^(i)
        std::vector<MaximalityViolation> violations;
        int segment_size = 0;
        MultipartiteStatus status = MultipartiteStatus::ok;
        std::string message;
    };

    // Splits every cycle into runs of ceil(c_r / 2) consecutive vertices and, for each pair of
    // runs on different cycles, drops at most one vertex per side to make them completely blue.
    // Two independent red edges between runs contradict the decomposition; on a certified
    // decomposition this stops with status maximality_violation, otherwise it is recorded and
    // resolved with a greedy vertex cover.
    auto blue_multipartite(const TwoColoring & col, const CycleDecomposition & decomp, Rational::Int beta)
        -> MultipartiteWitness;

    auto all_cross_pairs_blue(const TwoColoring & col, const std::vector<VertexSet> & parts) -> bool;

    struct NeighbourhoodCheck
    {
        VertexSet common;
        bool size_bound_holds = true; // |common| >= (c_i - delta^2) / 2
        std::vector<std::string> violations;
    };

    // Common blue neighbourhood of ws inside V(C^(cycle_index)) (0-based). On a certified
    // decomposition also checks the successor-shift structure behind the size bound.
    auto common_blue_neighborhood(const TwoColoring & col, const CycleDecomposition & decomp,
        const std::vector<int> & ws, int cycle_index, int delta) -> NeighbourhoodCheck;

    enum class PlanCase
    {
        case1,
        case2,
        shortcut
    };

    auto to_string(PlanCase c) -> std::string;

    struct CapacityCheck
    {
        std::string name;
        std::string lhs;
        std::string rhs;
        bool holds = false;
    };

    struct PartitionPlan
    {
        std::vector<int> class_sizes; // a_1 >= ... >= a_k
        std::vector<Rational::Int> eta;
        std::vector<int> lambda_set; // 1-based class indices
        std::vector<int> gamma_set;
        PlanCase which = PlanCase::case1;
        bool trivial = false; // empty Lambda
        int h = 0;
        VertexSet u, w, w0, w_prime;
        int cbar = 0;
        bool cbar_exact = true;
        std::vector<VertexSet> q; // Q_1..Q_k
        std::vector<VertexSet> targets; // host set for each class
        std::vector<CapacityCheck> checks;
        bool feasible = false;
        bool outside_hypothesis = false; // alpha(G) > n/4
        std::string diagnostic;
    };

    // Allocates host sets to the colour classes. Never throws on infeasible input: the first
    // violated capacity inequality is named in `diagnostic`.
    auto partition_plan(const TwoColoring & col, const CycleDecomposition & decomp, const MultipartiteWitness & witness,
        const ProperColoring & classes, const PipelineParams & params, int alpha = 0) -> PartitionPlan;

    auto plan_invariants_hold(const PartitionPlan & plan, const CycleDecomposition & decomp, std::string & why) -> bool;

    struct Embedding
    {
        VertexMap map;
        std::vector<int> class_of; // colour class of each G vertex
        std::vector<VertexSet> class_targets;
    };

    struct EmbedOutcome
    {
        std::optional<Embedding> embedding;
        int stuck_vertex = -1;
        int stuck_candidates = 0;
        std::uint64_t placements = 0;
        std::string diagnostic;
    };

    inline constexpr std::uint64_t default_placement_limit = 1'000'000;

    // Greedy placement with backtracking and forward checking, classes A_k, A_(k-1), ..., A_1,
    // vertices within a class by descending degree; result re-verified edge by edge.
    auto embed_classes(const TwoColoring & col, const PartitionPlan & plan, const Graph & g, const ProperColoring & classes,
        std::uint64_t placement_limit = default_placement_limit) -> EmbedOutcome;

    auto verify_embedding(const TwoColoring & col, const Graph & g, const Embedding & e) -> bool;

    struct StageRecord
    {
        std::string stage;
        std::string step; // which part of the argument the stage realises
        std::string inputs_hash;
        bool certified = true;
        std::string outcome;
        nlohmann::json data;
    };

    auto to_json(const StageRecord & r) -> nlohmann::json;

    enum class PipelineOutcome
    {
        red_path,
        embedding,
        diagnostic
    };

    auto to_string(PipelineOutcome o) -> std::string;

    struct PipelineOptions
    {
        std::uint64_t node_limit = default_node_limit;
        std::uint64_t placement_limit = default_placement_limit;
    };

    struct PipelineResult
    {
        PipelineOutcome outcome = PipelineOutcome::diagnostic;
        std::optional<Path> red_path;
        std::optional<Embedding> embedding;
        std::string failed_stage;
        std::string failed_step;
        std::string message;
        std::vector<StageRecord> trace;

        std::optional<CycleDecomposition> decomposition;
        std::optional<PruneResult> prune;
        std::optional<MultipartiteWitness> multipartite;
        std::optional<PartitionPlan> plan;
    };

    // If the red graph has a path on n vertices, returns it. Otherwise runs decomposition,
    // pruning, multipartite structure, plan and embedding, stopping at the first stage that
    // fails. Throws PreconditionError when params disagree with G or the colouring.
    auto run_pipeline(const TwoColoring & col, const Graph & g, const PipelineParams & params,
        const PipelineOptions & options = {}) -> PipelineResult;

    // FNV-1a 64, hex.
    auto fingerprint(const std::string & text) -> std::string;
}
