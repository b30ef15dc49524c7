#include <rgood/errors.hh>
#include <rgood/pipeline.hh>

#include <algorithm>

using std::string;
using std::vector;

namespace rgood
{
    auto to_string(PlanCase c) -> string
    {
        switch (c) {
        case PlanCase::case1: return "case1";
        case PlanCase::case2: return "case2";
        case PlanCase::shortcut: return "shortcut";
        }
        return "?";
    }

    namespace
    {
        using Int = Rational::Int;

        struct Planner
        {
            const TwoColoring & col;
            const CycleDecomposition & decomp;
            const MultipartiteWitness & witness;
            const PipelineParams & params;
            PartitionPlan & plan;
            int k;
            int r;
            vector<bool> cycle_used;

            auto check(const string & name, const Rational & lhs, const Rational & rhs) -> bool
            {
                bool holds = lhs >= rhs;
                plan.checks.push_back(CapacityCheck{name, lhs.to_string(), rhs.to_string(), holds});
                return holds;
            }

            auto part(int i) const -> const VertexSet & { return witness.parts[i - 1]; }
            auto a(int i) const -> int { return plan.class_sizes[i - 1]; }

            // Moves unused whole cycles among C^(k..r) into Q_i while |V_i u Q_i| < target.
            auto fill_with_cycles(int i, const Rational & target) -> void
            {
                auto & q = plan.q[i - 1];
                for (int c = k - 1; c < r && Rational(part(i).count() + q.count()) < target; ++c) {
                    if (cycle_used[c])
                        continue;
                    cycle_used[c] = true;
                    q |= decomp.cycle_vertices(c);
                }
            }

            auto take_from(VertexSet & pool, Int count) -> VertexSet
            {
                VertexSet out(col.order());
                for (int v : pool) {
                    if (Int(out.count()) >= count)
                        break;
                    out.insert(v);
                }
                pool -= out;
                return out;
            }
        };
    }

    auto partition_plan(const TwoColoring & col, const CycleDecomposition & decomp, const MultipartiteWitness & witness,
        const ProperColoring & classes, const PipelineParams & params, int alpha) -> PartitionPlan
    {
        PartitionPlan plan;
        plan.class_sizes = classes.class_sizes();
        if (! std::is_sorted(plan.class_sizes.begin(), plan.class_sizes.end(), std::greater<>{}))
            throw PreconditionError{"partition_plan: colour classes must be sorted by decreasing size"};
        if (witness.parts.size() != decomp.cycles.size())
            throw PreconditionError{"partition_plan: witness does not match the decomposition"};

        int order = col.order();
        int k = classes.colours();
        int r = int(decomp.cycles.size());
        int n = params.n;
        plan.outside_hypothesis = 4 * alpha > n;
        plan.q.assign(k, VertexSet(order));
        plan.targets.assign(k, VertexSet(order));
        plan.w = decomp.leftover;
        auto pruned = prune_heavy_red(col.red(), plan.w, params.heavy_threshold(), params.eps);
        plan.w0 = pruned.heavy;
        plan.w_prime = pruned.kept;
        Planner p{col, decomp, witness, params, plan, k, r, vector<bool>(r, false)};

        auto finish = [&]() -> PartitionPlan {
            plan.feasible = std::all_of(plan.checks.begin(), plan.checks.end(), [](auto & c) { return c.holds; });
            if (! plan.feasible) {
                auto & bad = *std::find_if(plan.checks.begin(), plan.checks.end(), [](auto & c) { return ! c.holds; });
                plan.diagnostic = "capacity inequality '" + bad.name + "' fails: " + bad.lhs + " < " + bad.rhs;
                if (plan.outside_hypothesis)
                    plan.diagnostic += " (outside hypothesis: alpha(G) = " + std::to_string(alpha) + " > n/4)";
            }
            return plan;
        };

        auto two_den = Rational(2) * params.delta_eps_n();
        if (Rational(plan.w.count()) >= Rational(n) + two_den) {
            plan.which = PlanCase::shortcut;
            for (auto & t : plan.targets)
                t = plan.w_prime;
            p.check("|W'| >= n", Rational(plan.w_prime.count()), Rational(n));
            return finish();
        }
        plan.which = Rational(plan.w.count()) < Rational(params.sigma) + two_den ? PlanCase::case1 : PlanCase::case2;

        if (k == 1) {
            plan.trivial = true;
            plan.q[0] = VertexSet::full(order);
            plan.targets[0] = plan.q[0];
            p.check("|V| >= a_1", Rational(order), Rational(p.a(1)));
            return finish();
        }
        if (r < k - 1) {
            plan.diagnostic = "only " + std::to_string(r) + " long red cycles but " + std::to_string(k - 1) +
                " are needed while |W| < n + 2*delta*eps*n";
            return plan;
        }

        plan.u = VertexSet::full(order);
        for (int i = 0; i < k - 1; ++i)
            plan.u -= decomp.cycle_vertices(i);

        if (r >= k)
            plan.cbar = int(decomp.cycles[k - 1].size());
        else {
            auto found = longest_cycle(col.red().restricted_to(plan.u));
            if (found.is_decided())
                plan.cbar = *found ? int((*found)->size()) : 0;
            else {
                plan.cbar = decomp.min_len - 1;
                plan.cbar_exact = false;
            }
        }

        for (int i = 1; i <= r; ++i)
            plan.eta.push_back(Rational(Int(decomp.cycles[i - 1].size()) - 2 * params.beta, Int(2)).floor());
        for (int j = 1; j <= k - 1; ++j) {
            if (p.a(j) > plan.eta[j - 1])
                plan.lambda_set.push_back(j);
            if (Int(p.a(j)) > Int(decomp.cycles[j - 1].size()) - params.beta)
                plan.gamma_set.push_back(j);
        }
        auto in = [](const vector<int> & s, int j) { return std::find(s.begin(), s.end(), j) != s.end(); };
        Rational r_beta(Int(r) * params.beta, Int(1));
        Rational cbar(plan.cbar);
        Rational sigma(params.sigma);
        auto u_minus_w = plan.u - plan.w;
        auto u_minus_w0 = plan.u - plan.w0;

        if (plan.lambda_set.empty()) {
            plan.trivial = true;
            plan.q[k - 1] = u_minus_w0;
            p.check("|Q_k| >= a_k", Rational(plan.q[k - 1].count()), Rational(p.a(k)));
            for (int i = 1; i < k; ++i)
                p.check("|V_" + std::to_string(i) + "| >= a_" + std::to_string(i), Rational(p.part(i).count()), Rational(p.a(i)));
        }
        else if (plan.which == PlanCase::case1) {
            Rational lhs(u_minus_w.count());
            Rational rhs = sigma + params.eps_n();
            for (int i : plan.gamma_set) {
                lhs = lhs + Rational(p.part(i).count());
                rhs = rhs + Rational(p.a(i)) + cbar;
            }
            p.check("|U\\W| + sum_Gamma |V_i| >= sum_Gamma (a_i + cbar) + sigma + eps*n", lhs, rhs);

            for (int i : plan.gamma_set) {
                auto low = Rational(p.a(i)) + r_beta;
                p.fill_with_cycles(i, low);
                auto size = Rational(p.part(i).count() + plan.q[i - 1].count());
                p.check("|V_" + std::to_string(i) + " u Q_" + std::to_string(i) + "| >= a_i + r*beta", size, low);
                p.check("a_i + cbar + r*beta >= |V_" + std::to_string(i) + " u Q_" + std::to_string(i) + "|", low + cbar, size);
            }
            plan.q[k - 1] = u_minus_w;
            for (int i : plan.gamma_set)
                plan.q[k - 1] -= plan.q[i - 1];
            p.check("|Q_k| >= sigma + r*beta", Rational(plan.q[k - 1].count()), sigma + r_beta);
            for (int i = 1; i < k; ++i)
                if (! in(plan.gamma_set, i))
                    p.check("|V_" + std::to_string(i) + "| >= a_" + std::to_string(i), Rational(p.part(i).count()), Rational(p.a(i)));
        }
        else {
            auto den = params.delta_eps_n();
            Rational lhs(u_minus_w0.count());
            Rational rhs = sigma;
            for (int i : plan.lambda_set) {
                lhs = lhs + Rational(p.part(i).count());
                rhs = rhs + Rational(2 * p.a(i)) + cbar + two_den;
            }
            p.check("|U\\W0| + sum_Lambda |V_i| >= sum_Lambda (2a_i + cbar + 2*delta*eps*n) + sigma", lhs, rhs);

            auto pool = plan.w_prime;
            Rational w_prime(plan.w_prime.count());
            for (int h = 1; h <= k - 1 && plan.h == 0; ++h) {
                Rational need = sigma + Rational(k - h) * den;
                for (int j : plan.lambda_set)
                    if (j > h)
                        need = need + Rational(2 * p.a(j) - p.part(j).count());
                if (w_prime >= need)
                    plan.h = h;
            }
            if (plan.h == 0) {
                p.check("|W'| >= pivot requirement at h = k-1", w_prime, sigma + den);
                return finish();
            }
            int h = plan.h;

            plan.q[k - 1] = p.take_from(pool, (sigma + den).ceil());
            p.check("|Q_k| >= sigma + delta*eps*n", Rational(plan.q[k - 1].count()), sigma + den);
            for (int i : plan.lambda_set)
                if (i > h) {
                    auto want = Rational(2 * p.a(i) - p.part(i).count()) + den;
                    plan.q[i - 1] = p.take_from(pool, std::max<Int>(0, want.ceil()));
                    p.check("|Q_" + std::to_string(i) + "| >= 2a_i - |V_i| + delta*eps*n", Rational(plan.q[i - 1].count()), want);
                }
            for (int i : plan.lambda_set)
                if (i < h) {
                    auto low = Rational(2 * p.a(i)) + two_den;
                    p.fill_with_cycles(i, low);
                    auto size = Rational(p.part(i).count() + plan.q[i - 1].count());
                    p.check("|V_" + std::to_string(i) + " u Q_" + std::to_string(i) + "| >= 2a_i + 2*delta*eps*n", size, low);
                    p.check("2a_i + cbar + 2*delta*eps*n >= |V_" + std::to_string(i) + " u Q_" + std::to_string(i) + "|",
                        low + cbar, size);
                }
            plan.q[h - 1] = u_minus_w0;
            for (int i = 1; i <= k; ++i)
                if (i != h)
                    plan.q[h - 1] -= plan.q[i - 1];
            p.check("|V_h u Q_h| >= 2a_h + 2*delta*eps*n", Rational(p.part(h).count() + plan.q[h - 1].count()),
                Rational(2 * p.a(h)) + two_den);
            for (int i = 1; i < k; ++i)
                if (i != h && ! in(plan.lambda_set, i))
                    p.check("|V_" + std::to_string(i) + "| >= a_" + std::to_string(i), Rational(p.part(i).count()), Rational(p.a(i)));
        }

        for (int i = 1; i < k; ++i)
            plan.targets[i - 1] = p.part(i) | plan.q[i - 1];
        plan.targets[k - 1] = plan.q[k - 1];
        return finish();
    }

    auto plan_invariants_hold(const PartitionPlan & plan, const CycleDecomposition & decomp, std::string & why) -> bool
    {
        for (int j : plan.gamma_set)
            if (std::find(plan.lambda_set.begin(), plan.lambda_set.end(), j) == plan.lambda_set.end()) {
                why = "Gamma is not contained in Lambda";
                return false;
            }
        if (plan.which != PlanCase::shortcut && plan.class_sizes.size() > 1)
            for (std::size_t i = 0; i < plan.q.size(); ++i)
                for (std::size_t j = i + 1; j < plan.q.size(); ++j)
                    if (plan.q[i].intersects(plan.q[j])) {
                        why = "Q_" + std::to_string(i + 1) + " and Q_" + std::to_string(j + 1) + " overlap";
                        return false;
                    }
        int k = int(plan.class_sizes.size());
        for (int c = k - 1; c < int(decomp.cycles.size()); ++c) {
            auto vs = decomp.cycle_vertices(c);
            int touching = 0;
            for (auto & q : plan.q)
                touching += q.intersects(vs);
            if (touching > 1) {
                why = "cycle " + std::to_string(c + 1) + " is shared by several Q sets";
                return false;
            }
        }
        return true;
    }
}
