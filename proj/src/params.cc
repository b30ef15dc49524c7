#include <rgood/errors.hh>
#include <rgood/pipeline.hh>

#include <cmath>
#include <cstdio>

using std::string;

namespace rgood
{
    namespace
    {
        using Int = Rational::Int;

        auto power(const Rational & base, int e) -> Rational
        {
            Rational r(1);
            for (int i = 0; i < e; ++i)
                r = r * base;
            return r;
        }

        // floor(x) + 1, i.e. the least integer n with n > x.
        auto least_above(const Rational & x) -> Int
        {
            return x.floor() + 1;
        }

        auto requirement(const string & step, const string & condition, auto && compute) -> OrderRequirement
        {
            try {
                return OrderRequirement{step, condition, int128_to_string(compute())};
            }
            catch (const PreconditionError &) {
                return OrderRequirement{step, condition, "beyond 128-bit range"};
            }
        }
    }

    auto PipelineParams::heavy_threshold() const -> int
    {
        auto t = eps_n().ceil();
        return t < 1 ? 1 : int(t);
    }

    auto make_params(int delta, const Rational & eps, int n, int k, int sigma, bool strict, const ParamOverrides & overrides)
        -> PipelineParams
    {
        if (delta < 2)
            throw PreconditionError{"make_params: delta must be at least 2"};
        if (eps <= Rational(0))
            throw PreconditionError{"make_params: eps must be positive"};
        if (n < 1)
            throw PreconditionError{"make_params: n must be at least 1"};
        if (k < 1 || sigma < 1 || sigma > n)
            throw PreconditionError{"make_params: need k >= 1 and 1 <= sigma <= n"};

        PipelineParams p;
        p.delta = delta;
        p.eps = eps;
        p.n = n;
        p.k = k;
        p.sigma = sigma;
        p.strict = strict;

        if (strict) {
            if (eps > Rational(1) / power(Rational(delta), 5))
                throw PreconditionError{"make_params: strict mode needs eps <= 1/delta^5 = 1/" +
                    int128_to_string(power(Rational(delta), 5).num()) + ", got " + eps.to_string()};
            if (overrides.beta || overrides.host_order || overrides.min_cycle)
                throw PreconditionError{"make_params: strict mode takes no overrides"};
        }

        std::optional<Int> formula_beta;
        try {
            formula_beta = (Rational(1) / power(eps, 7)).ceil();
        }
        catch (const PreconditionError &) {
        }

        if (overrides.beta) {
            if (*overrides.beta < 0)
                throw PreconditionError{"make_params: beta must be nonnegative"};
            p.beta = *overrides.beta;
            p.overrides.push_back("beta=" + int128_to_string(p.beta) +
                (formula_beta ? " (formula " + int128_to_string(*formula_beta) + ")" : " (formula beyond 128-bit range)"));
        }
        else if (formula_beta)
            p.beta = *formula_beta;
        else
            throw PreconditionError{"make_params: ceil(1/eps^7) exceeds 128 bits; supply a beta override"};

        Int formula_order = Int(k - 1) * n + sigma + (power(Rational(delta), 4) * eps * Rational(n)).ceil();
        if (overrides.host_order) {
            p.host_order = *overrides.host_order;
            p.overrides.push_back("N=" + std::to_string(p.host_order) + " (formula " + int128_to_string(formula_order) + ")");
        }
        else {
            if (formula_order > Int(1) << 40)
                throw PreconditionError{"make_params: host order formula overflows"};
            p.host_order = (long long)formula_order;
        }

        Int cycle_formula = (eps * eps * Rational(n)).ceil();
        if (overrides.min_cycle) {
            if (*overrides.min_cycle < 3)
                throw PreconditionError{"make_params: min cycle length must be at least 3"};
            p.min_cycle = *overrides.min_cycle;
            p.overrides.push_back("min_cycle=" + std::to_string(p.min_cycle) + " (formula " + int128_to_string(cycle_formula) + ")");
        }
        else
            p.min_cycle = cycle_formula < 3 ? 3 : int(std::min<Int>(cycle_formula, Int(1) << 30));

        Rational eps2 = eps * eps;
        Rational b(p.beta);
        Rational d(delta);
        p.requirements.push_back(requirement("ordered-longest-cycles", "ceil(eps^2 n) >= 3",
            [&] { return least_above(Rational(2) / eps2); }));
        p.requirements.push_back(requirement("heavy-vertex-pruning", "eps n >= 1",
            [&] { return (Rational(1) / eps).ceil(); }));
        p.requirements.push_back(requirement("blue-multipartite", "eps^2 n > beta",
            [&] { return least_above(b / eps2); }));
        p.requirements.push_back(requirement("common-blue-neighbourhood", "eps^2 n > delta^2",
            [&] { return least_above(d * d / eps2); }));
        p.requirements.push_back(requirement("class-allocation", "eps^2 n > 2 beta",
            [&] { return least_above(Rational(2) * b / eps2); }));
        return p;
    }
}
