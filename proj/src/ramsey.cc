#include <rgood/detail/matcher.hh>
#include <rgood/errors.hh>
#include <rgood/invariants.hh>
#include <rgood/ramsey.hh>

#include <array>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

using rgood::detail::Mask64;
using rgood::detail::Matcher;
using rgood::detail::Pattern;
using std::optional;
using std::string;
using std::vector;

namespace rgood
{
    auto to_string(Verdict v) -> string
    {
        switch (v) {
        case Verdict::arrows: return "arrows";
        case Verdict::witness: return "witness";
        case Verdict::undecided: return "undecided";
        }
        return "?";
    }

    namespace
    {
        struct Shared
        {
            std::uint64_t limit;
            std::atomic<std::uint64_t> nodes{0};
            std::atomic<bool> out_of_budget{false};
            std::atomic<std::size_t> first_found{std::numeric_limits<std::size_t>::max()};

            auto spend() -> bool
            {
                if (nodes.fetch_add(1, std::memory_order_relaxed) >= limit) {
                    out_of_budget = true;
                    return false;
                }
                return true;
            }
        };

        struct Task
        {
            int star_red = 0;
            vector<char> prefix; // colours of the edges after the star, 1 = red
        };

        class ColouringSearch
        {
        public:
            ColouringSearch(int n, const Pattern & f, const Pattern & g, Shared & shared) :
                _n(n), _f(f), _g(g), _shared(shared)
            {
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v)
                        _edges.emplace_back(u, v);
                for (int v = 0; v < n; ++v)
                    _all.insert(v);
            }

            auto edge_count() const -> std::size_t { return _edges.size(); }
            auto star_edges() const -> std::size_t { return std::size_t(_n - 1); }

            // Colours the star at vertex 0 and checks it; false if it already holds a target.
            auto reset(int star_red) -> bool
            {
                _red.fill({});
                _blue.fill({});
                _red_deg.fill(0);
                _cap = star_red;
                for (int v = 1; v < _n; ++v)
                    set(0, v, v <= star_red, true);
                return ! full_hit(true) && ! full_hit(false);
            }

            auto replay(const vector<char> & prefix) -> void
            {
                for (std::size_t i = 0; i < prefix.size(); ++i) {
                    auto & e = _edges[star_edges() + i];
                    set(e.u, e.v, prefix[i], true);
                }
            }

            // Tries colour `red` on edge idx; returns false (and leaves it uncoloured) if not allowed.
            auto try_colour(std::size_t idx, bool red) -> bool
            {
                auto & e = _edges[idx];
                if (red && (_red_deg[e.u] >= _cap || _red_deg[e.v] >= _cap))
                    return false;
                set(e.u, e.v, red, true);
                if (hit_through(red, e.u, e.v)) {
                    set(e.u, e.v, red, false);
                    return false;
                }
                return true;
            }

            auto undo(std::size_t idx, bool red) -> void
            {
                auto & e = _edges[idx];
                set(e.u, e.v, red, false);
            }

            // Depth-first completion from edge idx. Returns true when a full avoiding colouring is reached.
            auto complete(std::size_t idx, std::size_t task_index) -> bool
            {
                if (_shared.first_found.load(std::memory_order_relaxed) < task_index)
                    return false;
                if (! _shared.spend())
                    return false;
                if (idx == _edges.size())
                    return true;
                for (bool red : {true, false}) {
                    if (! try_colour(idx, red))
                        continue;
                    if (complete(idx + 1, task_index))
                        return true;
                    undo(idx, red);
                    if (_shared.out_of_budget)
                        return false;
                }
                return false;
            }

            // Expands the tree to `depth` edges past the star, collecting live prefixes.
            auto expand(std::size_t idx, std::size_t depth, vector<char> & prefix, int star_red, vector<Task> & out) -> void
            {
                if (! _shared.spend())
                    return;
                if (idx == _edges.size() || prefix.size() == depth) {
                    out.push_back(Task{star_red, prefix});
                    return;
                }
                for (bool red : {true, false}) {
                    if (! try_colour(idx, red))
                        continue;
                    prefix.push_back(red);
                    expand(idx + 1, depth, prefix, star_red, out);
                    prefix.pop_back();
                    undo(idx, red);
                    if (_shared.out_of_budget)
                        return;
                }
            }

            auto red_graph() const -> Graph
            {
                vector<Edge> es;
                for (int u = 0; u < _n; ++u)
                    for (int v = u + 1; v < _n; ++v)
                        if (_red[u].contains(v))
                            es.emplace_back(u, v);
                return Graph(_n, es);
            }

        private:
            auto set(int u, int v, bool red, bool on) -> void
            {
                auto & rows = red ? _red : _blue;
                if (on) {
                    rows[u].insert(v);
                    rows[v].insert(u);
                }
                else {
                    rows[u].erase(v);
                    rows[v].erase(u);
                }
                if (red) {
                    int d = on ? 1 : -1;
                    _red_deg[u] += d;
                    _red_deg[v] += d;
                }
            }

            auto domains_for(const Pattern & p, const std::array<Mask64, 64> & rows) const -> vector<Mask64>
            {
                vector<Mask64> domains(p.order);
                for (int q = 0; q < p.order; ++q)
                    for (int h = 0; h < _n; ++h)
                        if (rows[h].count() >= p.degree(q))
                            domains[q].insert(h);
                return domains;
            }

            auto matcher_for(bool red) -> std::pair<const Pattern &, const std::array<Mask64, 64> &>
            {
                return {red ? _f : _g, red ? _red : _blue};
            }

            auto full_hit(bool red) -> bool
            {
                auto [p, rows] = matcher_for(red);
                if (p.order > _n)
                    return false;
                Matcher<Mask64> m(p, std::span<const Mask64>(rows.data(), _n), _n, [] { return true; });
                return m.run(domains_for(p, rows)).has_value();
            }

            auto hit_through(bool red, int u, int v) -> bool
            {
                auto [p, rows] = matcher_for(red);
                if (p.order > _n || p.edges.empty())
                    return false;
                Matcher<Mask64> m(p, std::span<const Mask64>(rows.data(), _n), _n, [] { return true; });
                auto domains = domains_for(p, rows);
                for (auto & e : p.edges)
                    for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}})
                        if (m.run(domains, {{a, u}, {b, v}}))
                            return true;
                return false;
            }

            int _n;
            const Pattern & _f;
            const Pattern & _g;
            Shared & _shared;
            vector<Edge> _edges;
            Mask64 _all;
            std::array<Mask64, 64> _red{}, _blue{};
            std::array<int, 64> _red_deg{};
            int _cap = 0;
        };

        auto verify_witness(const TwoColoring & col, const Graph & f, const Graph & g) -> void
        {
            for (auto [pattern, colour] : {std::pair{&f, Colour::red}, std::pair{&g, Colour::blue}}) {
                if (pattern->order() > col.order())
                    continue;
                Budget unlimited = Budget::unlimited();
                auto hit = contains_mono(col, *pattern, colour, unlimited);
                if (*hit)
                    throw InternalError{"arrows: witness contains a " + to_string(colour) + " target"};
            }
        }
    }

    auto arrows(int n, const Graph & f, const Graph & g, const SearchOptions & options) -> ArrowResult
    {
        if (n < 1 || n > 64)
            throw PreconditionError{"arrows: need 1 <= N <= 64"};
        if (f.order() > 64 || g.order() > 64)
            throw PreconditionError{"arrows: patterns must have at most 64 vertices"};

        Pattern fp(f), gp(g);
        Shared shared{options.node_limit};
        ColouringSearch root(n, fp, gp, shared);

        vector<Task> tasks;
        for (int d = 0; d < n; ++d) {
            if (! root.reset(d))
                continue;
            vector<char> prefix;
            root.expand(root.star_edges(), std::size_t(std::max(options.split_depth, 0)), prefix, d, tasks);
            if (shared.out_of_budget)
                break;
        }

        ArrowResult result;
        result.order = n;
        if (shared.out_of_budget) {
            result.nodes = shared.nodes;
            return result;
        }

        vector<optional<Graph>> found(tasks.size());
        std::atomic<std::size_t> next_task{0};
        auto worker = [&] {
            ColouringSearch search(n, fp, gp, shared);
            while (true) {
                std::size_t i = next_task.fetch_add(1);
                if (i >= tasks.size() || shared.out_of_budget)
                    return;
                if (shared.first_found.load() < i)
                    return;
                search.reset(tasks[i].star_red);
                search.replay(tasks[i].prefix);
                if (search.complete(root.star_edges() + tasks[i].prefix.size(), i)) {
                    found[i] = search.red_graph();
                    std::size_t seen = shared.first_found.load();
                    while (i < seen && ! shared.first_found.compare_exchange_weak(seen, i)) {
                    }
                }
            }
        };

        int threads = options.threads > 0 ? options.threads : int(std::max(1u, std::thread::hardware_concurrency()));
        threads = std::min<int>(threads, std::max<std::size_t>(tasks.size(), 1));
        if (threads <= 1)
            worker();
        else {
            vector<std::jthread> pool;
            for (int t = 0; t < threads; ++t)
                pool.emplace_back(worker);
        }

        result.nodes = shared.nodes;
        auto first = shared.first_found.load();
        if (first < tasks.size()) {
            TwoColoring col(*found[first]);
            verify_witness(col, f, g);
            result.verdict = Verdict::witness;
            result.witness = std::move(col);
        }
        else if (! shared.out_of_budget)
            result.verdict = Verdict::arrows;
        return result;
    }

    auto burr_bound(const Graph & f, const Graph & g) -> int
    {
        if (f.order() == 0 || ! is_connected(f))
            throw PreconditionError{"burr_bound: F must be connected and nonempty"};
        auto chi = chromatic_number(g);
        auto sig = sigma(g);
        if (! chi.is_decided() || ! sig.is_decided())
            throw PreconditionError{"burr_bound: chi(G) or sigma(G) not computable within budget"};
        if (f.order() < *sig)
            throw PreconditionError{"burr_bound: need |F| >= sigma(G)"};
        return (*chi - 1) * (f.order() - 1) + *sig;
    }

    auto ramsey_number(const Graph & f, const Graph & g, int cap, const SearchOptions & options) -> RamseyResult
    {
        if (cap < 1)
            throw PreconditionError{"ramsey_number: cap must be at least 1"};
        RamseyResult result;

        // Below the Burr bound a verified block colouring stands in for search.
        try {
            int bound = burr_bound(f, g);
            if (bound > 1) {
                auto witness = burr_witness(f, g);
                if (witness.is_decided() && witness->order() == bound - 1) {
                    result.largest_witnessed = bound - 1;
                    result.search_from = bound;
                }
            }
        }
        catch (const PreconditionError &) {
        }

        for (int n = result.search_from; n <= cap; ++n) {
            auto step = arrows(n, f, g, options);
            result.nodes += step.nodes;
            switch (step.verdict) {
            case Verdict::arrows:
                result.value = n;
                return result;
            case Verdict::witness:
                result.largest_witnessed = n;
                break;
            case Verdict::undecided:
                result.note = "search undecided at N=" + std::to_string(n);
                return result;
            }
        }
        result.note = "cap " + std::to_string(cap) + " reached";
        return result;
    }

    auto goodness_check(const Graph & f, const Graph & g, int cap, const SearchOptions & options) -> GoodnessReport
    {
        GoodnessReport report;
        report.burr_bound = burr_bound(f, g);
        report.search = ramsey_number(f, g, cap, options);
        report.exact = report.search.value;
        if (report.exact) {
            if (*report.exact < report.burr_bound)
                throw InternalError{"goodness_check: exact Ramsey number below the Burr bound"};
            report.is_good = *report.exact == report.burr_bound;
        }
        return report;
    }
}
