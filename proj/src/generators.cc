#include <rgood/errors.hh>
#include <rgood/generators.hh>

#include <algorithm>
#include <charconv>
#include <optional>
#include <random>
#include <sstream>

using std::string;
using std::vector;

namespace rgood
{
    namespace
    {
        auto require(bool ok, const string & what) -> void
        {
            if (! ok)
                throw PreconditionError{what};
        }

        // Uniform double in [0, 1) built from raw engine output, identical on every platform.
        auto unit(std::mt19937_64 & rng) -> double
        {
            return double(rng() >> 11) * 0x1.0p-53;
        }

        auto below(std::mt19937_64 & rng, std::uint64_t bound) -> std::uint64_t
        {
            return rng() % bound;
        }
    }

    auto empty_graph(int n) -> Graph
    {
        require(n >= 0, "empty graph: n must be nonnegative");
        return Graph(n);
    }

    auto path_graph(int n) -> Graph
    {
        require(n >= 0, "path: n must be nonnegative");
        vector<Edge> es;
        for (int i = 0; i + 1 < n; ++i)
            es.emplace_back(i, i + 1);
        return Graph(n, es);
    }

    auto cycle_graph(int n) -> Graph
    {
        require(n >= 3, "cycle: n must be at least 3");
        vector<Edge> es;
        for (int i = 0; i < n; ++i)
            es.emplace_back(i, (i + 1) % n);
        return Graph(n, es);
    }

    auto complete_graph(int n) -> Graph
    {
        return path_power(std::max(n, 0), std::max(n - 1, 1));
    }

    auto path_power(int n, int k) -> Graph
    {
        require(n >= 0 && k >= 1, "path power: need n >= 0 and k >= 1");
        vector<Edge> es;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n && j - i <= k; ++j)
                es.emplace_back(i, j);
        return Graph(n, es);
    }

    auto complete_multipartite(const vector<int> & parts) -> Graph
    {
        int n = 0;
        vector<int> part_of;
        for (std::size_t p = 0; p < parts.size(); ++p) {
            require(parts[p] >= 0, "multipartite: part sizes must be nonnegative");
            n += parts[p];
            part_of.insert(part_of.end(), parts[p], int(p));
        }
        vector<Edge> es;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (part_of[i] != part_of[j])
                    es.emplace_back(i, j);
        return Graph(n, es);
    }

    auto star_graph(int leaves) -> Graph
    {
        return complete_multipartite({1, leaves});
    }

    auto petersen_graph() -> Graph
    {
        vector<Edge> es;
        for (int i = 0; i < 5; ++i) {
            es.emplace_back(i, (i + 1) % 5);
            es.emplace_back(i, i + 5);
            es.emplace_back(5 + i, 5 + (i + 2) % 5);
        }
        return Graph(10, es);
    }

    auto disjoint_union(const vector<Graph> & parts) -> Graph
    {
        int n = 0;
        vector<Edge> es;
        for (auto & g : parts) {
            for (auto & e : g.edges())
                es.emplace_back(e.u + n, e.v + n);
            n += g.order();
        }
        return Graph(n, es);
    }

    auto clique_union(int copies, int size) -> Graph
    {
        require(copies >= 0 && size >= 0, "clique union: counts must be nonnegative");
        return disjoint_union(vector<Graph>(copies, complete_graph(size)));
    }

    auto random_bounded_degree(int n, int degree_cap, std::uint64_t seed, double p) -> Graph
    {
        require(n >= 0 && degree_cap >= 0, "random graph: n and degree cap must be nonnegative");
        require(p >= 0.0 && p <= 1.0, "random graph: p must lie in [0, 1]");
        std::mt19937_64 rng(seed);
        vector<Edge> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                pairs.emplace_back(i, j);
        for (std::size_t i = pairs.size(); i > 1; --i)
            std::swap(pairs[i - 1], pairs[below(rng, i)]);
        vector<int> deg(n, 0);
        vector<Edge> keep;
        for (auto & e : pairs) {
            bool take = unit(rng) < p;
            if (take && deg[e.u] < degree_cap && deg[e.v] < degree_cap) {
                keep.push_back(e);
                ++deg[e.u];
                ++deg[e.v];
            }
        }
        return Graph(n, keep);
    }

    auto random_gnp(int n, double p, std::uint64_t seed) -> Graph
    {
        require(n >= 0, "gnp: n must be nonnegative");
        require(p >= 0.0 && p <= 1.0, "gnp: p must lie in [0, 1]");
        std::mt19937_64 rng(seed);
        vector<Edge> es;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (unit(rng) < p)
                    es.emplace_back(i, j);
        return Graph(n, es);
    }

    namespace
    {
        auto split(const string & s, char sep) -> vector<string>
        {
            vector<string> out;
            std::stringstream in(s);
            string item;
            while (std::getline(in, item, sep))
                out.push_back(item);
            if (! s.empty() && s.back() == sep)
                out.emplace_back();
            return out;
        }

        auto parse_int(const string & s, const string & context) -> long long
        {
            long long value = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
            if (ec != std::errc{} || ptr != s.data() + s.size())
                throw ParseError{"bad integer '" + s + "' in family spec '" + context + "'"};
            return value;
        }

        auto parse_real(const string & s, const string & context) -> double
        {
            try {
                std::size_t used = 0;
                double value = std::stod(s, &used);
                if (used == s.size())
                    return value;
            }
            catch (const std::exception &) {
            }
            throw ParseError{"bad number '" + s + "' in family spec '" + context + "'"};
        }

        auto one_family(const string & term, std::optional<std::uint64_t> default_seed) -> Graph
        {
            auto colon = term.find(':');
            if (colon == string::npos)
                throw ParseError{"family spec '" + term + "' has no ':'"};
            auto name = term.substr(0, colon);
            auto args = term.substr(colon + 1);
            vector<string> fields = args.empty() ? vector<string>{} : split(args, ',');

            auto arity = [&](std::size_t lo, std::size_t hi) {
                if (fields.size() < lo || fields.size() > hi)
                    throw ParseError{"family '" + name + "' takes " + std::to_string(lo) +
                        (lo == hi ? "" : ".." + std::to_string(hi)) + " arguments"};
            };
            auto int_at = [&](std::size_t i) { return int(parse_int(fields[i], term)); };
            auto seed_at = [&](std::size_t i) {
                if (fields[i] != "s")
                    return std::uint64_t(parse_int(fields[i], term));
                if (! default_seed)
                    throw ParseError{"family spec '" + term + "' asks for the default seed but none was given"};
                return *default_seed;
            };

            try {
                if (name == "path") {
                    arity(1, 1);
                    return path_graph(int_at(0));
                }
                if (name == "cycle") {
                    arity(1, 1);
                    return cycle_graph(int_at(0));
                }
                if (name == "complete") {
                    arity(1, 1);
                    return complete_graph(int_at(0));
                }
                if (name == "empty") {
                    arity(1, 1);
                    return empty_graph(int_at(0));
                }
                if (name == "star") {
                    arity(1, 1);
                    return star_graph(int_at(0));
                }
                if (name == "power") {
                    arity(2, 2);
                    return path_power(int_at(0), int_at(1));
                }
                if (name == "cliques") {
                    arity(2, 2);
                    return clique_union(int_at(0), int_at(1));
                }
                if (name == "multipartite") {
                    arity(1, 64);
                    vector<int> parts;
                    for (std::size_t i = 0; i < fields.size(); ++i)
                        parts.push_back(int_at(i));
                    return complete_multipartite(parts);
                }
                if (name == "petersen") {
                    arity(0, 0);
                    return petersen_graph();
                }
                if (name == "random") {
                    arity(3, 4);
                    double p = fields.size() == 4 ? parse_real(fields[3], term) : 0.5;
                    return random_bounded_degree(int_at(0), int_at(1), seed_at(2), p);
                }
                if (name == "gnp") {
                    arity(3, 3);
                    return random_gnp(int_at(0), parse_real(fields[1], term), seed_at(2));
                }
            }
            catch (const PreconditionError & e) {
                throw ParseError{string{"invalid parameters for '"} + term + "': " + e.what()};
            }
            throw ParseError{"unknown graph family '" + name + "'"};
        }
    }

    auto graph_from_family(const string & spec, std::optional<std::uint64_t> default_seed) -> Graph
    {
        if (spec.empty())
            throw ParseError{"empty family spec"};
        vector<Graph> parts;
        for (auto & term : split(spec, '+')) {
            parts.push_back(one_family(term, default_seed));
            if (default_seed)
                ++*default_seed;
        }
        return parts.size() == 1 ? parts.front() : disjoint_union(parts);
    }

    auto looks_like_family(const string & text) -> bool
    {
        return text.find(':') != string::npos;
    }
}
