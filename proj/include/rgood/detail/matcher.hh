#pragma once

#include <rgood/graph.hh>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace rgood::detail
{
    // 64-vertex set with the VertexSet interface, for hot loops over small hosts.
    struct Mask64
    {
        std::uint64_t bits = 0;

        auto contains(int v) const -> bool { return (bits >> v) & 1; }
        auto insert(int v) -> void { bits |= std::uint64_t{1} << v; }
        auto erase(int v) -> void { bits &= ~(std::uint64_t{1} << v); }
        auto empty() const -> bool { return bits == 0; }
        auto count() const -> int { return std::popcount(bits); }
        auto next(int v) const -> int
        {
            if (v >= 63)
                return -1;
            auto rest = bits & (~std::uint64_t{0} << (v + 1));
            return rest ? std::countr_zero(rest) : -1;
        }
        auto first() const -> int { return bits ? std::countr_zero(bits) : -1; }
        auto operator&=(const Mask64 & o) -> Mask64 &
        {
            bits &= o.bits;
            return *this;
        }
        auto operator|=(const Mask64 & o) -> Mask64 &
        {
            bits |= o.bits;
            return *this;
        }
        auto operator-=(const Mask64 & o) -> Mask64 &
        {
            bits &= ~o.bits;
            return *this;
        }
    };

    // Small pattern graph in adjacency-list form plus its static search order: descending
    // degree, then most neighbours already ordered, then smallest index.
    struct Pattern
    {
        int order = 0;
        std::vector<std::vector<int>> adj;
        std::vector<Edge> edges;
        std::vector<int> search_order;

        explicit Pattern(const Graph & g) : order(g.order()), adj(g.order()), edges(g.edges())
        {
            for (auto & e : edges) {
                adj[e.u].push_back(e.v);
                adj[e.v].push_back(e.u);
            }
            std::vector<bool> taken(order, false);
            std::vector<int> ordered_nbrs(order, 0);
            for (int step = 0; step < order; ++step) {
                int pick = -1;
                for (int v = 0; v < order; ++v) {
                    if (taken[v])
                        continue;
                    if (pick == -1 || adj[v].size() > adj[pick].size() ||
                        (adj[v].size() == adj[pick].size() && ordered_nbrs[v] > ordered_nbrs[pick]))
                        pick = v;
                }
                taken[pick] = true;
                search_order.push_back(pick);
                for (int u : adj[pick])
                    ++ordered_nbrs[u];
            }
        }

        auto degree(int v) const -> int { return int(adj[v].size()); }
    };

    // Backtracking subgraph matcher with forward checking. Set is VertexSet or Mask64.
    template <typename Set>
    class Matcher
    {
    public:
        // twin: host twin-class id per vertex (empty disables twin pruning). Twin pruning is only
        // sound when initial domains do not distinguish twins.
        Matcher(const Pattern & pattern, std::span<const Set> rows, int host_order, std::function<bool()> spend,
            std::vector<int> twin = {}) :
            _pattern(pattern), _rows(rows), _host_order(host_order), _spend(std::move(spend)),
            _twin(std::move(twin)), _map(pattern.order, -1)
        {
            if (! _twin.empty()) {
                int classes = 1 + *std::max_element(_twin.begin(), _twin.end());
                _members.assign(classes, {});
                for (int h = 0; h < host_order; ++h)
                    _members[_twin[h]].push_back(h);
            }
        }

        auto aborted() const -> bool { return _aborted; }

        // Searches from the given domains; pre-assigned pattern vertices carry their host in `fixed`.
        auto run(std::vector<Set> domains, const std::vector<std::pair<int, int>> & fixed = {}) -> std::optional<std::vector<int>>
        {
            _aborted = false;
            std::fill(_map.begin(), _map.end(), -1);
            _used = Set{};
            if constexpr (std::is_same_v<Set, VertexSet>)
                _used = VertexSet(_host_order);
            for (auto [p, h] : fixed) {
                if (! domains[p].contains(h) || _used.contains(h))
                    return std::nullopt;
                if (! assign(p, h, domains))
                    return std::nullopt;
            }
            if (search(0, domains))
                return _map;
            return std::nullopt;
        }

    private:
        auto assign(int p, int h, std::vector<Set> & domains) -> bool
        {
            _map[p] = h;
            _used.insert(h);
            for (int q = 0; q < _pattern.order; ++q) {
                if (_map[q] != -1)
                    continue;
                domains[q].erase(h);
            }
            for (int q : _pattern.adj[p]) {
                if (_map[q] != -1) {
                    if (! _rows[h].contains(_map[q]))
                        return false;
                    continue;
                }
                domains[q] &= _rows[h];
            }
            Set pooled{};
            if constexpr (std::is_same_v<Set, VertexSet>)
                pooled = VertexSet(_host_order);
            int open = 0;
            for (int q = 0; q < _pattern.order; ++q) {
                if (_map[q] != -1)
                    continue;
                if (domains[q].empty())
                    return false;
                pooled |= domains[q];
                ++open;
            }
            return pooled.count() >= open;
        }

        auto unassign(int p) -> void
        {
            _used.erase(_map[p]);
            _map[p] = -1;
        }

        auto redundant_twin(int h) const -> bool
        {
            if (_twin.empty())
                return false;
            for (int other : _members[_twin[h]]) {
                if (other >= h)
                    return false;
                if (! _used.contains(other))
                    return true;
            }
            return false;
        }

        auto search(std::size_t depth, const std::vector<Set> & domains) -> bool
        {
            while (depth < _pattern.search_order.size() && _map[_pattern.search_order[depth]] != -1)
                ++depth;
            if (depth == _pattern.search_order.size())
                return true;
            if (! _spend()) {
                _aborted = true;
                return false;
            }
            int p = _pattern.search_order[depth];
            const Set & candidates = domains[p];
            for (int h = candidates.first(); h >= 0; h = candidates.next(h)) {
                if (redundant_twin(h))
                    continue;
                auto next = domains;
                if (assign(p, h, next) && search(depth + 1, next))
                    return true;
                unassign(p);
                if (_aborted)
                    return false;
            }
            return false;
        }

        const Pattern & _pattern;
        std::span<const Set> _rows;
        int _host_order;
        std::function<bool()> _spend;
        std::vector<int> _twin;
        std::vector<std::vector<int>> _members;
        std::vector<int> _map;
        Set _used{};
        bool _aborted = false;
    };
}
