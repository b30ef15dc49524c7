#include <rgood/detail/matcher.hh>
#include <rgood/subgraph.hh>

#include <map>

using std::optional;
using std::vector;

namespace rgood
{
    auto twin_classes(const Graph & g) -> vector<int>
    {
        int n = g.order();
        vector<int> cls(n, -1);
        int next = 0;
        // false twins share open neighbourhoods, true twins closed ones; no vertex can be both
        // a true and a false twin of different vertices
        std::map<vector<std::uint64_t>, vector<int>> open, closed;
        for (int v = 0; v < n; ++v) {
            open[g.neighbours(v).words()].push_back(v);
            auto c = g.neighbours(v);
            c.insert(v);
            closed[c.words()].push_back(v);
        }
        for (auto & [key, vs] : open)
            if (vs.size() > 1) {
                for (int v : vs)
                    cls[v] = next;
                ++next;
            }
        for (auto & [key, vs] : closed)
            if (vs.size() > 1 && cls[vs.front()] == -1) {
                for (int v : vs)
                    cls[v] = next;
                ++next;
            }
        for (int v = 0; v < n; ++v)
            if (cls[v] == -1)
                cls[v] = next++;
        return cls;
    }

    auto is_subgraph_embedding(const Graph & host, const Graph & pattern, const VertexMap & map) -> bool
    {
        if (int(map.size()) != pattern.order())
            return false;
        VertexSet seen(host.order());
        for (int h : map) {
            if (h < 0 || h >= host.order() || seen.contains(h))
                return false;
            seen.insert(h);
        }
        for (auto & e : pattern.edges())
            if (! host.adjacent(map[e.u], map[e.v]))
                return false;
        return true;
    }

    namespace
    {
        auto run_matcher(const Graph & host, const Graph & pattern, vector<VertexSet> domains, Budget & budget,
            vector<int> twins) -> Outcome<optional<VertexMap>>
        {
            if (pattern.order() > host.order())
                return Outcome<optional<VertexMap>>::decided(std::nullopt);
            detail::Pattern p(pattern);
            vector<VertexSet> rows;
            rows.reserve(host.order());
            for (int v = 0; v < host.order(); ++v)
                rows.push_back(host.neighbours(v));
            detail::Matcher<VertexSet> m(p, rows, host.order(), [&] { return budget.spend(); }, std::move(twins));
            if (pattern.order() == 0)
                return Outcome<optional<VertexMap>>::decided(VertexMap{});
            auto found = m.run(std::move(domains));
            if (m.aborted())
                return Outcome<optional<VertexMap>>::undecided("subgraph search: node budget exceeded");
            return Outcome<optional<VertexMap>>::decided(found);
        }
    }

    auto find_subgraph(const Graph & host, const Graph & pattern, Budget & budget) -> Outcome<optional<VertexMap>>
    {
        vector<VertexSet> domains;
        for (int p = 0; p < pattern.order(); ++p) {
            VertexSet d(host.order());
            for (int h = 0; h < host.order(); ++h)
                if (host.degree(h) >= pattern.degree(p))
                    d.insert(h);
            domains.push_back(std::move(d));
        }
        return run_matcher(host, pattern, std::move(domains), budget, twin_classes(host));
    }

    auto find_subgraph_within(const Graph & host, const Graph & pattern, const vector<VertexSet> & allowed,
        Budget & budget) -> Outcome<optional<VertexMap>>
    {
        vector<VertexSet> domains;
        for (int p = 0; p < pattern.order(); ++p) {
            VertexSet d = allowed.at(p);
            for (int h : allowed.at(p))
                if (host.degree(h) < pattern.degree(p))
                    d.erase(h);
            domains.push_back(std::move(d));
        }
        return run_matcher(host, pattern, std::move(domains), budget, {});
    }
}
