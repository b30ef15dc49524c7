#include <rgood/errors.hh>
#include <rgood/generators.hh>
#include <rgood/graph6.hh>

#include <algorithm>
#include <vector>

using std::string;
using std::vector;

namespace rgood
{
    auto to_graph6(const Graph & g) -> string
    {
        long long n = g.order();
        string out;
        if (n <= 62)
            out.push_back(char(n + 63));
        else if (n <= 258047) {
            out.push_back(126);
            for (int shift = 12; shift >= 0; shift -= 6)
                out.push_back(char(((n >> shift) & 63) + 63));
        }
        else {
            out.push_back(126);
            out.push_back(126);
            for (int shift = 30; shift >= 0; shift -= 6)
                out.push_back(char(((n >> shift) & 63) + 63));
        }

        int bits = 0, acc = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
                if (++bits == 6) {
                    out.push_back(char(acc + 63));
                    bits = acc = 0;
                }
            }
        if (bits > 0)
            out.push_back(char((acc << (6 - bits)) + 63));
        return out;
    }

    auto from_graph6(const string & raw) -> Graph
    {
        auto first = raw.find_first_not_of(" \t\r\n");
        if (first == string::npos)
            throw ParseError{"graph6: empty input"};
        auto last = raw.find_last_not_of(" \t\r\n");
        string text = raw.substr(first, last - first + 1);
        const string header = ">>graph6<<";
        if (text.starts_with(header))
            text = text.substr(header.size());
        if (text.empty())
            throw ParseError{"graph6: empty input"};

        for (char c : text)
            if (c < 63 || c > 126)
                throw ParseError{"graph6: character outside 63..126"};

        std::size_t pos = 0;
        long long n = 0;
        if (text[0] != 126) {
            n = text[0] - 63;
            pos = 1;
        }
        else if (text.size() >= 2 && text[1] != 126) {
            if (text.size() < 4)
                throw ParseError{"graph6: truncated order field"};
            for (int i = 1; i <= 3; ++i)
                n = (n << 6) | (text[i] - 63);
            pos = 4;
        }
        else {
            if (text.size() < 8)
                throw ParseError{"graph6: truncated order field"};
            for (int i = 2; i <= 7; ++i)
                n = (n << 6) | (text[i] - 63);
            pos = 8;
        }
        if (n > 1'000'000)
            throw ParseError{"graph6: order too large"};

        long long pairs = n * (n - 1) / 2;
        long long expect = (pairs + 5) / 6;
        if (static_cast<long long>(text.size() - pos) != expect)
            throw ParseError{"graph6: expected " + std::to_string(expect) + " data bytes, found " + std::to_string(text.size() - pos)};

        vector<Edge> es;
        long long k = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++k) {
                int byte = text[pos + k / 6] - 63;
                if ((byte >> (5 - k % 6)) & 1)
                    es.emplace_back(i, j);
            }
        // padding bits must be zero
        if (pairs % 6) {
            int byte = text.back() - 63;
            if (byte & ((1 << (6 - pairs % 6)) - 1))
                throw ParseError{"graph6: nonzero padding bits"};
        }
        return Graph(int(n), es);
    }

    auto parse_graph_argument(const string & text, std::optional<std::uint64_t> default_seed) -> Graph
    {
        if (looks_like_family(text))
            return graph_from_family(text, default_seed);
        return from_graph6(text);
    }
}
