#pragma once

#include <bit>
#include <cstdint>
#include <iterator>
#include <vector>

namespace rgood
{
    // Dynamic bitset over a fixed universe {0..universe-1}.
    class VertexSet
    {
    public:
        class Iterator
        {
        public:
            using iterator_category = std::forward_iterator_tag;
            using value_type = int;
            using difference_type = std::ptrdiff_t;
            using pointer = const int *;
            using reference = int;

            Iterator() = default;
            Iterator(const VertexSet * set, int at) : _set(set), _at(at) {}

            auto operator*() const -> int { return _at; }
            auto operator++() -> Iterator &
            {
                _at = _set->next(_at);
                return *this;
            }
            auto operator++(int) -> Iterator
            {
                auto copy = *this;
                ++*this;
                return copy;
            }
            auto operator==(const Iterator & other) const -> bool { return _at == other._at; }

        private:
            const VertexSet * _set = nullptr;
            int _at = -1;
        };

        VertexSet() = default;
        explicit VertexSet(int universe) : _universe(universe), _words((universe + 63) / 64, 0) {}

        static auto full(int universe) -> VertexSet
        {
            VertexSet s(universe);
            for (int w = 0; w < int(s._words.size()); ++w)
                s._words[w] = ~std::uint64_t{0};
            s.trim();
            return s;
        }

        template <typename Range>
        static auto of(int universe, const Range & members) -> VertexSet
        {
            VertexSet s(universe);
            for (int v : members)
                s.insert(v);
            return s;
        }

        auto universe() const -> int { return _universe; }

        auto contains(int v) const -> bool { return (_words[v >> 6] >> (v & 63)) & 1; }
        auto insert(int v) -> void { _words[v >> 6] |= std::uint64_t{1} << (v & 63); }
        auto erase(int v) -> void { _words[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

        auto count() const -> int
        {
            int c = 0;
            for (auto w : _words)
                c += std::popcount(w);
            return c;
        }

        auto empty() const -> bool
        {
            for (auto w : _words)
                if (w)
                    return false;
            return true;
        }

        // Smallest member, or -1.
        auto first() const -> int { return next(-1); }

        // Smallest member strictly greater than v, or -1.
        auto next(int v) const -> int
        {
            int from = v + 1;
            if (from >= _universe)
                return -1;
            int w = from >> 6;
            std::uint64_t word = _words[w] & (~std::uint64_t{0} << (from & 63));
            while (true) {
                if (word)
                    return (w << 6) + std::countr_zero(word);
                if (++w >= int(_words.size()))
                    return -1;
                word = _words[w];
            }
        }

        auto intersects(const VertexSet & other) const -> bool
        {
            for (std::size_t w = 0; w < _words.size(); ++w)
                if (_words[w] & other._words[w])
                    return true;
            return false;
        }

        auto is_subset_of(const VertexSet & other) const -> bool
        {
            for (std::size_t w = 0; w < _words.size(); ++w)
                if (_words[w] & ~other._words[w])
                    return false;
            return true;
        }

        auto operator&=(const VertexSet & other) -> VertexSet &
        {
            for (std::size_t w = 0; w < _words.size(); ++w)
                _words[w] &= other._words[w];
            return *this;
        }

        auto operator|=(const VertexSet & other) -> VertexSet &
        {
            for (std::size_t w = 0; w < _words.size(); ++w)
                _words[w] |= other._words[w];
            return *this;
        }

        // Set difference.
        auto operator-=(const VertexSet & other) -> VertexSet &
        {
            for (std::size_t w = 0; w < _words.size(); ++w)
                _words[w] &= ~other._words[w];
            return *this;
        }

        friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
        friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
        friend auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }

        auto complement() const -> VertexSet { return full(_universe) - *this; }

        auto operator==(const VertexSet & other) const -> bool = default;

        auto begin() const -> Iterator { return Iterator{this, first()}; }
        auto end() const -> Iterator { return Iterator{this, -1}; }

        auto to_vector() const -> std::vector<int>
        {
            std::vector<int> out;
            out.reserve(count());
            for (int v : *this)
                out.push_back(v);
            return out;
        }

        auto words() const -> const std::vector<std::uint64_t> & { return _words; }

    private:
        auto trim() -> void
        {
            if (_universe & 63)
                _words.back() &= (std::uint64_t{1} << (_universe & 63)) - 1;
        }

        int _universe = 0;
        std::vector<std::uint64_t> _words;
    };
}
