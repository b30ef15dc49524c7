#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace rgood
{
    // Exact nonnegative-denominator rational with 128-bit intermediates. Parameters such as
    // epsilon are kept exact so that ceilings like ceil(1/eps^7) are computed without rounding.
    class Rational
    {
    public:
        using Int = __int128;

        Rational() = default;
        Rational(std::int64_t whole) : _num(whole), _den(1) {}
        Rational(Int num, Int den);

        // "3", "-2", "1/243", "0.05", "5e-3" is not accepted.
        static auto parse(const std::string & text) -> Rational;

        auto num() const -> Int { return _num; }
        auto den() const -> Int { return _den; }

        auto to_double() const -> double { return double(_num) / double(_den); }
        auto to_string() const -> std::string;

        auto ceil() const -> Int;
        auto floor() const -> Int;

        friend auto operator+(const Rational & a, const Rational & b) -> Rational;
        friend auto operator-(const Rational & a, const Rational & b) -> Rational;
        friend auto operator*(const Rational & a, const Rational & b) -> Rational;
        friend auto operator/(const Rational & a, const Rational & b) -> Rational;
        friend auto operator<=>(const Rational & a, const Rational & b) -> std::strong_ordering;
        friend auto operator==(const Rational & a, const Rational & b) -> bool;

    private:
        Int _num = 0;
        Int _den = 1;
    };

    auto int128_to_string(Rational::Int v) -> std::string;
}
