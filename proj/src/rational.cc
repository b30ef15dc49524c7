#include <rgood/errors.hh>
#include <rgood/rational.hh>

#include <algorithm>

using std::string;

namespace rgood
{
    namespace
    {
        using Int = Rational::Int;

        auto gcd(Int a, Int b) -> Int
        {
            if (a < 0)
                a = -a;
            if (b < 0)
                b = -b;
            while (b) {
                Int t = a % b;
                a = b;
                b = t;
            }
            return a;
        }

        auto checked_mul(Int a, Int b) -> Int
        {
            Int r;
            if (__builtin_mul_overflow(a, b, &r))
                throw PreconditionError{"rational arithmetic overflow"};
            return r;
        }

        auto checked_add(Int a, Int b) -> Int
        {
            Int r;
            if (__builtin_add_overflow(a, b, &r))
                throw PreconditionError{"rational arithmetic overflow"};
            return r;
        }
    }

    Rational::Rational(Int num, Int den)
    {
        if (den == 0)
            throw PreconditionError{"rational with zero denominator"};
        if (den < 0)
            num = -num, den = -den;
        Int g = gcd(num, den);
        if (g > 1)
            num /= g, den /= g;
        _num = num;
        _den = den;
    }

    auto Rational::parse(const string & raw) -> Rational
    {
        auto bad = [&] { return ParseError{"not a rational number: '" + raw + "'"}; };
        string text = raw;
        if (text.empty())
            throw bad();
        bool negative = false;
        if (text[0] == '-' || text[0] == '+') {
            negative = text[0] == '-';
            text = text.substr(1);
        }
        auto digits = [&](const string & s) -> Int {
            if (s.empty() || s.size() > 30 || ! std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
                throw bad();
            Int v = 0;
            for (char c : s)
                v = v * 10 + (c - '0');
            return v;
        };
        Rational r;
        if (auto slash = text.find('/'); slash != string::npos) {
            Int den = digits(text.substr(slash + 1));
            if (den == 0)
                throw bad();
            r = Rational(digits(text.substr(0, slash)), den);
        }
        else if (auto dot = text.find('.'); dot != string::npos) {
            string whole = text.substr(0, dot), frac = text.substr(dot + 1);
            if (whole.empty())
                whole = "0";
            if (frac.empty())
                throw bad();
            Int den = 1;
            for (std::size_t i = 0; i < frac.size(); ++i)
                den *= 10;
            r = Rational(digits(whole) * den + digits(frac), den);
        }
        else
            r = Rational(digits(text), 1);
        return negative ? Rational(-r._num, r._den) : r;
    }

    auto Rational::to_string() const -> string
    {
        if (_den == 1)
            return int128_to_string(_num);
        return int128_to_string(_num) + "/" + int128_to_string(_den);
    }

    auto Rational::floor() const -> Int
    {
        Int q = _num / _den;
        if (_num % _den != 0 && _num < 0)
            --q;
        return q;
    }

    auto Rational::ceil() const -> Int
    {
        Int q = _num / _den;
        if (_num % _den != 0 && _num > 0)
            ++q;
        return q;
    }

    auto operator+(const Rational & a, const Rational & b) -> Rational
    {
        Int g = gcd(a._den, b._den);
        Int den = checked_mul(a._den / g, b._den);
        return Rational(checked_add(checked_mul(a._num, b._den / g), checked_mul(b._num, a._den / g)), den);
    }

    auto operator-(const Rational & a, const Rational & b) -> Rational
    {
        return a + Rational(-b._num, b._den);
    }

    auto operator*(const Rational & a, const Rational & b) -> Rational
    {
        Int g1 = gcd(a._num, b._den), g2 = gcd(b._num, a._den);
        if (g1 == 0)
            g1 = 1;
        if (g2 == 0)
            g2 = 1;
        return Rational(checked_mul(a._num / g1, b._num / g2), checked_mul(a._den / g2, b._den / g1));
    }

    auto operator/(const Rational & a, const Rational & b) -> Rational
    {
        if (b._num == 0)
            throw PreconditionError{"rational division by zero"};
        return a * Rational(b._den, b._num);
    }

    auto operator<=>(const Rational & a, const Rational & b) -> std::strong_ordering
    {
        Int l = checked_mul(a._num, b._den), r = checked_mul(b._num, a._den);
        return l < r ? std::strong_ordering::less : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    auto operator==(const Rational & a, const Rational & b) -> bool
    {
        return a._num == b._num && a._den == b._den;
    }

    auto int128_to_string(Int v) -> string
    {
        if (v == 0)
            return "0";
        bool negative = v < 0;
        unsigned __int128 u = negative ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
        string s;
        while (u) {
            s.push_back(char('0' + int(u % 10)));
            u /= 10;
        }
        if (negative)
            s.push_back('-');
        std::reverse(s.begin(), s.end());
        return s;
    }
}
