#pragma once

#include <rgood/errors.hh>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>

namespace rgood
{
    inline constexpr std::uint64_t default_node_limit = 200'000'000;

    // Per-call search allowance. Every exact solver charges one unit per search node.
    class Budget
    {
    public:
        Budget() = default;
        explicit Budget(std::uint64_t limit) : _limit(limit) {}

        static auto unlimited() -> Budget { return Budget{std::numeric_limits<std::uint64_t>::max()}; }

        // Returns false once the allowance is used up.
        auto spend(std::uint64_t amount = 1) -> bool
        {
            _used += amount;
            if (_used > _limit)
                _exhausted = true;
            return ! _exhausted;
        }

        auto exhausted() const -> bool { return _exhausted; }
        auto used() const -> std::uint64_t { return _used; }
        auto limit() const -> std::uint64_t { return _limit; }

    private:
        std::uint64_t _limit = default_node_limit;
        std::uint64_t _used = 0;
        bool _exhausted = false;
    };

    enum class Status
    {
        decided,
        undecided,
        error
    };

    // Three-valued result of an exact solver: a value, "undecided" (budget ran out),
    // or an error. A value is never reported unless the search proved it.
    template <typename T>
    class Outcome
    {
    public:
        static auto decided(T value) -> Outcome { return Outcome{Status::decided, std::move(value), {}}; }
        static auto undecided(std::string why = "node budget exceeded") -> Outcome
        {
            return Outcome{Status::undecided, std::nullopt, std::move(why)};
        }
        static auto error(std::string why) -> Outcome { return Outcome{Status::error, std::nullopt, std::move(why)}; }

        auto status() const -> Status { return _status; }
        auto is_decided() const -> bool { return _status == Status::decided; }
        auto message() const -> const std::string & { return _message; }

        auto value() const -> const T &
        {
            if (_status != Status::decided)
                throw PreconditionError{"value() on an outcome that is not decided: " + _message};
            return *_value;
        }

        auto operator*() const -> const T & { return value(); }
        auto operator->() const -> const T * { return &value(); }

        template <typename F>
        auto map(F && f) const -> Outcome<decltype(f(std::declval<const T &>()))>
        {
            using U = decltype(f(std::declval<const T &>()));
            switch (_status) {
            case Status::decided: return Outcome<U>::decided(f(*_value));
            case Status::undecided: return Outcome<U>::undecided(_message);
            case Status::error: break;
            }
            return Outcome<U>::error(_message);
        }

    private:
        Outcome(Status s, std::optional<T> v, std::string m) : _status(s), _value(std::move(v)), _message(std::move(m)) {}

        Status _status;
        std::optional<T> _value;
        std::string _message;
    };

    auto to_string(Status s) -> std::string;
}
