#ifndef WRED_KERNEL_HH
#define WRED_KERNEL_HH 1

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace wred
{
    using Pos = std::uint64_t;
    using Tuple = std::vector<std::uint64_t>;

    class Prefix
    {
        private:
            std::vector<std::uint8_t> _bits;

        public:
            Prefix() = default;
            explicit Prefix(std::vector<std::uint8_t> bits);

            static auto from_string(const std::string & s) -> Prefix;

            auto length() const -> Pos;
            auto at(Pos i) const -> int;
            auto push_back(int b) -> void;
            auto concat(const Prefix & other) const -> Prefix;
            auto take(Pos n) const -> Prefix;
            auto bits() const -> const std::vector<std::uint8_t> &;
            auto to_string() const -> std::string;

            auto operator== (const Prefix &) const -> bool = default;
            auto operator<=> (const Prefix &) const = default;
    };

    class Point
    {
        private:
            struct State;
            std::shared_ptr<State> _state;

        public:
            Point(std::string name, std::function<int (Pos)> rule);

            auto at(Pos i) const -> int;
            auto name() const -> const std::string &;
            auto prefix(Pos n) const -> Prefix;

            static auto constant(int b) -> Point;
            // sigma followed by the bits of tail
            static auto extend(const Prefix & sigma, const Point & tail) -> Point;
            static auto from_set(const std::vector<Pos> & members, const std::string & name = "set") -> Point;
    };

    auto random_point(std::uint64_t seed, std::uint64_t salt = 0) -> Point;
    auto mix64(std::uint64_t x) -> std::uint64_t;

    using Oracle = std::variant<Point, Prefix>;
    using TapeFn = std::function<int (Pos)>;

    // control-flow signals, never surfaced to callers of evaluate
    struct OutOfFuel { };
    struct PrefixOverrun { };

    class Budget
    {
        private:
            Pos _remaining;
            Pos _spent = 0;

        public:
            explicit Budget(Pos fuel);

            auto spend(Pos n = 1) -> void;
            auto spent() const -> Pos;
            auto remaining() const -> Pos;
    };

    class Query
    {
        private:
            std::vector<TapeFn> _tapes;
            Budget & _budget;
            std::vector<std::optional<Pos>> _use;

        public:
            Query(std::vector<TapeFn> tapes, Budget & b);

            auto bit(std::size_t tape, Pos pos) -> int;
            auto tick(Pos n = 1) -> void;
            auto arity() const -> std::size_t;
            auto budget() -> Budget &;
            // a view of one tape that goes through this query
            auto tape(std::size_t i) -> TapeFn;
            auto use() const -> const std::vector<std::optional<Pos>> &;
    };

    struct Functional
    {
        std::size_t arity = 1;
        std::function<int (Query &, Pos)> step;
        std::string label;
    };

    enum class EvalStatus
    {
        Converged,
        DivergedFuel
    };

    struct EvalOutcome
    {
        EvalStatus status = EvalStatus::DivergedFuel;
        int value = 0;
        std::vector<std::optional<Pos>> use;
        Pos steps = 0;
        bool prefix_overrun = false;

        auto converged() const -> bool { return status == EvalStatus::Converged; }
    };

    auto as_tape(const Oracle & o) -> TapeFn;

    auto evaluate(const Functional & f, const std::vector<Oracle> & oracles, Pos x, Pos fuel) -> EvalOutcome;

    // evaluation inside another evaluation, sharing its budget
    auto run_on(const Functional & f, std::vector<TapeFn> tapes, Budget & b, Pos x) -> int;

    // the output of f on the given tapes, as a memoized tape
    auto applied(const Functional & f, std::vector<TapeFn> tapes, Budget & b) -> TapeFn;

    // total view of f(oracles); divergence within fuel raises a resource error
    auto apply_point(const Functional & f, std::vector<Point> oracles, Pos fuel, const std::string & name = "") -> Point;

    auto identity_functional() -> Functional;
    auto projection(std::size_t arity, std::size_t which) -> Functional;
    auto constant_functional(std::size_t arity, int b) -> Functional;

    // reruns a converged evaluation at every y <= x and against the oracles
    // truncated to their use; throws ContractError on a violation
    auto check_contract(const Functional & f, const std::vector<Oracle> & oracles, Pos x, Pos fuel) -> EvalOutcome;

    class Monitor
    {
        private:
            Functional _f;
            std::uint64_t _checked = 0;

        public:
            explicit Monitor(Functional f);

            auto evaluate(const std::vector<Oracle> & oracles, Pos x, Pos fuel) -> EvalOutcome;
            auto checked() const -> std::uint64_t;
            auto functional() const -> const Functional &;
    };

    auto binomial(std::uint64_t n, std::uint64_t k) -> std::uint64_t;
    auto tuple_rank(const Tuple & xs) -> std::uint64_t;
    auto rank_tuple(std::uint64_t r, std::size_t n) -> Tuple;

    auto cantor_pair(std::uint64_t a, std::uint64_t b) -> std::uint64_t;
    auto cantor_unpair(std::uint64_t z) -> std::pair<std::uint64_t, std::uint64_t>;

    auto interleave(const Point & a, const Point & b) -> Point;
    auto even_bits(const Point & a) -> Point;
    auto odd_bits(const Point & a) -> Point;
    auto column(const Point & a, std::uint64_t i) -> Point;
    auto family(std::function<Point (std::uint64_t)> columns, const std::string & name = "family") -> Point;

    auto even_part(const Prefix & p) -> Prefix;
    auto odd_part(const Prefix & p) -> Prefix;
}

#endif
