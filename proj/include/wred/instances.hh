#ifndef WRED_INSTANCES_HH
#define WRED_INSTANCES_HH 1

#include <wred/kernel.hh>
#include <wred/rational.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace wred
{
    enum class Status
    {
        Pass,
        Fail,
        Inconclusive
    };

    auto status_name(Status s) -> const char *;

    struct Verdict
    {
        Status status = Status::Inconclusive;
        std::string detail;

        static auto pass(std::string d = "") -> Verdict;
        static auto fail(std::string d) -> Verdict;
        static auto inconclusive(std::string d) -> Verdict;

        auto ok() const -> bool { return status == Status::Pass; }
        auto failed() const -> bool { return status == Status::Fail; }
    };

    // pass/inconclusive/fail ordered by badness
    auto worst(const Verdict & a, const Verdict & b) -> Verdict;

    struct Scale
    {
        Pos horizon = 16;
        Pos size = 0;          // 0: use 4 * arity
        Pos fuel = 1u << 20;
        Pos columns = 4;       // materialized columns of sequential problems
        Pos node_limit = 2'000'000;

        auto size_for(std::size_t arity) const -> Pos { return size ? size : 4 * arity; }
    };

    using Colors = std::optional<std::uint64_t>;    // nullopt is omega
    auto colors_name(Colors k) -> std::string;

    struct Coloring
    {
        std::size_t arity = 1;
        Colors colors;
        std::function<std::uint64_t (const Tuple &)> rule;
        std::string name;

        auto operator() (const Tuple & xs) const -> std::uint64_t;
    };

    auto constant_coloring(std::size_t n, Colors k, std::uint64_t c) -> Coloring;
    auto table_coloring(std::size_t n, Colors k, Pos domain, const std::vector<std::uint64_t> & by_rank,
            const std::string & name = "table") -> Coloring;

    struct TreeByRule
    {
        std::function<bool (const Prefix &)> member;
        std::optional<Rational> declared_bound;
        std::string name;

        auto contains(const Prefix & p) const -> bool { return member(p); }
    };

    auto full_tree() -> TreeByRule;

    struct SetFamily
    {
        std::function<int (std::uint64_t, Pos)> member;
        std::string name;
    };

    struct ThinSolution
    {
        Point set;
        std::uint64_t omitted;
    };

    // bits per tuple block for finite k
    auto color_bits(std::uint64_t k) -> unsigned;

    // a coloring read from a tape under the totality coding
    auto read_color(const TapeFn & tape, std::size_t n, Colors k, const Tuple & xs) -> std::uint64_t;

    // bit at pos of the encoding of a coloring with the given rule
    auto encode_color_bit(std::size_t n, Colors k, Pos pos, const std::function<std::uint64_t (const Tuple &)> & color) -> int;

    auto encode_coloring(const Coloring & f) -> Point;

    // unary colour code, then the set
    auto thin_omitted(const TapeFn & tape, std::uint64_t cap) -> std::optional<std::uint64_t>;
    auto encode_thin(const ThinSolution & s) -> Point;
    auto thin_set_bit(const TapeFn & tape, std::uint64_t omitted, Pos x) -> int;

    auto string_index(const Prefix & p) -> Pos;
    auto index_string(Pos i) -> Prefix;
    auto decode_tree(const Point & a) -> TreeByRule;
    auto tree_from_tape(const TapeFn & tape) -> std::function<bool (const Prefix &)>;
    auto encode_tree(const TreeByRule & t) -> Point;

    auto decode_family(const Point & a) -> SetFamily;
    auto encode_family(const SetFamily & f) -> Point;

    auto members_below(const Point & s, Pos n) -> std::vector<Pos>;

    auto tape_of(const Point & p) -> TapeFn;

    // calls fn on every n-subset of xs in lexicographic order; stops when fn returns false
    auto for_each_subset(const std::vector<Pos> & xs, std::size_t n, const std::function<bool (const Tuple &)> & fn) -> bool;

    auto format_set(const std::vector<Pos> & xs) -> std::string;
    auto format_tuple(const Tuple & xs) -> std::string;
}

#endif
