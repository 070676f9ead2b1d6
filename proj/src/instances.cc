#include <wred/error.hh>
#include <wred/instances.hh>

#include <sstream>

using namespace wred;

using std::function;
using std::make_shared;
using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace
{
    constexpr std::uint64_t unary_cap = 1u << 20;
}

auto wred::status_name(Status s) -> const char *
{
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Inconclusive: return "inconclusive";
    }
    return "?";
}

auto Verdict::pass(string d) -> Verdict
{
    return Verdict{Status::Pass, std::move(d)};
}

auto Verdict::fail(string d) -> Verdict
{
    return Verdict{Status::Fail, std::move(d)};
}

auto Verdict::inconclusive(string d) -> Verdict
{
    return Verdict{Status::Inconclusive, std::move(d)};
}

auto wred::worst(const Verdict & a, const Verdict & b) -> Verdict
{
    auto rank = [] (Status s) { return s == Status::Fail ? 2 : s == Status::Inconclusive ? 1 : 0; };
    return rank(b.status) > rank(a.status) ? b : a;
}

auto wred::colors_name(Colors k) -> string
{
    return k ? to_string(*k) : string("w");
}

auto Coloring::operator() (const Tuple & xs) const -> std::uint64_t
{
    if (xs.size() != arity)
        throw InputError("coloring '" + name + "' has arity " + to_string(arity) + ", got a " + to_string(xs.size()) + "-tuple");
    auto c = rule(xs);
    if (colors && c >= *colors)
        throw ContractError("coloring '" + name + "' produced colour " + to_string(c) + " >= " + to_string(*colors));
    return c;
}

auto wred::constant_coloring(std::size_t n, Colors k, std::uint64_t c) -> Coloring
{
    return Coloring{n, k, [c] (const Tuple &) { return c; }, "const" + to_string(c)};
}

auto wred::table_coloring(std::size_t n, Colors k, Pos domain, const vector<std::uint64_t> & by_rank, const string & name) -> Coloring
{
    if (by_rank.size() != binomial(domain, n))
        throw InputError("coloring table for domain " + to_string(domain) + " needs " + to_string(binomial(domain, n)) + " entries");
    for (auto c : by_rank)
        if (k && c >= *k)
            throw InputError("colour " + to_string(c) + " out of range in table '" + name + "'");
    auto table = make_shared<vector<std::uint64_t>>(by_rank);
    return Coloring{n, k, [table, domain] (const Tuple & xs) -> std::uint64_t {
        if (xs.back() >= domain)
            return 0;
        return (*table)[tuple_rank(xs)];
    }, name};
}

auto wred::full_tree() -> TreeByRule
{
    return TreeByRule{[] (const Prefix &) { return true; }, Rational(1), "full"};
}

auto wred::color_bits(std::uint64_t k) -> unsigned
{
    unsigned b = 0;
    while ((std::uint64_t(1) << b) < k)
        ++b;
    return b;
}

auto wred::read_color(const TapeFn & tape, std::size_t n, Colors k, const Tuple & xs) -> std::uint64_t
{
    if (xs.size() != n)
        throw InputError("tuple size does not match arity");
    auto r = tuple_rank(xs);
    if (k) {
        auto b = color_bits(*k);
        std::uint64_t v = 0;
        for (unsigned j = 0 ; j < b ; ++j)
            v = 2 * v + tape(r * b + j);
        return v % *k;
    }

    std::uint64_t c = 0;
    while (tape(cantor_pair(r, c)) == 1)
        if (++c > unary_cap)
            throw ResourceError("unterminated unary colour block at tuple rank " + to_string(r));
    return c;
}

auto wred::encode_color_bit(std::size_t n, Colors k, Pos pos, const function<std::uint64_t (const Tuple &)> & color) -> int
{
    if (k) {
        auto b = color_bits(*k);
        if (b == 0)
            return 0;
        auto r = pos / b, j = pos % b;
        auto c = color(rank_tuple(r, n));
        return (c >> (b - 1 - j)) & 1;
    }
    auto [r, j] = cantor_unpair(pos);
    return j < color(rank_tuple(r, n)) ? 1 : 0;
}

auto wred::encode_coloring(const Coloring & f) -> Point
{
    return Point{"enc(" + f.name + ")", [f] (Pos pos) {
        return encode_color_bit(f.arity, f.colors, pos, [&] (const Tuple & xs) { return f(xs); });
    }};
}

auto wred::thin_omitted(const TapeFn & tape, std::uint64_t cap) -> optional<std::uint64_t>
{
    std::uint64_t c = 0;
    while (tape(c) == 1)
        if (++c >= cap)
            return std::nullopt;
    return c;
}

auto wred::thin_set_bit(const TapeFn & tape, std::uint64_t omitted, Pos x) -> int
{
    return tape(omitted + 1 + x);
}

auto wred::encode_thin(const ThinSolution & s) -> Point
{
    auto c = s.omitted;
    auto set = s.set;
    return Point{"thin(" + set.name() + "," + to_string(c) + ")", [c, set] (Pos i) {
        if (i < c)
            return 1;
        if (i == c)
            return 0;
        return set.at(i - c - 1);
    }};
}

auto wred::string_index(const Prefix & p) -> Pos
{
    if (p.length() >= 63)
        throw InputError("string too long to index");
    Pos v = 0;
    for (Pos i = 0 ; i < p.length() ; ++i)
        v = 2 * v + p.at(i);
    return (Pos(1) << p.length()) - 1 + v;
}

auto wred::index_string(Pos i) -> Prefix
{
    Pos len = 0;
    while ((Pos(1) << (len + 1)) - 1 <= i)
        ++len;
    Pos v = i - ((Pos(1) << len) - 1);
    vector<std::uint8_t> bits(len);
    for (Pos j = 0 ; j < len ; ++j)
        bits[len - 1 - j] = (v >> j) & 1;
    return Prefix{std::move(bits)};
}

auto wred::tree_from_tape(const TapeFn & tape) -> function<bool (const Prefix &)>
{
    return [tape] (const Prefix & p) { return tape(string_index(p)) == 1; };
}

auto wred::decode_tree(const Point & a) -> TreeByRule
{
    return TreeByRule{tree_from_tape(tape_of(a)), std::nullopt, "tree(" + a.name() + ")"};
}

auto wred::encode_tree(const TreeByRule & t) -> Point
{
    return Point{"enc(" + t.name + ")", [t] (Pos i) { return t.contains(index_string(i)) ? 1 : 0; }};
}

auto wred::decode_family(const Point & a) -> SetFamily
{
    return SetFamily{[a] (std::uint64_t i, Pos x) { return a.at(cantor_pair(i, x)); }, "family(" + a.name() + ")"};
}

auto wred::encode_family(const SetFamily & f) -> Point
{
    return Point{"enc(" + f.name + ")", [f] (Pos z) {
        auto [i, x] = cantor_unpair(z);
        return f.member(i, x);
    }};
}

auto wred::members_below(const Point & s, Pos n) -> vector<Pos>
{
    vector<Pos> r;
    for (Pos x = 0 ; x < n ; ++x)
        if (s.at(x))
            r.push_back(x);
    return r;
}

auto wred::tape_of(const Point & p) -> TapeFn
{
    return [p] (Pos i) { return p.at(i); };
}

namespace
{
    auto subsets_from(const vector<Pos> & xs, std::size_t n, std::size_t start, Tuple & cur,
            const function<bool (const Tuple &)> & fn) -> bool
    {
        if (cur.size() == n)
            return fn(cur);
        for (std::size_t i = start ; i + (n - cur.size()) <= xs.size() ; ++i) {
            cur.push_back(xs[i]);
            bool go = subsets_from(xs, n, i + 1, cur, fn);
            cur.pop_back();
            if (! go)
                return false;
        }
        return true;
    }
}

auto wred::for_each_subset(const vector<Pos> & xs, std::size_t n, const function<bool (const Tuple &)> & fn) -> bool
{
    Tuple cur;
    return subsets_from(xs, n, 0, cur, fn);
}

auto wred::format_set(const vector<Pos> & xs) -> string
{
    std::ostringstream s;
    s << "{";
    for (std::size_t i = 0 ; i < xs.size() ; ++i)
        s << (i ? " " : "") << xs[i];
    s << "}";
    return s.str();
}

auto wred::format_tuple(const Tuple & xs) -> string
{
    std::ostringstream s;
    s << "(";
    for (std::size_t i = 0 ; i < xs.size() ; ++i)
        s << (i ? "," : "") << xs[i];
    s << ")";
    return s.str();
}
