#include <wred/error.hh>
#include <wred/kernel.hh>

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

using namespace wred;

using std::function;
using std::make_shared;
using std::max;
using std::min;
using std::nullopt;
using std::optional;
using std::pair;
using std::shared_lock;
using std::shared_mutex;
using std::string;
using std::to_string;
using std::unique_lock;
using std::unordered_map;
using std::vector;

Prefix::Prefix(vector<std::uint8_t> bits) :
    _bits(std::move(bits))
{
    for (auto b : _bits)
        if (b > 1)
            throw InputError("prefix bit out of range: " + std::to_string(b));
}

auto Prefix::from_string(const string & s) -> Prefix
{
    vector<std::uint8_t> bits;
    for (char c : s) {
        if (c != '0' && c != '1')
            throw InputError(string("bad prefix character '") + c + "'");
        bits.push_back(c - '0');
    }
    return Prefix{std::move(bits)};
}

auto Prefix::length() const -> Pos
{
    return _bits.size();
}

auto Prefix::at(Pos i) const -> int
{
    return _bits.at(i);
}

auto Prefix::push_back(int b) -> void
{
    if (b != 0 && b != 1)
        throw InputError("prefix bit out of range: " + std::to_string(b));
    _bits.push_back(b);
}

auto Prefix::concat(const Prefix & other) const -> Prefix
{
    auto bits = _bits;
    bits.insert(bits.end(), other._bits.begin(), other._bits.end());
    return Prefix{std::move(bits)};
}

auto Prefix::take(Pos n) const -> Prefix
{
    n = min<Pos>(n, _bits.size());
    return Prefix{vector<std::uint8_t>(_bits.begin(), _bits.begin() + n)};
}

auto Prefix::bits() const -> const vector<std::uint8_t> &
{
    return _bits;
}

auto Prefix::to_string() const -> string
{
    string s;
    for (auto b : _bits)
        s.push_back('0' + b);
    return s;
}

struct Point::State
{
    string name;
    function<int (Pos)> rule;
    mutable shared_mutex mutex;
    mutable unordered_map<Pos, std::uint8_t> memo;
};

Point::Point(string name, function<int (Pos)> rule) :
    _state(make_shared<State>())
{
    _state->name = std::move(name);
    _state->rule = std::move(rule);
}

auto Point::at(Pos i) const -> int
{
    {
        shared_lock lock(_state->mutex);
        auto it = _state->memo.find(i);
        if (it != _state->memo.end())
            return it->second;
    }

    int b;
    try {
        b = _state->rule(i);
    }
    catch (const WredError &) {
        throw;
    }
    catch (const std::exception & e) {
        throw InputError("point '" + _state->name + "' failed at " + to_string(i) + ": " + e.what());
    }
    if (b != 0 && b != 1)
        throw InputError("point '" + _state->name + "' produced non-bit " + to_string(b) + " at " + to_string(i));

    unique_lock lock(_state->mutex);
    _state->memo.emplace(i, b);
    return b;
}

auto Point::name() const -> const string &
{
    return _state->name;
}

auto Point::prefix(Pos n) const -> Prefix
{
    vector<std::uint8_t> bits;
    bits.reserve(n);
    for (Pos i = 0 ; i < n ; ++i)
        bits.push_back(at(i));
    return Prefix{std::move(bits)};
}

auto Point::constant(int b) -> Point
{
    return Point{b ? "ones" : "zeros", [b] (Pos) { return b; }};
}

auto Point::extend(const Prefix & sigma, const Point & tail) -> Point
{
    return Point{sigma.to_string() + "^" + tail.name(), [sigma, tail] (Pos i) {
        return i < sigma.length() ? sigma.at(i) : tail.at(i - sigma.length());
    }};
}

auto Point::from_set(const vector<Pos> & members, const string & name) -> Point
{
    auto sorted = make_shared<vector<Pos>>(members);
    std::sort(sorted->begin(), sorted->end());
    return Point{name, [sorted] (Pos i) { return std::binary_search(sorted->begin(), sorted->end(), i) ? 1 : 0; }};
}

auto wred::mix64(std::uint64_t x) -> std::uint64_t
{
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

auto wred::random_point(std::uint64_t seed, std::uint64_t salt) -> Point
{
    auto key = mix64(seed ^ mix64(salt));
    return Point{"random(" + to_string(seed) + "," + to_string(salt) + ")", [key] (Pos i) {
        return int(mix64(key ^ mix64(i)) & 1);
    }};
}

Budget::Budget(Pos fuel) :
    _remaining(fuel)
{
}

auto Budget::spend(Pos n) -> void
{
    if (n > _remaining) {
        _spent += _remaining;
        _remaining = 0;
        throw OutOfFuel{};
    }
    _remaining -= n;
    _spent += n;
}

auto Budget::spent() const -> Pos
{
    return _spent;
}

auto Budget::remaining() const -> Pos
{
    return _remaining;
}

Query::Query(vector<TapeFn> tapes, Budget & b) :
    _tapes(std::move(tapes)),
    _budget(b),
    _use(_tapes.size())
{
}

auto Query::bit(std::size_t tape, Pos pos) -> int
{
    if (tape >= _tapes.size())
        throw ContractError("functional queried tape " + to_string(tape) + " of " + to_string(_tapes.size()));
    _budget.spend(1);
    _use[tape] = _use[tape] ? max(*_use[tape], pos) : pos;
    return _tapes[tape](pos);
}

auto Query::tick(Pos n) -> void
{
    _budget.spend(n);
}

auto Query::arity() const -> std::size_t
{
    return _tapes.size();
}

auto Query::budget() -> Budget &
{
    return _budget;
}

auto Query::tape(std::size_t i) -> TapeFn
{
    return [this, i] (Pos p) { return bit(i, p); };
}

auto Query::use() const -> const vector<optional<Pos>> &
{
    return _use;
}

auto wred::as_tape(const Oracle & o) -> TapeFn
{
    if (auto p = std::get_if<Point>(&o))
        return [pt = *p] (Pos i) { return pt.at(i); };
    auto & pre = std::get<Prefix>(o);
    return [pre] (Pos i) -> int {
        if (i >= pre.length())
            throw PrefixOverrun{};
        return pre.at(i);
    };
}

auto wred::evaluate(const Functional & f, const vector<Oracle> & oracles, Pos x, Pos fuel) -> EvalOutcome
{
    if (oracles.size() != f.arity)
        throw InputError("functional '" + f.label + "' has arity " + to_string(f.arity) + " but got "
                + to_string(oracles.size()) + " oracles");

    vector<TapeFn> tapes;
    for (auto & o : oracles)
        tapes.push_back(as_tape(o));

    Budget budget(fuel);
    Query q(std::move(tapes), budget);
    EvalOutcome result;
    try {
        budget.spend(1);
        int v = f.step(q, x);
        if (v != 0 && v != 1)
            throw ContractError("functional '" + f.label + "' returned non-bit " + to_string(v));
        result.status = EvalStatus::Converged;
        result.value = v;
    }
    catch (const OutOfFuel &) {
        result.status = EvalStatus::DivergedFuel;
    }
    catch (const PrefixOverrun &) {
        result.status = EvalStatus::DivergedFuel;
        result.prefix_overrun = true;
    }
    result.use = q.use();
    result.steps = budget.spent();
    return result;
}

auto wred::run_on(const Functional & f, vector<TapeFn> tapes, Budget & b, Pos x) -> int
{
    if (tapes.size() != f.arity)
        throw InputError("functional '" + f.label + "' has arity " + to_string(f.arity) + " but got "
                + to_string(tapes.size()) + " tapes");
    Query q(std::move(tapes), b);
    b.spend(1);
    int v = f.step(q, x);
    if (v != 0 && v != 1)
        throw ContractError("functional '" + f.label + "' returned non-bit " + to_string(v));
    return v;
}

auto wred::applied(const Functional & f, vector<TapeFn> tapes, Budget & b) -> TapeFn
{
    // shared, so that copies of the tape stay cheap however deep the nesting
    struct State
    {
        Functional f;
        vector<TapeFn> tapes;
        unordered_map<Pos, int> memo;
    };
    auto st = make_shared<State>(State{f, std::move(tapes), {}});
    return [st, &b] (Pos x) -> int {
        auto it = st->memo.find(x);
        if (it != st->memo.end())
            return it->second;
        int v = run_on(st->f, st->tapes, b, x);
        st->memo.emplace(x, v);
        return v;
    };
}

auto wred::apply_point(const Functional & f, vector<Point> oracles, Pos fuel, const string & name) -> Point
{
    string label = name.empty() ? f.label : name;
    vector<Oracle> os(oracles.begin(), oracles.end());
    return Point{label, [f, os, fuel, label] (Pos x) {
        auto r = evaluate(f, os, x, fuel);
        if (! r.converged())
            throw ResourceError("'" + label + "' diverged at position " + to_string(x) + " within fuel " + to_string(fuel));
        return r.value;
    }};
}

auto wred::identity_functional() -> Functional
{
    return Functional{1, [] (Query & q, Pos x) { return q.bit(0, x); }, "id"};
}

auto wred::projection(std::size_t arity, std::size_t which) -> Functional
{
    if (which >= arity)
        throw InputError("projection index out of range");
    return Functional{arity, [which] (Query & q, Pos x) { return q.bit(which, x); },
        "proj" + to_string(which) + "/" + to_string(arity)};
}

auto wred::constant_functional(std::size_t arity, int b) -> Functional
{
    return Functional{arity, [b] (Query &, Pos) { return b; }, "const" + to_string(b)};
}

namespace
{
    auto truncate(const Oracle & o, optional<Pos> use) -> Oracle
    {
        Pos n = use ? *use + 1 : 0;
        if (auto p = std::get_if<Point>(&o))
            return p->prefix(n);
        return std::get<Prefix>(o).take(n);
    }

    auto same(const EvalOutcome & a, const EvalOutcome & b) -> bool
    {
        return a.status == b.status && a.value == b.value && a.use == b.use && a.steps == b.steps;
    }
}

auto wred::check_contract(const Functional & f, const vector<Oracle> & oracles, Pos x, Pos fuel) -> EvalOutcome
{
    auto r = evaluate(f, oracles, x, fuel);
    if (! same(r, evaluate(f, oracles, x, fuel)))
        throw ContractError("'" + f.label + "' is not fuel-deterministic at " + to_string(x));
    if (! r.converged())
        return r;

    for (Pos y = 0 ; y < x ; ++y)
        if (! evaluate(f, oracles, y, fuel).converged())
            throw ContractError("'" + f.label + "' converges at " + to_string(x) + " but not at " + to_string(y)
                    + " within fuel " + to_string(fuel));

    vector<Oracle> cut;
    for (std::size_t i = 0 ; i < oracles.size() ; ++i)
        cut.push_back(truncate(oracles[i], r.use[i]));
    auto again = evaluate(f, cut, x, fuel);
    if (! again.converged() || again.value != r.value || again.use != r.use)
        throw ContractError("'" + f.label + "' at " + to_string(x) + " depends on oracle bits beyond its reported use");
    return r;
}

Monitor::Monitor(Functional f) :
    _f(std::move(f))
{
}

auto Monitor::evaluate(const vector<Oracle> & oracles, Pos x, Pos fuel) -> EvalOutcome
{
    ++_checked;
    return check_contract(_f, oracles, x, fuel);
}

auto Monitor::checked() const -> std::uint64_t
{
    return _checked;
}

auto Monitor::functional() const -> const Functional &
{
    return _f;
}

auto wred::binomial(std::uint64_t n, std::uint64_t k) -> std::uint64_t
{
    if (k > n)
        return 0;
    k = min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1 ; i <= k ; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return std::uint64_t(r);
}

auto wred::tuple_rank(const Tuple & xs) -> std::uint64_t
{
    std::uint64_t r = 0;
    for (std::size_t i = 0 ; i < xs.size() ; ++i) {
        if (i > 0 && xs[i] <= xs[i - 1])
            throw InputError("tuple is not strictly increasing");
        r += binomial(xs[i], i + 1);
    }
    return r;
}

auto wred::rank_tuple(std::uint64_t r, std::size_t n) -> Tuple
{
    Tuple xs(n);
    for (std::size_t i = n ; i >= 1 ; --i) {
        // largest x with C(x, i) <= r
        std::uint64_t lo = i - 1, hi = i - 1;
        while (binomial(hi, i) <= r)
            hi = hi * 2 + 1;
        while (hi - lo > 1) {
            auto mid = lo + (hi - lo) / 2;
            if (binomial(mid, i) <= r)
                lo = mid;
            else
                hi = mid;
        }
        xs[i - 1] = lo;
        r -= binomial(lo, i);
    }
    return xs;
}

auto wred::cantor_pair(std::uint64_t a, std::uint64_t b) -> std::uint64_t
{
    auto s = a + b;
    return s * (s + 1) / 2 + b;
}

auto wred::cantor_unpair(std::uint64_t z) -> pair<std::uint64_t, std::uint64_t>
{
    auto w = std::uint64_t((std::sqrt(8.0L * z + 1) - 1) / 2);
    while (w * (w + 1) / 2 > z)
        --w;
    while ((w + 1) * (w + 2) / 2 <= z)
        ++w;
    auto b = z - w * (w + 1) / 2;
    return {w - b, b};
}

auto wred::interleave(const Point & a, const Point & b) -> Point
{
    return Point{"<" + a.name() + "," + b.name() + ">", [a, b] (Pos i) {
        return i % 2 == 0 ? a.at(i / 2) : b.at(i / 2);
    }};
}

auto wred::even_bits(const Point & a) -> Point
{
    return Point{"even(" + a.name() + ")", [a] (Pos i) { return a.at(2 * i); }};
}

auto wred::odd_bits(const Point & a) -> Point
{
    return Point{"odd(" + a.name() + ")", [a] (Pos i) { return a.at(2 * i + 1); }};
}

auto wred::column(const Point & a, std::uint64_t i) -> Point
{
    return Point{a.name() + "[" + to_string(i) + "]", [a, i] (Pos x) { return a.at(cantor_pair(i, x)); }};
}

auto wred::family(function<Point (std::uint64_t)> columns, const string & name) -> Point
{
    auto cache = make_shared<unordered_map<std::uint64_t, Point>>();
    auto mutex = make_shared<shared_mutex>();
    return Point{name, [columns, cache, mutex] (Pos z) {
        auto [i, x] = cantor_unpair(z);
        {
            shared_lock lock(*mutex);
            auto it = cache->find(i);
            if (it != cache->end())
                return it->second.at(x);
        }
        auto p = columns(i);
        {
            unique_lock lock(*mutex);
            cache->emplace(i, p);
        }
        return p.at(x);
    }};
}

auto wred::even_part(const Prefix & p) -> Prefix
{
    Prefix r;
    for (Pos i = 0 ; i < p.length() ; i += 2)
        r.push_back(p.at(i));
    return r;
}

auto wred::odd_part(const Prefix & p) -> Prefix
{
    Prefix r;
    for (Pos i = 1 ; i < p.length() ; i += 2)
        r.push_back(p.at(i));
    return r;
}
