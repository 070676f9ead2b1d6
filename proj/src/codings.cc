#include <wred/codings.hh>
#include <wred/error.hh>

#include <algorithm>
#include <set>

using namespace wred;

using std::function;
using std::nullopt;
using std::optional;
using std::set;
using std::string;
using std::to_string;
using std::vector;

namespace
{
    auto domain_bound(const BoundedPredicate & phi, std::size_t j) -> Pos
    {
        return phi.domain << (2 * j);
    }

    // the formula from quantifier xs.size() on, quantifier j bounded by bound(j)
    auto eval(const BoundedPredicate & phi, std::uint64_t i, Tuple & xs, const function<Pos (std::size_t)> & bound) -> bool
    {
        auto j = xs.size();
        if (j == phi.n)
            return phi.rule(i, xs) == 1;
        bool exists = quantifier_is_exists(phi.n, j);
        for (Pos x = 0 ; x < bound(j) ; ++x) {
            xs.push_back(x);
            bool v = eval(phi, i, xs, bound);
            xs.pop_back();
            if (v == exists)
                return exists;
        }
        return ! exists;
    }

    auto sorted(vector<Pos> xs) -> vector<Pos>
    {
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        return xs;
    }

    auto least_above(const vector<Pos> & h, Pos lo, bool strict) -> optional<Pos>
    {
        for (auto z : h)
            if (strict ? z > lo : z >= lo)
                return z;
        return nullopt;
    }

    auto colors_on(const Coloring & f, const vector<Pos> & h) -> set<std::uint64_t>
    {
        set<std::uint64_t> out;
        for_each_subset(h, f.arity, [&] (const Tuple & t) {
            out.insert(f(t));
            return true;
        });
        return out;
    }

    auto format_colors(const set<std::uint64_t> & cs) -> string
    {
        string s = "{";
        for (auto c : cs)
            s += (s.size() > 1 ? "," : "") + to_string(c);
        return s + "}";
    }
}

auto wred::quantifier_is_exists(std::size_t n, std::size_t j) -> bool
{
    return (n - 1 - j) % 2 == 0;
}

auto wred::bounded_truth(const BoundedPredicate & phi, std::uint64_t i) -> bool
{
    Tuple xs;
    return eval(phi, i, xs, [&] (std::size_t j) { return domain_bound(phi, j); });
}

auto wred::audit_predicate(const BoundedPredicate & phi, std::uint64_t below) -> Verdict
{
    if (phi.n == 0 || ! phi.rule)
        throw InputError("predicate '" + phi.name + "' needs a rule and n >= 1");
    if (! phi.truth)
        return Verdict::inconclusive("no declared ground truth");
    for (std::uint64_t i = 0 ; i < below ; ++i)
        if (bounded_truth(phi, i) != phi.truth(i))
            return Verdict::fail("declared truth of '" + phi.name + "' disagrees at i = " + to_string(i));
    return Verdict::pass();
}

auto wred::skolem(const BoundedPredicate & phi, std::uint64_t i, bool side, const Tuple & earlier) -> optional<Pos>
{
    auto j = earlier.size();
    if (j >= phi.n || quantifier_is_exists(phi.n, j) != side)
        throw InputError("quantifier " + to_string(j) + " is not a witness of this side");
    auto bound = [&] (std::size_t m) { return domain_bound(phi, m); };
    Tuple xs = earlier;
    for (Pos x = 0 ; x < bound(j) ; ++x) {
        xs.push_back(x);
        bool v = eval(phi, i, xs, bound);
        xs.pop_back();
        if (v == side)
            return x;
    }
    return nullopt;
}

JumpColoring::JumpColoring(BoundedPredicate phi) :
    _phi(std::move(phi))
{
    if (_phi.n == 0 || ! _phi.rule)
        throw InputError("predicate needs a rule and n >= 1");
}

auto JumpColoring::predicate() const -> const BoundedPredicate &
{
    return _phi;
}

auto JumpColoring::value(std::uint64_t i, const Tuple & ys) const -> std::uint64_t
{
    if (ys.size() != _phi.n)
        throw InputError("tuple size does not match n");
    Tuple xs;
    return eval(_phi, i, xs, [&] (std::size_t j) { return ys[j]; }) ? 1 : 0;
}

auto JumpColoring::column(std::uint64_t i) const -> Coloring
{
    auto self = *this;
    return Coloring{_phi.n, 2, [self, i] (const Tuple & t) { return self.value(i, t); },
        "jump(" + _phi.name + ")[" + to_string(i) + "]"};
}

auto JumpColoring::point() const -> Point
{
    auto self = *this;
    return family([self] (std::uint64_t i) { return encode_coloring(self.column(i)); }, "jump(" + _phi.name + ")");
}

auto wred::jump_coloring(const BoundedPredicate & phi) -> JumpColoring
{
    return JumpColoring(phi);
}

auto wred::jump_decode(const JumpColoring & f, const vector<vector<Pos>> & hs) -> vector<int>
{
    vector<int> out;
    for (std::uint64_t i = 0 ; i < hs.size() ; ++i) {
        auto h = sorted(hs[i]);
        if (h.size() < f.predicate().n)
            throw InputError("H_" + to_string(i) + " has fewer than n elements");
        auto cs = colors_on(f.column(i), h);
        if (cs.size() != 1)
            throw InputError("H_" + to_string(i) + " is not homogeneous: colours " + format_colors(cs));
        out.push_back(int(*cs.begin()));
    }
    return out;
}

auto wred::jump_certificate(const JumpColoring & f, std::uint64_t i, const vector<Pos> & hin) -> JumpCertificate
{
    auto & phi = f.predicate();
    auto h = sorted(hin);
    JumpCertificate c;
    c.truth = phi.truth ? phi.truth(i) : bounded_truth(phi, i);
    bool side = c.truth;
    bool missing = false;

    // largest Skolem value at quantifier j over every choice of the other side's
    // variables below the z's so far
    function<void (Tuple &, std::size_t, Pos &)> sweep = [&] (Tuple & xs, std::size_t j, Pos & top) {
        auto m = xs.size();
        if (m == j) {
            if (auto w = skolem(phi, i, side, xs))
                top = std::max(top, *w);
            else
                missing = true;
            return;
        }
        if (quantifier_is_exists(phi.n, m) == side) {
            auto w = skolem(phi, i, side, xs);
            if (! w) {
                missing = true;
                return;
            }
            xs.push_back(*w);
            sweep(xs, j, top);
            xs.pop_back();
            return;
        }
        for (Pos x = 0 ; x < c.z[m] ; ++x) {
            xs.push_back(x);
            sweep(xs, j, top);
            xs.pop_back();
        }
    };

    for (std::size_t j = 0 ; j < phi.n ; ++j) {
        optional<Pos> z;
        optional<Pos> prev = j ? optional<Pos>(c.z[j - 1]) : nullopt;
        if (quantifier_is_exists(phi.n, j) == side) {
            Pos top = 0;
            Tuple xs;
            sweep(xs, j, top);
            if (missing) {
                c.verdict = Verdict::fail("no Skolem witness for quantifier " + to_string(j) + " on the test domain");
                return c;
            }
            Pos lo = prev ? std::max(*prev, top) : top;
            z = least_above(h, lo, true);
        }
        else
            z = prev ? least_above(h, *prev, true) : least_above(h, 0, false);
        if (! z) {
            c.verdict = Verdict::inconclusive("H ends before z_" + to_string(j));
            return c;
        }
        c.z.push_back(*z);
    }

    c.color = f.value(i, c.z);
    if (*c.color == (side ? 1u : 0u))
        c.verdict = Verdict::pass("z = " + format_tuple(c.z) + " has colour " + to_string(*c.color));
    else
        c.verdict = Verdict::fail("z = " + format_tuple(c.z) + " has colour " + to_string(*c.color) + " against the ground truth");
    return c;
}

// Kummer

auto wred::audit_limit(const LimitPredicate & h, std::uint64_t below, Pos horizon) -> Verdict
{
    optional<string> bad;
    for (std::uint64_t i = 0 ; i < below && ! bad ; ++i) {
        int want = h.limit(i) ? 1 : 0;
        function<void (Tuple &)> walk = [&] (Tuple & ys) {
            if (bad)
                return;
            if (ys.size() == h.n) {
                if (h.h(i, ys) != want)
                    bad = "h(" + to_string(i) + ", " + format_tuple(ys) + ") differs from the limit";
                return;
            }
            Pos lo = h.stable(i, ys) + 1;
            if (! ys.empty())
                lo = std::max(lo, ys.back() + 1);
            for (Pos y = lo ; y < horizon ; ++y) {
                ys.push_back(y);
                walk(ys);
                ys.pop_back();
            }
        };
        Tuple ys;
        walk(ys);
    }
    return bad ? Verdict::fail(*bad) : Verdict::pass();
}

KummerColoring::KummerColoring(LimitPredicate h, std::uint64_t k) :
    _h(std::move(h)),
    _k(k)
{
    if (k < 2)
        throw InputError("need k >= 2");
}

auto KummerColoring::k() const -> std::uint64_t
{
    return _k;
}

auto KummerColoring::predicate() const -> const LimitPredicate &
{
    return _h;
}

auto KummerColoring::column(const Tuple & x) const -> Coloring
{
    if (x.size() != _k - 1)
        throw InputError("column index must have k - 1 elements");
    auto h = _h;
    return Coloring{_h.n, _k, [h, x] (const Tuple & ys) {
        std::uint64_t c = 0;
        for (auto i : x)
            c += h.h(i, ys) == 1;
        return c;
    }, "kummer(" + _h.name + ")" + format_tuple(x)};
}

auto KummerColoring::point() const -> Point
{
    auto self = *this;
    return family([self] (std::uint64_t r) { return encode_coloring(self.column(rank_tuple(r, self.k() - 1))); },
        "kummer(" + _h.name + ")");
}

auto wred::kummer_coloring(const LimitPredicate & h, std::uint64_t k) -> KummerColoring
{
    return KummerColoring(h, k);
}

auto wred::kummer_claim_check(const KummerColoring & f, const Tuple & x, const vector<Pos> & hin,
        std::uint64_t omitted) -> KummerClaim
{
    if (omitted >= f.k())
        throw InputError("omitted colour out of range");
    auto & lp = f.predicate();
    auto h = sorted(hin);
    auto col = f.column(x);
    KummerClaim r;
    auto cs = colors_on(col, h);
    r.colors.assign(cs.begin(), cs.end());
    for (auto i : x)
        r.claimed += lp.limit(i) ? 1 : 0;

    if (cs.contains(omitted)) {
        r.verdict = Verdict::fail("H is not thin: it carries the omitted colour " + to_string(omitted));
        return r;
    }

    // s_0 < y_0 < s_1 < y_1 < ...
    for (std::size_t j = 0 ; j < lp.n ; ++j) {
        Pos s = 0;
        function<void (Tuple &)> walk = [&] (Tuple & zs) {
            if (zs.size() == j) {
                for (auto i : x)
                    s = std::max(s, lp.stable(i, zs));
                return;
            }
            for (Pos z = 0 ; z <= r.y[zs.size()] ; ++z) {
                zs.push_back(z);
                walk(zs);
                zs.pop_back();
            }
        };
        Tuple zs;
        walk(zs);
        if (j)
            s = std::max(s, r.y.back());
        r.s.push_back(s);
        auto y = least_above(h, s, true);
        if (! y) {
            r.verdict = Verdict::inconclusive("H is too sparse to host the staircase past " + to_string(s));
            return r;
        }
        r.y.push_back(*y);
    }

    auto c = col(r.y);
    if (c != r.claimed)
        r.verdict = Verdict::fail("f" + format_tuple(x) + format_tuple(r.y) + " = " + to_string(c)
                + " but |x cap D| = " + to_string(r.claimed) + ": declared bounds are wrong");
    else if (cs.size() >= f.k())
        r.verdict = Verdict::fail("colour set on H is all of k");
    else
        r.verdict = Verdict::pass("|x cap D| = " + to_string(r.claimed) + " occurs on H, colours " + format_colors(cs)
                + ", omitted " + to_string(omitted));
    return r;
}

// solvers

auto wred::rrt1_greedy(const Coloring & f, Pos size, Pos horizon) -> ColumnSolution
{
    if (f.arity != 1)
        throw InputError("greedy rainbow solver takes 1-colourings");
    ColumnSolution r;
    set<std::uint64_t> used;
    for (Pos x = 0 ; x < horizon && r.set.size() < size ; ++x)
        if (used.insert(f({x})).second)
            r.set.push_back(x);
    if (r.set.size() < size)
        r.verdict = Verdict::inconclusive("only " + to_string(r.set.size()) + " eligible elements below " + to_string(horizon));
    else
        r.verdict = verify_rainbow_at(f, Point::from_set(r.set), horizon, size);
    return r;
}

auto wred::seq_rrt1_greedy(const vector<Coloring> & fs, Pos size, Pos horizon) -> vector<ColumnSolution>
{
    vector<ColumnSolution> out;
    for (auto & f : fs)
        out.push_back(rrt1_greedy(f, size, horizon));
    return out;
}

auto wred::ts1_omega_column(const Coloring & f, Pos size, Pos horizon) -> ColumnSolution
{
    if (f.arity != 1)
        throw InputError("the solver takes 1-colourings");
    ColumnSolution r;
    bool exhausted = false;
    // the question "is there b > a with f(b) != 0" asked below the horizon
    auto next_nonzero = [&] (optional<Pos> after) -> optional<Pos> {
        for (Pos b = after ? *after + 1 : 0 ; b < horizon ; ++b)
            if (f({b}) != 0)
                return b;
        return nullopt;
    };
    while (r.set.size() < size) {
        optional<Pos> last = r.set.empty() ? nullopt : optional<Pos>(r.set.back());
        if (auto b = next_nonzero(last))
            r.set.push_back(*b);
        else {
            exhausted = true;
            r.set.push_back(last ? *last + 1 : 0);
        }
    }
    set<std::uint64_t> cs;
    for (auto a : r.set)
        cs.insert(f({a}));
    string note = "; the jump is simulated by search below " + to_string(horizon);
    if (! cs.contains(0)) {
        r.omitted = 0;
        r.verdict = Verdict::pass("omits 0" + note);
    }
    else {
        std::uint64_t c = 0;
        while (cs.contains(c))
            ++c;
        r.omitted = c;
        r.verdict = Verdict::pass(string(exhausted ? "nonzero support exhausted, " : "") + "finitely many colours, omits "
                + to_string(c) + note);
    }
    return r;
}

auto wred::seq_ts1_omega_solver(const vector<Coloring> & fs, Pos size, Pos horizon) -> vector<ColumnSolution>
{
    vector<ColumnSolution> out;
    for (auto & f : fs)
        out.push_back(ts1_omega_column(f, size, horizon));
    return out;
}

// limit lift

LimitLift::LimitLift(StableApprox a) :
    _a(std::move(a))
{
    if (_a.k < 2 || _a.n < 1)
        throw InputError("need k >= 2 and n >= 1");
}

auto LimitLift::lifted(std::uint64_t i) const -> Coloring
{
    auto a = _a;
    return Coloring{a.n + 1, a.k, [a, i] (const Tuple & t) {
        Tuple xs(t.begin(), t.end() - 1);
        return a.f(i, xs, t.back()) % a.k;
    }, "lift(" + a.name + ")[" + to_string(i) + "]"};
}

auto LimitLift::limit(std::uint64_t i) const -> Coloring
{
    auto a = _a;
    return Coloring{a.n, a.k, [a, i] (const Tuple & xs) {
        Pos s = std::max(a.stable(i, xs), xs.empty() ? 0 : xs.back() + 1);
        return a.f(i, xs, s) % a.k;
    }, "limit(" + a.name + ")[" + to_string(i) + "]"};
}

auto LimitLift::point() const -> Point
{
    auto self = *this;
    return family([self] (std::uint64_t i) { return encode_coloring(self.lifted(i)); }, "lift(" + _a.name + ")");
}

auto LimitLift::audit(std::uint64_t i, Pos horizon) const -> void
{
    vector<Pos> all;
    for (Pos x = 0 ; x < horizon ; ++x)
        all.push_back(x);
    auto g = limit(i);
    for_each_subset(all, _a.n, [&] (const Tuple & xs) {
        Pos from = std::max(_a.stable(i, xs), xs.back() + 1);
        auto want = g(xs);
        for (Pos s = from ; s < 2 * horizon ; ++s)
            if (_a.f(i, xs, s) % _a.k != want)
                throw InputError("stabilization bound violated at " + format_tuple(xs) + ", s = " + to_string(s));
        return true;
    });
}

auto LimitLift::transfer_check(std::uint64_t i, const vector<Pos> & tin, std::uint64_t c) const -> Verdict
{
    auto t = sorted(tin);
    auto up = lifted(i);
    auto g = limit(i);
    std::uint64_t checked = 0;
    optional<string> bad;
    for_each_subset(t, _a.n, [&] (const Tuple & xs) {
        auto st = std::max(_a.stable(i, xs), xs.back() + 1);
        auto s = least_above(t, st, false);
        if (! s)
            return true;
        auto full = xs;
        full.push_back(*s);
        if (up(full) == c) {
            bad = "T is not thin for the lift at " + format_tuple(full);
            return false;
        }
        if (g(xs) == c) {
            bad = "limit colour at " + format_tuple(xs) + " is the omitted colour";
            return false;
        }
        ++checked;
        return true;
    });
    if (bad)
        return Verdict::fail(*bad);
    if (! checked)
        return Verdict::inconclusive("no tuple of T has a later element past stabilization");
    return Verdict::pass(to_string(checked) + " tuples carried over");
}

auto wred::limit_lift(const StableApprox & a) -> LimitLift
{
    return LimitLift(a);
}
