#include <wred/catalog.hh>
#include <wred/error.hh>

#include <algorithm>
#include <map>
#include <set>

using namespace wred;

using std::function;
using std::map;
using std::nullopt;
using std::optional;
using std::set;
using std::string;
using std::to_string;
using std::vector;

Extendibility::Extendibility(function<bool (const Prefix &)> member, Pos horizon) :
    _member(std::move(member)),
    _horizon(horizon)
{
}

auto Extendibility::reach(const Prefix & rho, Pos cap) const -> Pos
{
    if (! _member(rho))
        return rho.length();
    // past the horizon everything counts as extendible
    Pos goal = std::min(cap, std::max(_horizon, rho.length()));
    Pos best = rho.length();
    function<bool (Prefix &)> dfs = [&] (Prefix & s) -> bool {
        best = std::max(best, s.length());
        if (s.length() >= goal)
            return true;
        for (int b = 0 ; b < 2 ; ++b) {
            s.push_back(b);
            bool done = _member(s) && dfs(s);
            auto bits = s.bits();
            bits.pop_back();
            s = Prefix{std::move(bits)};
            if (done)
                return true;
        }
        return false;
    };
    auto s = rho;
    if (dfs(s))
        return cap;
    return best;
}

auto Extendibility::operator() (const Prefix & rho, Pos k) const -> bool
{
    return k <= std::max(rho.length(), reach(rho, k));
}

auto wred::seqwwkl_member(const Extendibility & ext, const Prefix & sigma, const Prefix & tau) -> bool
{
    if (tau.length() == 0)
        return true;
    auto l = tau.length();
    int b = tau.at(0);
    auto mine = sigma, other = sigma;
    mine.push_back(b);
    other.push_back(1 - b);
    // Ext(rho, k) holds exactly for k <= reach
    auto rm = ext.reach(mine, l), ro = ext.reach(other, l);
    if (l <= rm)
        return true;
    // some k < l with Ext on this side only
    if (ro < std::min(rm, l - 1))
        return true;
    // both sides stop at the same k < l
    return rm == ro && rm < l;
}

auto wred::seqwwkl_tree(const TreeByRule & s, const Prefix & sigma, Pos horizon) -> TreeByRule
{
    Extendibility ext(s.member, horizon);
    return TreeByRule{[ext, sigma] (const Prefix & tau) { return seqwwkl_member(ext, sigma, tau); }, Rational(1, 2),
        "T_" + sigma.to_string() + "(" + s.name + ")"};
}

auto wred::wkl_from_seqwwkl(const TreeByRule & s, Pos horizon) -> function<TreeByRule (std::uint64_t)>
{
    return [s, horizon] (std::uint64_t i) { return seqwwkl_tree(s, index_string(i), horizon); };
}

auto wred::assemble_path(const function<Point (const Prefix &)> & b, const function<TreeByRule (const Prefix &)> & t,
        Pos depth) -> Prefix
{
    Prefix c;
    for (Pos n = 0 ; n < depth ; ++n) {
        auto bs = b(c);
        auto v = verify_path_at(t(c), bs, depth);
        if (! v.ok())
            throw ContractError("B_" + c.to_string() + " is not a path of T_" + c.to_string() + ": " + v.detail);
        c.push_back(bs.at(0));
    }
    return c;
}

auto wred::wkl_seqwwkl_witness(Pos horizon) -> Witness
{
    Witness w;
    w.id = "wkl-seqwwkl";
    w.source = wkl();
    w.target = seq(wwkl(Rational(1, 2)));
    w.forward = Functional{1, [horizon] (Query & q, Pos z) {
        auto [i, p] = cantor_unpair(z);
        Extendibility ext(tree_from_tape(q.tape(0)), horizon);
        return seqwwkl_member(ext, index_string(i), index_string(p)) ? 1 : 0;
    }, "<T_sigma>"};
    // C(n) = B_{C|n}(0)
    w.backward = Functional{1, [] (Query & q, Pos n) {
        Prefix c;
        for (Pos m = 0 ; ; ++m) {
            int b = q.bit(0, cantor_pair(string_index(c), 0));
            if (m == n)
                return b;
            c.push_back(b);
        }
    }, "C(n)=B_{C|n}(0)"};
    return w;
}

// blow-up

namespace
{
    auto strip(const vector<Prefix> & sigmas, const Prefix & s) -> Prefix
    {
        for (auto & g : sigmas)
            if (g.length() <= s.length() && s.take(g.length()) == g) {
                vector<std::uint8_t> rest(s.bits().begin() + g.length(), s.bits().end());
                return Prefix{std::move(rest)};
            }
        return s;
    }
}

auto BlowupStep::map_string(const Prefix & s) const -> Prefix
{
    return strip(sigmas, s);
}

auto Blowup::map_string(const Prefix & s) const -> Prefix
{
    auto r = s;
    for (auto i = steps.size() ; i-- > 0 ; )
        r = steps[i].map_string(r);
    return r;
}

auto wred::blowup_once(const TreeByRule & t, const Rational & p, const Rational & eps, Pos depth) -> BlowupStep
{
    if (p <= 0 || p >= 1)
        throw InputError("blow-up needs 0 < p < 1");
    Rational one(1);
    // 1 - delta p = (1 + eps)(1 - p)
    Rational delta = one - eps * (one - p) / p;
    if (delta <= 0)
        throw InputError("eps " + to_string(eps) + " is too large for p = " + to_string(p));
    Rational goal = delta * (one - p);
    BlowupStep st;
    st.p = p;
    st.bound = (one + eps) * (one - p) * (one - p);
    Rational got(0);
    // minimal strings outside T, shortest first
    vector<Prefix> level{Prefix{}};
    for (Pos l = 1 ; l <= depth && got < goal ; ++l) {
        vector<Prefix> next;
        for (auto & s : level)
            for (int b = 0 ; b < 2 && got < goal ; ++b) {
                auto u = s;
                u.push_back(b);
                if (t.contains(u))
                    next.push_back(u);
                else {
                    st.sigmas.push_back(u);
                    got += pow2_inverse(l);
                }
            }
        level = std::move(next);
    }
    if (got < goal)
        throw ResourceError("minimal strings outside " + t.name + " reach only " + to_string(got) + " of "
                + to_string(goal) + " by depth " + to_string(depth));
    auto sigmas = st.sigmas;
    st.tree = TreeByRule{[t, sigmas] (const Prefix & s) {
        if (t.contains(s))
            return true;
        for (auto & g : sigmas)
            if (g.length() <= s.length() && s.take(g.length()) == g)
                return t.contains(strip({g}, s));
        return false;
    }, nullopt, "blowup(" + t.name + ")"};
    return st;
}

auto wred::blowup_iterates(const Rational & p, const Rational & q, const Rational & eps) -> std::size_t
{
    Rational one(1);
    Rational c = one - p;
    std::size_t n = 0;
    while (c >= one - q) {
        Rational next = (one + eps) * c * c;
        if (next >= c)
            throw InputError("complement bound does not shrink from " + to_string(c));
        c = next;
        ++n;
    }
    return n;
}

auto wred::blowup_tree(const TreeByRule & t, const Rational & p, const Rational & q, Pos depth, const Rational & eps) -> Blowup
{
    Blowup b;
    b.tree = t;
    if (p < q) {
        auto n = blowup_iterates(p, q, eps);
        Rational pc = p;
        for (std::size_t i = 0 ; i < n ; ++i) {
            auto st = blowup_once(b.tree, pc, eps, depth);
            pc = Rational(1) - st.bound;
            b.tree = st.tree;
            b.steps.push_back(st);
            if (measure_at_level(b.tree, depth) >= q)
                break;
        }
    }
    auto steps = b.steps;
    b.path_map = Functional{1, [steps] (Query & q, Pos x) {
        Pos off = 0;
        for (auto i = steps.size() ; i-- > 0 ; )
            for (auto & g : steps[i].sigmas) {
                bool match = true;
                for (Pos j = 0 ; j < g.length() && match ; ++j)
                    match = q.bit(0, off + j) == g.at(j);
                if (match) {
                    off += g.length();
                    break;
                }
            }
        return q.bit(0, off + x);
    }, "strip sigma"};
    return b;
}

// thin-set extractions

auto wred::tuple_color(const vector<std::uint64_t> & parts, std::uint64_t k) -> std::uint64_t
{
    std::uint64_t c = 0, w = 1;
    for (auto a : parts) {
        c += a * w;
        w *= k;
    }
    return c;
}

namespace
{
    auto ipow(std::uint64_t b, std::size_t e) -> std::uint64_t
    {
        std::uint64_t r = 1;
        while (e--)
            r *= b;
        return r;
    }

    auto digits(std::uint64_t c, std::uint64_t k, std::size_t n) -> vector<std::uint64_t>
    {
        vector<std::uint64_t> ds;
        for (std::size_t i = 0 ; i < n ; ++i) {
            ds.push_back(c % k);
            c /= k;
        }
        return ds;
    }

    auto with_head(Pos x, const Tuple & y) -> Tuple
    {
        Tuple t{x};
        t.insert(t.end(), y.begin(), y.end());
        return t;
    }

    // witnesses y_0 < .. < y_i above x in s with f(x, y_j) = a_j; each block ends as early as possible
    auto realize(const Coloring & f, Pos x, const vector<std::uint64_t> & a, long i, const vector<Pos> & s)
        -> optional<vector<Tuple>>
    {
        std::size_t m = f.arity - 1;
        vector<Tuple> ws;
        Pos lo = x;
        for (long j = 0 ; j <= i ; ++j) {
            vector<Pos> above;
            for (auto y : s)
                if (y > lo)
                    above.push_back(y);
            optional<Tuple> best;
            for_each_subset(above, m, [&] (const Tuple & y) {
                if (f(with_head(x, y)) == a[j] && (! best || y.back() < best->back()))
                    best = y;
                return true;
            });
            if (! best)
                return nullopt;
            ws.push_back(*best);
            lo = best->back();
        }
        return ws;
    }

    auto check_avoids(const Coloring & f, const vector<Pos> & s, std::uint64_t c) -> Verdict
    {
        optional<Tuple> bad;
        for_each_subset(s, f.arity, [&] (const Tuple & t) {
            if (f(t) == c) {
                bad = t;
                return false;
            }
            return true;
        });
        if (bad)
            return Verdict::fail(format_tuple(*bad) + " has colour " + to_string(c));
        return Verdict::pass(format_set(s) + " omits " + to_string(c));
    }

    auto check_homogeneous(const Coloring & f, const vector<Pos> & s) -> Verdict
    {
        return verify_homogeneous_at(f, Point::from_set(s), s.empty() ? 0 : s.back() + 1, 0);
    }
}

auto wred::ts_step(std::size_t m, std::size_t n, std::uint64_t k, const Coloring & f) -> Coloring
{
    if (f.arity != m + 1)
        throw InputError("step expects a colouring of arity m+1");
    if (n == 0)
        throw InputError("step needs n >= 1");
    return Coloring{m * n + 1, ipow(k, n), [f, m, n, k] (const Tuple & t) {
        vector<std::uint64_t> parts;
        for (std::size_t i = 0 ; i < n ; ++i)
            parts.push_back(f(with_head(t[0], Tuple(t.begin() + 1 + i * m, t.begin() + 1 + (i + 1) * m))));
        return tuple_color(parts, k);
    }, "step(" + f.name + ")"};
}

auto wred::ts_step_extract(const Coloring & f, std::size_t n, std::uint64_t k, const vector<Pos> & h,
        std::uint64_t avoided, Pos horizon, std::uint64_t threshold) -> Extraction
{
    Extraction r;
    auto a = digits(avoided, k, n);
    vector<Pos> hs;
    for (auto x : h)
        if (x < horizon)
            hs.push_back(x);
    if (n == 1) {
        r.set = hs;
        r.color = a[0];
        r.verdict = check_avoids(f, hs, a[0]);
        return r;
    }
    auto count = [&] (long i, const vector<Pos> & s) {
        std::uint64_t c = 0;
        for (auto x : s)
            if (realize(f, x, a, i, s))
                ++c;
        return c;
    };
    if (count(long(n) - 1, hs) > 0) {
        r.verdict = Verdict::fail("the set realizes the avoided colour " + to_string(avoided));
        return r;
    }
    long level = -1;
    for (long i = long(n) - 2 ; i >= 0 ; --i)
        if (count(i, hs) >= threshold) {
            level = i;
            break;
        }
    r.note = "greatest level " + to_string(level) + " at threshold " + to_string(threshold);
    // drop the finitely many x realizing the next level
    vector<Pos> hp;
    for (auto x : hs)
        if (! realize(f, x, a, level + 1, hs))
            hp.push_back(x);
    if (level < 0)
        r.set = hp;
    else {
        optional<Pos> lo;
        for (auto x : hp) {
            if (lo && x <= *lo)
                continue;
            auto ws = realize(f, x, a, level, hp);
            if (! ws)
                continue;
            r.set.push_back(x);
            lo = ws->back().back();
        }
    }
    r.color = a[level + 1];
    auto v = check_avoids(f, r.set, r.color);
    if (v.ok() && r.set.size() < f.arity)
        v = Verdict::inconclusive("extracted set " + format_set(r.set) + " is too small to say anything");
    v.detail += "; " + r.note;
    r.verdict = v;
    return r;
}

auto wred::ts_aca_coloring(std::size_t n, const function<std::uint64_t (std::uint64_t)> & f) -> Coloring
{
    return Coloring{n + 2, ipow(2, n), [n, f] (const Tuple & t) {
        std::uint64_t c = 0;
        for (std::size_t i = 0 ; i < n ; ++i)
            for (Pos z = t[i] + 1 ; z < t[i + 1] ; ++z)
                if (f(z) < t[0]) {
                    c |= std::uint64_t(1) << i;
                    break;
                }
        return c;
    }, "aca"};
}

namespace
{
    auto aca_tuple(const Coloring & g, const vector<Pos> & h, std::uint64_t b, std::size_t m, Pos y) -> optional<Tuple>
    {
        vector<Pos> above;
        for (auto x : h)
            if (x > y)
                above.push_back(x);
        std::uint64_t mask = (std::uint64_t(1) << m) - 1;
        optional<Tuple> found;
        for_each_subset(above, g.arity, [&] (const Tuple & t) {
            if ((g(t) & mask) == (b & mask)) {
                found = t;
                return false;
            }
            return true;
        });
        return found;
    }
}

auto wred::ts_aca_index(const Coloring & g, const vector<Pos> & h, std::uint64_t b, Pos y) -> optional<std::size_t>
{
    std::size_t n = g.arity - 2;
    for (std::size_t m = n ; m-- > 0 ; )
        if (aca_tuple(g, h, b, m, y))
            return m;
    return nullopt;
}

auto wred::ts_aca_range_query(const function<std::uint64_t (std::uint64_t)> & f, const Coloring & g,
        const vector<Pos> & h, std::uint64_t b, std::size_t m, Pos y) -> optional<bool>
{
    auto t = aca_tuple(g, h, b, m, y);
    if (! t)
        return nullopt;
    for (Pos z = 0 ; z <= (*t)[m] ; ++z)
        if (f(z) == y)
            return true;
    return false;
}

auto wred::ts_pigeonhole(const Coloring & f) -> Coloring
{
    if (f.arity != 1)
        throw InputError("pigeonhole colouring expects a colouring of singletons");
    return Coloring{2, 3, [f] (const Tuple & t) -> std::uint64_t {
        auto a = f({t[0]}), b = f({t[1]});
        return a == b ? 0 : a > b ? 1 : 2;
    }, "cmp(" + f.name + ")"};
}

auto wred::ts_pigeonhole_extract(const Coloring & f, const vector<Pos> & h, std::uint64_t c, Pos horizon) -> Extraction
{
    Extraction r;
    if (c == 0) {
        r.verdict = Verdict::fail("colour 0 cannot be omitted: f would be injective on an infinite set with finitely many values");
        return r;
    }
    if (c > 2) {
        r.verdict = Verdict::fail("no colour " + to_string(c));
        return r;
    }
    if (h.empty()) {
        r.verdict = Verdict::inconclusive("empty set");
        return r;
    }
    auto v = check_avoids(ts_pigeonhole(f), h, c);
    if (! v.ok()) {
        r.verdict = v;
        return r;
    }
    // monotone on h, so the value at the last element is where it settles
    r.color = f({h.back()});
    for (Pos x = 0 ; x < horizon ; ++x)
        if (f({x}) == r.color)
            r.set.push_back(x);
    r.verdict = check_homogeneous(f, r.set);
    r.note = (c == 1 ? "non-decreasing" : "non-increasing") + string(", settles at ") + to_string(r.color);
    return r;
}

auto wred::ts33_first(const Coloring & f) -> Coloring
{
    return Coloring{3, 3, [f] (const Tuple & t) -> std::uint64_t {
        set<std::uint64_t> cs{f({t[0], t[1]}), f({t[0], t[2]}), f({t[1], t[2]})};
        return cs.size() - 1;
    }, "g(" + f.name + ")"};
}

auto wred::ts33_second(const Coloring & f) -> Coloring
{
    // 4 marks a triangle with three colours, outside the domain of the cases
    return Coloring{3, 5, [f] (const Tuple & t) -> std::uint64_t {
        auto xy = f({t[0], t[1]}), xz = f({t[0], t[2]}), yz = f({t[1], t[2]});
        if (yz == xy && xy == xz)
            return 0;
        if (xy == xz)
            return 1;
        if (xy == yz)
            return 2;
        if (xz == yz)
            return 3;
        return 4;
    }, "h(" + f.name + ")"};
}

namespace
{
    // largest set found by growing the size until the search gives out
    template <typename Search>
    auto largest(Pos horizon, std::uint64_t node_limit, Search search) -> optional<SearchResult>
    {
        optional<SearchResult> best;
        for (Pos size = 1 ; size <= horizon ; ++size) {
            SearchBudget b;
            b.horizon = horizon;
            b.size = size;
            b.node_limit = node_limit;
            auto r = search(b);
            if (! r.set)
                break;
            best = r;
        }
        return best;
    }

    auto restrict(const Coloring & f, const vector<Pos> & h) -> Coloring
    {
        return Coloring{f.arity, f.colors, [f, h] (const Tuple & t) {
            Tuple u;
            for (auto i : t)
                u.push_back(h[i]);
            return f(u);
        }, f.name + "|H"};
    }

    auto lift(const vector<Pos> & idx, const vector<Pos> & h) -> vector<Pos>
    {
        vector<Pos> r;
        for (auto i : idx)
            r.push_back(h[i]);
        return r;
    }

    auto absent(const Coloring & f, const vector<Pos> & s, std::uint64_t k) -> set<std::uint64_t>
    {
        set<std::uint64_t> seen;
        for_each_subset(s, f.arity, [&] (const Tuple & t) {
            seen.insert(f(t));
            return true;
        });
        set<std::uint64_t> r;
        for (std::uint64_t c = 0 ; c < k ; ++c)
            if (! seen.count(c))
                r.insert(c);
        return r;
    }

    // split the points above a pivot x by their colour with x; the largest bucket over all pivots
    auto split_first(const Coloring & f, const vector<Pos> & s, Pipeline & pl) -> Extraction
    {
        Extraction r;
        Pos pivot = s.empty() ? 0 : s[0];
        for (std::size_t p = 0 ; p + 1 < s.size() ; ++p) {
            map<std::uint64_t, vector<Pos>> buckets;
            for (std::size_t i = p + 1 ; i < s.size() ; ++i)
                buckets[f({s[p], s[i]})].push_back(s[i]);
            for (auto & [c, b] : buckets)
                if (b.size() > r.set.size()) {
                    r.set = b;
                    r.color = c;
                    pivot = s[p];
                }
        }
        pl.stages.push_back("split by f(" + to_string(pivot) + ",-): colour " + to_string(r.color) + " bucket " + format_set(r.set));
        return r;
    }

    // smallest k with every k-colouring of pairs on that many points having a monochromatic triangle
    auto triangle_bound(std::uint64_t k) -> Pos
    {
        return k <= 1 ? 3 : k == 2 ? 6 : k == 3 ? 17 : Pos(-1);
    }
}

auto wred::ts33_pipeline(const Coloring & f, Pos horizon, std::uint64_t node_limit) -> Pipeline
{
    if (f.arity != 2 || ! f.colors)
        throw InputError("the TS33 pipeline takes a finite colouring of pairs");
    Pipeline pl;
    auto g = ts33_first(f);
    // colour 0 cannot be omitted on an infinite set, so look for the other two first
    optional<SearchResult> hr;
    for (std::uint64_t c : {1, 2}) {
        auto r = largest(horizon, node_limit, [&] (const SearchBudget & b) { return find_avoiding(g, {c}, b); });
        if (r && (! hr || r->set->size() > hr->set->size()))
            hr = r;
    }
    if (! hr || hr->set->size() < 3)
        hr = largest(horizon, node_limit, [&] (const SearchBudget & b) { return find_thin(g, b); });
    if (! hr || hr->set->size() < 3) {
        pl.result.verdict = Verdict::inconclusive("no thin set for g with a triple");
        return pl;
    }
    auto h = *hr->set;
    auto miss = absent(g, h, 3);
    pl.stages.push_back("H = " + format_set(h) + " thin for g");
    auto k = *f.colors;
    Extraction r;
    if (miss.count(1))
        r = split_first(f, h, pl);
    else if (miss.count(2)) {
        auto hh = restrict(ts33_second(f), h);
        optional<vector<Pos>> g_best;
        vector<std::uint64_t> g_pair;
        for (auto pair : vector<vector<std::uint64_t>>{{1, 2}, {1, 3}, {2, 3}}) {
            auto gr = largest(h.size(), node_limit, [&] (const SearchBudget & b) { return find_avoiding(hh, pair, b); });
            if (gr && (! g_best || gr->set->size() > g_best->size())) {
                g_best = lift(*gr->set, h);
                g_pair = pair;
            }
        }
        if (! g_best) {
            pl.result.verdict = Verdict::inconclusive("no set omits two colours of h");
            return pl;
        }
        auto gs = *g_best;
        pl.stages.push_back("G = " + format_set(gs) + " omits h-colours " + to_string(g_pair[0]) + "," + to_string(g_pair[1]));
        if (g_pair[0] == 1)
            r = split_first(f, gs, pl);
        else {
            // min-homogeneous: fbar(x) = f(x, y) for any later y
            map<std::uint64_t, vector<Pos>> buckets;
            for (std::size_t i = 0 ; i + 1 < gs.size() ; ++i)
                buckets[f({gs[i], gs[i + 1]})].push_back(gs[i]);
            for (auto & [c, b] : buckets)
                if (b.size() > r.set.size()) {
                    r.set = b;
                    r.color = c;
                }
            pl.stages.push_back("fbar bucket " + to_string(r.color) + ": " + format_set(r.set));
        }
    }
    else {
        if (h.size() >= triangle_bound(k))
            throw ContractError("H = " + format_set(h) + " claims to omit g-colour 0, but it is large enough to hold a monochromatic triangle");
        pl.result.verdict = Verdict::inconclusive("H omits only colour 0 and is too small to refute");
        return pl;
    }
    r.verdict = check_homogeneous(f, r.set);
    pl.result = r;
    return pl;
}

auto wred::cube_index(int a, int b, int c) -> std::uint64_t
{
    return 4 * a + 2 * b + c;
}

auto wred::cube_merge_table(CubeMerge m) -> vector<std::uint64_t>
{
    vector<std::uint64_t> to(8);
    for (std::uint64_t i = 0 ; i < 8 ; ++i)
        to[i] = i;
    if (m == CubeMerge::TransitivePair)
        to[cube_index(1, 0, 1)] = cube_index(0, 1, 0);
    else if (m == CubeMerge::HereditaryPairs) {
        to[cube_index(1, 1, 0)] = cube_index(0, 1, 0);
        to[cube_index(1, 0, 1)] = cube_index(0, 0, 1);
    }
    // renumber by first appearance
    map<std::uint64_t, std::uint64_t> names;
    for (auto & t : to) {
        auto it = names.find(t);
        if (it == names.end())
            it = names.emplace(t, names.size()).first;
        t = it->second;
    }
    return to;
}

auto wred::cube_colors(CubeMerge m) -> std::uint64_t
{
    auto t = cube_merge_table(m);
    return *std::max_element(t.begin(), t.end()) + 1;
}

auto wred::ts3_cube_coloring(const Coloring & f, CubeMerge m) -> Coloring
{
    if (f.arity != 2 || f.colors != Colors(2))
        throw InputError("cube colourings take a 2-colouring of pairs");
    auto table = cube_merge_table(m);
    return Coloring{3, cube_colors(m), [f, table] (const Tuple & t) {
        return table[cube_index(int(f({t[1], t[2]})), int(f({t[0], t[2]})), int(f({t[0], t[1]})))];
    }, "cube(" + f.name + ")"};
}

auto wred::cube_dispatch(CubeMerge m, std::uint64_t avoided) -> Dispatch
{
    auto table = cube_merge_table(m);
    set<std::uint64_t> cs;
    for (std::uint64_t i = 0 ; i < 8 ; ++i)
        if (table[i] == avoided)
            cs.insert(i);
    if (cs.empty())
        throw InputError("no merged cube colour " + to_string(avoided));
    auto has = [&] (int a, int b, int c) { return cs.count(cube_index(a, b, c)) > 0; };
    if (has(0, 0, 1) || has(1, 1, 0))
        return {"SHER", Structure::SemiHereditary, std::uint64_t(has(0, 0, 1) ? 0 : 1)};
    if (has(0, 1, 0) && has(1, 0, 1))
        return {"ADS", Structure::Transitive, 0};
    if (has(0, 1, 0) || has(1, 0, 1))
        return {"CAC", Structure::SemiTransitive, std::uint64_t(has(0, 1, 0) ? 0 : 1)};
    return {"STRIV", Structure::SemiTrivial, std::uint64_t(has(0, 0, 0) || has(1, 0, 0) ? 0 : 1)};
}

auto wred::ts3_cube_pipeline(const Coloring & f, CubeMerge m, Pos horizon, std::uint64_t node_limit) -> Pipeline
{
    Pipeline pl;
    auto g = ts3_cube_coloring(f, m);
    auto hr = largest(horizon, node_limit, [&] (const SearchBudget & b) { return find_thin(g, b); });
    if (! hr || hr->set->size() < 3) {
        pl.result.verdict = Verdict::inconclusive("no thin set for the cube colouring with a triple");
        return pl;
    }
    auto h = *hr->set;
    auto d = cube_dispatch(m, *hr->omitted);
    pl.stages.push_back("H = " + format_set(h) + " omits cube colour " + to_string(*hr->omitted) + " -> " + d.problem);
    auto sv = structural_check(f, h, d.structure);
    if (! sv.verdict.ok())
        throw ContractError(string("f restricted to H is not ") + structure_name(d.structure) + ": " + sv.verdict.detail);
    pl.stages.push_back(string(structure_name(d.structure)) + " on H");
    auto fh = restrict(f, h);
    auto sol = largest(h.size(), node_limit, [&] (const SearchBudget & b) { return find_homogeneous(fh, b); });
    Extraction r;
    if (sol) {
        r.set = lift(*sol->set, h);
        if (r.set.size() >= 2)
            r.color = f({r.set[0], r.set[1]});
    }
    pl.stages.push_back(d.problem + " solution " + format_set(r.set));
    r.verdict = check_homogeneous(f, r.set);
    pl.result = r;
    return pl;
}
