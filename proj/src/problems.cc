#include <wred/error.hh>
#include <wred/problems.hh>

#include <map>

using namespace wred;

using std::make_shared;
using std::map;
using std::nullopt;
using std::optional;
using std::string;
using std::to_string;
using std::vector;

auto wred::totalize_coloring(const Point & a, std::size_t n, Colors k) -> Coloring
{
    if (n == 0)
        throw InputError("colourings need arity at least 1");
    if (k && *k == 0)
        throw InputError("colourings need at least one colour");
    auto tape = tape_of(a);
    return Coloring{n, k, [tape, n, k] (const Tuple & xs) { return read_color(tape, n, k, xs); },
        "col" + to_string(n) + "_" + colors_name(k) + "(" + a.name() + ")"};
}

auto wred::verify_homogeneous_at(const Coloring & f, const Point & h, Pos n, Pos s) -> Verdict
{
    auto xs = members_below(h, n);
    optional<std::uint64_t> color;
    optional<Tuple> first, clash;
    for_each_subset(xs, f.arity, [&] (const Tuple & t) {
        auto c = f(t);
        if (! color) {
            color = c;
            first = t;
        }
        else if (c != *color) {
            clash = t;
            return false;
        }
        return true;
    });
    if (clash)
        return Verdict::fail(format_tuple(*first) + " has colour " + to_string(*color) + " but " + format_tuple(*clash)
                + " has colour " + to_string(f(*clash)));
    if (xs.size() < s)
        return Verdict::inconclusive("only " + to_string(xs.size()) + " elements below " + to_string(n));
    return Verdict::pass("homogeneous " + format_set(xs));
}

auto wred::verify_thin_at(const Coloring & f, const ThinSolution & sol, Pos n, Pos s) -> Verdict
{
    if (f.colors && sol.omitted >= *f.colors)
        throw InputError("omitted colour " + to_string(sol.omitted) + " out of range for " + to_string(*f.colors) + " colours");
    auto xs = members_below(sol.set, n);
    optional<Tuple> bad;
    for_each_subset(xs, f.arity, [&] (const Tuple & t) {
        if (f(t) == sol.omitted) {
            bad = t;
            return false;
        }
        return true;
    });
    if (bad)
        return Verdict::fail(format_tuple(*bad) + " has the omitted colour " + to_string(sol.omitted));
    if (xs.size() < s)
        return Verdict::inconclusive("only " + to_string(xs.size()) + " elements below " + to_string(n));
    return Verdict::pass("thin " + format_set(xs) + " omitting " + to_string(sol.omitted));
}

auto wred::verify_rainbow_at(const Coloring & f, const Point & s, Pos n, Pos size) -> Verdict
{
    auto xs = members_below(s, n);
    map<std::uint64_t, Tuple> seen;
    optional<string> clash;
    for_each_subset(xs, f.arity, [&] (const Tuple & t) {
        auto c = f(t);
        auto [it, fresh] = seen.emplace(c, t);
        if (! fresh) {
            clash = format_tuple(it->second) + " and " + format_tuple(t) + " share colour " + to_string(c);
            return false;
        }
        return true;
    });
    if (clash)
        return Verdict::fail(*clash);
    if (xs.size() < size)
        return Verdict::inconclusive("only " + to_string(xs.size()) + " elements below " + to_string(n));
    return Verdict::pass("rainbow " + format_set(xs));
}

auto wred::verify_path_at(const TreeByRule & t, const Point & p, Pos depth) -> Verdict
{
    optional<Pos> dead;
    Prefix sigma;
    for (Pos d = 0 ; d <= depth ; ++d) {
        if (d > 0)
            sigma.push_back(p.at(d - 1));
        bool in = t.contains(sigma);
        if (! in && ! dead)
            dead = d;
        else if (in && dead)
            throw ContractError("tree '" + t.name + "' contains " + sigma.to_string() + " but not its initial segment of length "
                    + to_string(*dead));
    }
    if (dead)
        return Verdict::fail("path leaves the tree at length " + to_string(*dead));
    return Verdict::pass("path to depth " + to_string(depth));
}

auto wred::tolerance_bound(Pos m, std::size_t n) -> optional<Pos>
{
    if (m == 0)
        return nullopt;
    // colex: the tuple of rank m-1 has the largest maximum among ranks below m
    return rank_tuple(m - 1, n).back();
}

auto wred::tolerance_rt(const vector<Pos> & s, Pos m, std::size_t n) -> vector<Pos>
{
    auto l = tolerance_bound(m, n);
    if (! l)
        return s;
    vector<Pos> r;
    for (auto a : s)
        if (a > *l)
            r.push_back(a);
    return r;
}

auto wred::measure_at_level(const TreeByRule & t, Pos d) -> Rational
{
    if (d > 24)
        throw InputError("level " + to_string(d) + " is past the exhaustive measure limit");
    if (! t.contains(Prefix{}))
        throw ContractError("tree '" + t.name + "' does not contain the root");
    vector<bool> prev{true};
    for (Pos level = 1 ; level <= d ; ++level) {
        vector<bool> cur(Pos(1) << level);
        for (Pos v = 0 ; v < cur.size() ; ++v) {
            vector<std::uint8_t> bits(level);
            for (Pos j = 0 ; j < level ; ++j)
                bits[level - 1 - j] = (v >> j) & 1;
            cur[v] = t.contains(Prefix{std::move(bits)});
            if (cur[v] && ! prev[v >> 1])
                throw ContractError("tree '" + t.name + "' is not downward closed at level " + to_string(level));
        }
        prev = std::move(cur);
    }
    std::uint64_t count = 0;
    for (bool b : prev)
        count += b;
    Rational r(mpz_class(count), mpz_class(1) << d);
    r.canonicalize();
    return r;
}

auto wred::leftmost_string(const TreeByRule & t, Pos depth) -> optional<Prefix>
{
    optional<Prefix> found;
    std::function<bool (Prefix &)> walk = [&] (Prefix & p) -> bool {
        if (! t.contains(p))
            return false;
        if (p.length() == depth) {
            found = p;
            return true;
        }
        for (int b = 0 ; b < 2 ; ++b) {
            Prefix q = p;
            q.push_back(b);
            if (walk(q))
                return true;
        }
        return false;
    };
    Prefix root;
    walk(root);
    return found;
}

auto wred::is_bounded(const Coloring & f, Pos horizon, std::uint64_t bound) -> Verdict
{
    vector<Pos> all;
    for (Pos x = 0 ; x < horizon ; ++x)
        all.push_back(x);
    map<std::uint64_t, std::uint64_t> counts;
    optional<string> bad;
    for_each_subset(all, f.arity, [&] (const Tuple & t) {
        auto c = f(t);
        if (++counts[c] > bound) {
            bad = "colour " + to_string(c) + " used more than " + to_string(bound) + " times, last at " + format_tuple(t);
            return false;
        }
        return true;
    });
    if (bad)
        return Verdict::fail(*bad);
    return Verdict::pass(to_string(bound) + "-bounded below " + to_string(horizon));
}

auto wred::alternative_tag(const Point & a, std::uint64_t count) -> std::uint64_t
{
    std::uint64_t t = 0;
    while (a.at(t) == 1)
        if (++t >= count)
            throw InputError("alternative tag out of range (" + to_string(count) + " components)");
    return t;
}

auto wred::alternative_instance(std::uint64_t tag, const Point & a) -> Point
{
    Prefix code;
    for (std::uint64_t i = 0 ; i < tag ; ++i)
        code.push_back(1);
    code.push_back(0);
    return Point::extend(code, a);
}

auto wred::alternative_body(const Point & a, std::uint64_t tag) -> Point
{
    return Point{"body(" + a.name() + ")", [a, tag] (Pos x) { return a.at(tag + 1 + x); }};
}

namespace
{
    auto budget_for(const Scale & sc, std::size_t arity) -> SearchBudget
    {
        return SearchBudget{sc.horizon, sc.size_for(arity), sc.node_limit, 0, true};
    }

    auto rt_tolerance(std::size_t n, Colors k, bool thin) -> std::function<Functional (Pos)>
    {
        return [n, k, thin] (Pos m) {
            // instance bits below m touch tuple ranks below ceil(m / b)
            Pos ranks = m;
            if (k) {
                auto b = color_bits(*k);
                ranks = b == 0 ? 0 : (m + b - 1) / b;
            }
            auto l = tolerance_bound(ranks, n);
            string label = "theta(m=" + to_string(m) + ")";
            if (! thin)
                return Functional{1, [l] (Query & q, Pos x) {
                    if (l && x <= *l)
                        return 0;
                    return q.bit(0, x);
                }, label};
            return Functional{1, [l] (Query & q, Pos x) {
                // copy the unary colour code, then cut the set
                for (Pos i = 0 ; i <= x ; ++i)
                    if (q.bit(0, i) == 0) {
                        if (i == x)
                            return 0;
                        Pos y = x - i - 1;
                        if (l && y <= *l)
                            return 0;
                        return q.bit(0, x);
                    }
                return 1;
            }, label};
        };
    }

    auto make(ProblemSpec p) -> Problem
    {
        return make_shared<const ProblemSpec>(std::move(p));
    }

    auto check_omega_blocks(const Point & a, std::size_t n, const Scale & sc) -> Verdict
    {
        vector<Pos> all;
        for (Pos x = 0 ; x < sc.horizon ; ++x)
            all.push_back(x);
        optional<string> bad;
        for_each_subset(all, n, [&] (const Tuple & t) {
            auto r = tuple_rank(t);
            Pos c = 0;
            while (a.at(cantor_pair(r, c)) == 1)
                if (++c > sc.fuel) {
                    bad = "colour block of " + format_tuple(t) + " does not terminate within " + to_string(sc.fuel);
                    return false;
                }
            return true;
        });
        if (bad)
            return Verdict::inconclusive(*bad);
        return Verdict::pass();
    }
}

auto wred::rt(std::size_t n, std::uint64_t k) -> Problem
{
    if (n == 0 || k == 0)
        throw InputError("RT needs n >= 1 and k >= 1");
    ProblemSpec p;
    p.name = "RT" + to_string(n) + "_" + to_string(k);
    p.arity = n;
    p.total = true;
    p.check_instance = [] (const Point &, const Scale &) { return Verdict::pass(); };
    p.verify_at = [n, k] (const Point & a, const Point & h, const Scale & sc) {
        return verify_homogeneous_at(totalize_coloring(a, n, k), h, sc.horizon, sc.size_for(n));
    };
    p.solve = [n, k] (const Point & a, const Scale & sc) -> optional<Point> {
        auto r = find_homogeneous(totalize_coloring(a, n, k), budget_for(sc, n));
        if (! r.set)
            return nullopt;
        return Point::from_set(*r.set, "hom");
    };
    p.tolerance = rt_tolerance(n, k, false);
    return make(std::move(p));
}

auto wred::ts(std::size_t n, Colors k) -> Problem
{
    if (n == 0 || (k && *k < 2))
        throw InputError("TS needs n >= 1 and at least two colours");
    ProblemSpec p;
    p.name = "TS" + to_string(n) + "_" + colors_name(k);
    p.arity = n;
    // an all-ones unary block never ends, so omega colourings are not total
    p.total = k.has_value();
    p.check_instance = [n, k] (const Point & a, const Scale & sc) {
        if (k)
            return Verdict::pass();
        return check_omega_blocks(a, n, sc);
    };
    p.verify_at = [n, k] (const Point & a, const Point & sol, const Scale & sc) {
        auto tape = tape_of(sol);
        auto c = thin_omitted(tape, k ? *k : sc.fuel);
        if (! c)
            return k ? Verdict::fail("omitted colour code is out of range") : Verdict::inconclusive("omitted colour code does not terminate");
        ThinSolution t{Point{"set(" + sol.name() + ")", [tape, c = *c] (Pos x) { return thin_set_bit(tape, c, x); }}, *c};
        return verify_thin_at(totalize_coloring(a, n, k), t, sc.horizon, sc.size_for(n));
    };
    p.solve = [n, k] (const Point & a, const Scale & sc) -> optional<Point> {
        auto r = find_thin(totalize_coloring(a, n, k), budget_for(sc, n));
        if (! r.set)
            return nullopt;
        return encode_thin(ThinSolution{Point::from_set(*r.set, "thin"), *r.omitted});
    };
    p.tolerance = rt_tolerance(n, k, true);
    return make(std::move(p));
}

auto wred::rrt(std::size_t n, std::uint64_t bound) -> Problem
{
    ProblemSpec p;
    p.name = "RRT" + to_string(n) + "_" + to_string(bound);
    p.arity = n;
    p.total = false;
    p.check_instance = [n, bound] (const Point & a, const Scale & sc) {
        auto v = check_omega_blocks(a, n, sc);
        if (! v.ok())
            return v;
        return is_bounded(totalize_coloring(a, n, nullopt), sc.horizon, bound);
    };
    p.verify_at = [n] (const Point & a, const Point & s, const Scale & sc) {
        return verify_rainbow_at(totalize_coloring(a, n, nullopt), s, sc.horizon, sc.size_for(n));
    };
    p.solve = [n] (const Point & a, const Scale & sc) -> optional<Point> {
        auto r = find_rainbow(totalize_coloring(a, n, nullopt), budget_for(sc, n));
        if (! r.set)
            return nullopt;
        return Point::from_set(*r.set, "rainbow");
    };
    return make(std::move(p));
}

auto wred::coh() -> Problem
{
    ProblemSpec p;
    p.name = "COH";
    p.total = true;
    p.check_instance = [] (const Point &, const Scale &) { return Verdict::pass(); };
    p.verify_at = [] (const Point &, const Point &, const Scale &) {
        return Verdict::inconclusive("cohesiveness is a statement about tails");
    };
    p.solve = [] (const Point & a, const Scale & sc) -> optional<Point> {
        // finite shadow of the usual construction: keep the larger side of each R_i
        auto fam = decode_family(a);
        vector<Pos> cur, out;
        for (Pos x = 0 ; x < sc.horizon ; ++x)
            cur.push_back(x);
        for (std::uint64_t i = 0 ; ! cur.empty() ; ++i) {
            out.push_back(cur.front());
            cur.erase(cur.begin());
            vector<Pos> in, not_in;
            for (auto x : cur)
                (fam.member(i, x) ? in : not_in).push_back(x);
            cur = in.size() >= not_in.size() ? in : not_in;
        }
        return Point::from_set(out, "cohesive");
    };
    p.tolerance = [] (Pos m) {
        auto f = identity_functional();
        f.label = "theta(m=" + to_string(m) + ")";
        return f;
    };
    return make(std::move(p));
}

namespace
{
    auto tree_instance_check(const Point & a, const Scale & sc) -> Verdict
    {
        auto t = decode_tree(a);
        if (! t.contains(Prefix{}))
            return Verdict::fail("root is not in the tree");
        try {
            measure_at_level(t, std::min<Pos>(sc.horizon, 12));
        }
        catch (const ContractError & e) {
            return Verdict::fail(e.what());
        }
        if (! leftmost_string(t, sc.horizon))
            return Verdict::fail("tree has no string of length " + to_string(sc.horizon));
        return Verdict::pass();
    }

    auto tree_solve(const Point & a, const Scale & sc) -> optional<Point>
    {
        auto s = leftmost_string(decode_tree(a), sc.horizon);
        if (! s)
            return nullopt;
        return Point::extend(*s, Point::constant(0));
    }
}

auto wred::wkl() -> Problem
{
    ProblemSpec p;
    p.name = "WKL";
    p.check_instance = tree_instance_check;
    p.verify_at = [] (const Point & a, const Point & path, const Scale & sc) {
        return verify_path_at(decode_tree(a), path, sc.horizon);
    };
    p.solve = tree_solve;
    return make(std::move(p));
}

auto wred::wwkl(const Rational & q) -> Problem
{
    ProblemSpec p;
    p.name = "WWKL(" + to_string(q) + ")";
    p.check_instance = [q] (const Point & a, const Scale & sc) {
        auto v = tree_instance_check(a, sc);
        if (! v.ok())
            return v;
        auto t = decode_tree(a);
        for (Pos d = 0 ; d <= std::min<Pos>(sc.horizon, 12) ; ++d)
            if (measure_at_level(t, d) < q)
                return Verdict::fail("measure at level " + to_string(d) + " is below " + to_string(q));
        return Verdict::pass();
    };
    p.verify_at = [] (const Point & a, const Point & path, const Scale & sc) {
        return verify_path_at(decode_tree(a), path, sc.horizon);
    };
    p.solve = tree_solve;
    return make(std::move(p));
}

auto wred::trivial() -> Problem
{
    ProblemSpec p;
    p.name = "ANY";
    p.total = true;
    p.check_instance = [] (const Point &, const Scale &) { return Verdict::pass(); };
    p.verify_at = [] (const Point &, const Point &, const Scale &) { return Verdict::pass("every set solves"); };
    p.solve = [] (const Point &, const Scale &) -> optional<Point> { return Point::constant(0); };
    p.tolerance = [] (Pos) { return identity_functional(); };
    return make(std::move(p));
}

auto wred::rt22_restricted(const string & name, Structure s) -> Problem
{
    auto base = rt(2, 2);
    ProblemSpec p = *base;
    p.name = name;
    p.total = false;
    p.tolerance = nullptr;
    p.check_instance = [s] (const Point & a, const Scale & sc) {
        vector<Pos> all;
        for (Pos x = 0 ; x < sc.horizon ; ++x)
            all.push_back(x);
        return structural_check(totalize_coloring(a, 2, 2), all, s).verdict;
    };
    return make(std::move(p));
}

auto wred::striv() -> Problem
{
    return rt22_restricted("STRIV", Structure::SemiTrivial);
}

auto wred::cac() -> Problem
{
    return rt22_restricted("CAC", Structure::SemiTransitive);
}

auto wred::ads() -> Problem
{
    return rt22_restricted("ADS", Structure::Transitive);
}

auto wred::sher() -> Problem
{
    return rt22_restricted("SHER", Structure::SemiHereditary);
}
