#include <wred/error.hh>
#include <wred/oracle.hh>

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

auto SearchResult::verdict() const -> Verdict
{
    if (set)
        return Verdict::pass(mode + " " + format_set(*set) + (omitted ? " omits " + to_string(*omitted) : string()));
    if (budget_hit)
        return Verdict::inconclusive("node limit reached after " + to_string(nodes) + " nodes");
    if (mode == "exhaustive")
        return Verdict::fail("no solution (exhaustive)");
    return Verdict::inconclusive("greedy search failed");
}

namespace
{
    // incremental constraint state for a set under construction
    struct State
    {
        vector<Pos> cur;
        virtual ~State() = default;
        virtual auto push(Pos x) -> bool = 0;
        virtual auto pop() -> void = 0;
    };

    // new tuples created by adding x on top of cur
    auto new_tuples(const vector<Pos> & cur, std::size_t n, Pos x, const function<bool (const Tuple &)> & fn) -> bool
    {
        return for_each_subset(cur, n - 1, [&] (const Tuple & t) {
            Tuple u = t;
            u.push_back(x);
            return fn(u);
        });
    }

    struct Homogeneous : State
    {
        const Coloring & f;
        optional<std::uint64_t> color;
        vector<bool> set_here;

        explicit Homogeneous(const Coloring & g) : f(g) { }

        auto push(Pos x) -> bool override
        {
            bool fixed_now = false;
            bool ok = new_tuples(cur, f.arity, x, [&] (const Tuple & t) {
                auto c = f(t);
                if (! color) {
                    color = c;
                    fixed_now = true;
                    return true;
                }
                return c == *color;
            });
            if (! ok) {
                if (fixed_now)
                    color = nullopt;
                return false;
            }
            cur.push_back(x);
            set_here.push_back(fixed_now);
            return true;
        }

        auto pop() -> void override
        {
            if (set_here.back())
                color = nullopt;
            set_here.pop_back();
            cur.pop_back();
        }
    };

    struct Thin : State
    {
        const Coloring & f;
        map<std::uint64_t, std::uint64_t> counts;
        vector<vector<std::uint64_t>> added;

        explicit Thin(const Coloring & g) : f(g) { }

        auto distinct() const -> std::uint64_t
        {
            return counts.size();
        }

        auto undo(const vector<std::uint64_t> & cs) -> void
        {
            for (auto c : cs)
                if (--counts[c] == 0)
                    counts.erase(c);
        }

        auto push(Pos x) -> bool override
        {
            vector<std::uint64_t> cs;
            new_tuples(cur, f.arity, x, [&] (const Tuple & t) {
                auto c = f(t);
                cs.push_back(c);
                ++counts[c];
                return true;
            });
            if (f.colors && distinct() >= *f.colors) {
                undo(cs);
                return false;
            }
            cur.push_back(x);
            added.push_back(std::move(cs));
            return true;
        }

        auto pop() -> void override
        {
            undo(added.back());
            added.pop_back();
            cur.pop_back();
        }

        auto least_absent() const -> std::uint64_t
        {
            std::uint64_t c = 0;
            while (counts.count(c))
                ++c;
            return c;
        }
    };

    struct Rainbow : State
    {
        const Coloring & f;
        set<std::uint64_t> used;
        vector<vector<std::uint64_t>> added;

        explicit Rainbow(const Coloring & g) : f(g) { }

        auto push(Pos x) -> bool override
        {
            vector<std::uint64_t> cs;
            bool ok = new_tuples(cur, f.arity, x, [&] (const Tuple & t) {
                auto c = f(t);
                if (used.count(c))
                    return false;
                used.insert(c);
                cs.push_back(c);
                return true;
            });
            if (! ok) {
                for (auto c : cs)
                    used.erase(c);
                return false;
            }
            cur.push_back(x);
            added.push_back(std::move(cs));
            return true;
        }

        auto pop() -> void override
        {
            for (auto c : added.back())
                used.erase(c);
            added.pop_back();
            cur.pop_back();
        }
    };

    struct Avoiding : State
    {
        const Coloring & f;
        set<std::uint64_t> avoid;

        Avoiding(const Coloring & g, const vector<std::uint64_t> & cs) : f(g), avoid(cs.begin(), cs.end()) { }

        auto push(Pos x) -> bool override
        {
            if (! new_tuples(cur, f.arity, x, [&] (const Tuple & t) { return ! avoid.count(f(t)); }))
                return false;
            cur.push_back(x);
            return true;
        }

        auto pop() -> void override
        {
            cur.pop_back();
        }
    };

    struct MinHomogeneous : State
    {
        const Coloring & f;
        vector<optional<std::uint64_t>> colors;
        vector<vector<std::size_t>> fixed;

        explicit MinHomogeneous(const Coloring & g) : f(g) { }

        auto push(Pos z) -> bool override
        {
            vector<std::size_t> now;
            for (std::size_t i = 0 ; i < cur.size() ; ++i) {
                auto c = f({cur[i], z});
                if (! colors[i]) {
                    colors[i] = c;
                    now.push_back(i);
                }
                else if (*colors[i] != c) {
                    for (auto j : now)
                        colors[j] = nullopt;
                    return false;
                }
            }
            cur.push_back(z);
            colors.push_back(nullopt);
            fixed.push_back(std::move(now));
            return true;
        }

        auto pop() -> void override
        {
            for (auto j : fixed.back())
                colors[j] = nullopt;
            fixed.pop_back();
            colors.pop_back();
            cur.pop_back();
        }
    };

    struct Search
    {
        State & state;
        const SearchBudget & b;
        std::uint64_t nodes = 0;
        bool aborted = false;

        auto dfs(Pos start) -> bool
        {
            if (state.cur.size() >= b.size)
                return true;
            if (++nodes > b.node_limit) {
                aborted = true;
                return false;
            }
            for (Pos x = start ; x < b.horizon ; ++x) {
                if (b.horizon - x < b.size - state.cur.size())
                    break;
                if (state.push(x)) {
                    if (dfs(x + 1))
                        return true;
                    state.pop();
                    if (aborted)
                        return false;
                }
            }
            return false;
        }

        auto greedy() -> bool
        {
            for (Pos x = 0 ; x < b.horizon && state.cur.size() < b.size ; ++x) {
                ++nodes;
                state.push(x);
            }
            return state.cur.size() >= b.size;
        }
    };

    auto run(State & st, const SearchBudget & b) -> SearchResult
    {
        SearchResult r;
        Search s{st, b};
        if (s.greedy()) {
            r.set = st.cur;
            r.mode = "greedy";
            r.nodes = s.nodes;
            return r;
        }
        r.mode = "greedy";
        if (b.exhaustive) {
            while (! st.cur.empty())
                st.pop();
            r.mode = "exhaustive";
            if (s.dfs(0))
                r.set = st.cur;
            r.budget_hit = s.aborted;
        }
        r.nodes = s.nodes;
        return r;
    }
}

auto wred::find_homogeneous(const Coloring & f, const SearchBudget & b) -> SearchResult
{
    Homogeneous st(f);
    return run(st, b);
}

auto wred::find_thin(const Coloring & f, const SearchBudget & b) -> SearchResult
{
    if (f.colors && *f.colors < 2)
        throw InputError("thin sets need at least two colours");
    Thin st(f);
    auto r = run(st, b);
    if (r.set)
        r.omitted = st.least_absent();
    return r;
}

auto wred::find_rainbow(const Coloring & f, const SearchBudget & b) -> SearchResult
{
    Rainbow st(f);
    return run(st, b);
}

auto wred::find_avoiding(const Coloring & f, const vector<std::uint64_t> & colors, const SearchBudget & b) -> SearchResult
{
    Avoiding st(f, colors);
    return run(st, b);
}

auto wred::find_min_homogeneous(const Coloring & f, const SearchBudget & b) -> SearchResult
{
    if (f.arity != 2)
        throw InputError("min-homogeneity is defined for pairs");
    MinHomogeneous st(f);
    return run(st, b);
}

auto wred::enumerate_paths(const TreeByRule & t, Pos depth) -> vector<Prefix>
{
    vector<Prefix> out;
    function<void (Prefix &)> walk = [&] (Prefix & p) {
        if (! t.contains(p))
            return;
        if (p.length() == depth) {
            out.push_back(p);
            return;
        }
        for (int b = 0 ; b < 2 ; ++b) {
            Prefix q = p;
            q.push_back(b);
            walk(q);
        }
    };
    Prefix root;
    walk(root);
    return out;
}

auto wred::structure_name(Structure s) -> const char *
{
    switch (s) {
        case Structure::Transitive: return "transitive";
        case Structure::SemiTransitive: return "semi-transitive";
        case Structure::SemiHereditary: return "semi-hereditary";
        case Structure::SemiTrivial: return "semi-trivial";
    }
    return "?";
}

namespace
{
    // colours i for which the property fails, with a witness each
    auto failing_colors(const Coloring & f, const vector<Pos> & h, Structure s) -> map<std::uint64_t, Tuple>
    {
        map<std::uint64_t, Tuple> bad;
        if (s == Structure::SemiTrivial) {
            for (std::size_t a = 0 ; a < h.size() ; ++a) {
                auto x = h[a];
                map<std::uint64_t, vector<Pos>> by_color;
                for (std::size_t b = a + 1 ; b < h.size() ; ++b)
                    by_color[f({x, h[b]})].push_back(h[b]);
                for (auto & [i, ys] : by_color) {
                    if (bad.count(i))
                        continue;
                    optional<std::uint64_t> col;
                    for_each_subset(ys, 2, [&] (const Tuple & t) {
                        auto c = f(t);
                        if (col && *col != c) {
                            bad[i] = {x, t[0], t[1]};
                            return false;
                        }
                        col = c;
                        return true;
                    });
                }
            }
            return bad;
        }

        for_each_subset(h, 3, [&] (const Tuple & t) {
            auto x = t[0], y = t[1], z = t[2];
            auto fxy = f({x, y}), fxz = f({x, z}), fyz = f({y, z});
            if (s == Structure::SemiHereditary) {
                if (fxz == fyz && fxy != fxz && ! bad.count(fxz))
                    bad[fxz] = t;
            }
            else if (fxy == fyz && fxz != fxy && ! bad.count(fxy))
                bad[fxy] = t;
            return true;
        });
        return bad;
    }
}

auto wred::structural_check(const Coloring & f, const vector<Pos> & h, Structure s) -> StructuralVerdict
{
    if (f.arity != 2)
        throw InputError("structural properties are defined for pair colourings");
    auto bad = failing_colors(f, h, s);
    StructuralVerdict r;
    auto name = string(structure_name(s));
    if (bad.empty()) {
        r.verdict = Verdict::pass(name);
        return r;
    }
    if (s != Structure::Transitive && bad.size() == 1) {
        r.exceptional = bad.begin()->first;
        r.verdict = Verdict::pass(name + " except colour " + to_string(*r.exceptional));
        return r;
    }
    auto & [c, t] = *(s == Structure::Transitive ? bad.begin() : std::next(bad.begin()));
    r.witness = t;
    r.verdict = Verdict::fail(name + " fails for colour " + to_string(c) + " at " + format_tuple(t));
    return r;
}
