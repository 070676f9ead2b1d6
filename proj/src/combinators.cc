#include <wred/combinators.hh>
#include <wred/error.hh>

#include <algorithm>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>

using namespace wred;

using std::function;
using std::make_shared;
using std::map;
using std::max;
using std::mutex;
using std::nullopt;
using std::optional;
using std::pair;
using std::shared_ptr;
using std::string;
using std::to_string;
using std::unique_lock;
using std::vector;

auto wred::kind_name(Kind k) -> const char *
{
    return k == Kind::Strong ? "strong" : "plain";
}

auto wred::validate_witness(const Witness & w) -> void
{
    if (! w.source || ! w.target)
        throw InputError("witness '" + w.id + "' is missing its source or target");
    if (w.forward.arity != 1)
        throw InputError("witness '" + w.id + "': forward functional must read one tape");
    std::size_t want = w.kind == Kind::Strong ? 1 : 2;
    if (w.backward.arity != want)
        throw InputError("witness '" + w.id + "': " + kind_name(w.kind) + " backward functional must read "
                + to_string(want) + " tape(s), not " + to_string(w.backward.arity));
}

auto wred::identity_witness(const Problem & p) -> Witness
{
    return Witness{"id(" + p->name + ")", identity_functional(), identity_functional(), Kind::Strong, p, p};
}

auto wred::forward_image(const Witness & w, const Point & a, Pos fuel) -> Point
{
    return apply_point(w.forward, {a}, fuel, w.id + " forward");
}

auto wred::backward_image(const Witness & w, const Point & a, const Point & t, Pos fuel) -> Point
{
    if (w.kind == Kind::Strong)
        return apply_point(w.backward, {t}, fuel, w.id + " backward");
    return apply_point(w.backward, {a, t}, fuel, w.id + " backward");
}

namespace
{
    auto make(ProblemSpec p) -> Problem
    {
        return make_shared<const ProblemSpec>(std::move(p));
    }

    auto evens(TapeFn t) -> TapeFn
    {
        return [t] (Pos p) { return t(2 * p); };
    }

    auto odds(TapeFn t) -> TapeFn
    {
        return [t] (Pos p) { return t(2 * p + 1); };
    }

    auto pair_tape(TapeFn a, TapeFn b) -> TapeFn
    {
        return [a, b] (Pos p) { return p % 2 == 0 ? a(p / 2) : b(p / 2); };
    }

    auto column_tape(TapeFn t, std::uint64_t i) -> TapeFn
    {
        return [t, i] (Pos p) { return t(cantor_pair(i, p)); };
    }

    // tapes for the backward functional of w, by kind
    auto backward_tapes(const Witness & w, TapeFn instance, TapeFn solution) -> vector<TapeFn>
    {
        if (w.kind == Kind::Strong)
            return {solution};
        return {instance, solution};
    }

    auto same_problem(const Problem & a, const Problem & b) -> bool
    {
        return a == b || (a && b && a->name == b->name);
    }

    auto guarded(const function<Verdict ()> & f) -> Verdict
    {
        try {
            return f();
        }
        catch (const ResourceError & e) {
            return Verdict::inconclusive(e.what());
        }
    }

    auto columns_problem(const Problem & p, optional<std::size_t> count) -> Problem
    {
        ProblemSpec s;
        s.name = count ? p->name + "^" + to_string(*count) : "Seq(" + p->name + ")";
        s.arity = p->arity;
        s.total = p->total;
        s.shape = count ? "power" : "seq";
        s.parts = {p};
        auto used = [count] (const Scale & sc) { return count ? Pos(*count) : sc.columns; };
        s.check_instance = [p, used] (const Point & a, const Scale & sc) {
            Verdict v = Verdict::pass();
            for (Pos c = 0 ; c < used(sc) ; ++c) {
                auto cv = p->check_instance(column(a, c), sc);
                if (! cv.ok())
                    cv.detail = "column " + to_string(c) + ": " + cv.detail;
                v = worst(v, cv);
            }
            return v;
        };
        s.verify_at = [p, used] (const Point & a, const Point & sol, const Scale & sc) {
            Verdict v = Verdict::pass();
            for (Pos c = 0 ; c < used(sc) ; ++c) {
                auto cv = p->verify_at(column(a, c), column(sol, c), sc);
                if (! cv.ok())
                    cv.detail = "column " + to_string(c) + ": " + cv.detail;
                v = worst(v, cv);
            }
            return v;
        };
        s.solve = [p, used] (const Point & a, const Scale & sc) -> optional<Point> {
            auto sols = make_shared<vector<Point>>();
            for (Pos c = 0 ; c < used(sc) ; ++c) {
                auto t = p->solve(column(a, c), sc);
                if (! t)
                    return nullopt;
                sols->push_back(*t);
            }
            // columns past the checked ones are solved on demand; an unsolvable one reads as zeros
            return family([p, a, sc, sols] (std::uint64_t i) {
                if (i < sols->size())
                    return (*sols)[i];
                auto t = p->solve(column(a, i), sc);
                return t ? *t : Point::constant(0);
            }, "columns");
        };
        if (p->tolerance)
            s.tolerance = [p] (Pos m) {
                // a column position y sits at cantor(i, y) >= y, so each column changes only below m
                auto theta = p->tolerance(m);
                return Functional{1, [theta] (Query & q, Pos z) {
                    auto [i, y] = cantor_unpair(z);
                    return run_on(theta, {column_tape(q.tape(0), i)}, q.budget(), y);
                }, "columns " + theta.label};
            };
        return make(std::move(s));
    }
}

auto wred::parallel_product(const Problem & p, const Problem & q) -> Problem
{
    ProblemSpec s;
    s.name = "<" + p->name + "," + q->name + ">";
    s.arity = max(p->arity, q->arity);
    s.total = p->total && q->total;
    s.shape = "parallel";
    s.parts = {p, q};
    s.check_instance = [p, q] (const Point & a, const Scale & sc) {
        return worst(p->check_instance(even_bits(a), sc), q->check_instance(odd_bits(a), sc));
    };
    s.verify_at = [p, q] (const Point & a, const Point & sol, const Scale & sc) {
        return worst(p->verify_at(even_bits(a), even_bits(sol), sc), q->verify_at(odd_bits(a), odd_bits(sol), sc));
    };
    s.solve = [p, q] (const Point & a, const Scale & sc) -> optional<Point> {
        auto x = p->solve(even_bits(a), sc);
        if (! x)
            return nullopt;
        auto y = q->solve(odd_bits(a), sc);
        if (! y)
            return nullopt;
        return interleave(*x, *y);
    };
    if (p->tolerance && q->tolerance)
        s.tolerance = [p, q] (Pos m) {
            // component positions below ceil(m/2) are the only ones that moved
            auto h = (m + 1) / 2;
            auto tp = p->tolerance(h), tq = q->tolerance(h);
            return Functional{1, [tp, tq] (Query & q, Pos x) {
                auto t = q.tape(0);
                if (x % 2 == 0)
                    return run_on(tp, {evens(t)}, q.budget(), x / 2);
                return run_on(tq, {odds(t)}, q.budget(), x / 2);
            }, "<" + tp.label + "," + tq.label + ">"};
        };
    return make(std::move(s));
}

auto wred::witness_parallel(const Witness & w1, const Witness & w2) -> Witness
{
    validate_witness(w1);
    validate_witness(w2);
    Witness w;
    w.id = "<" + w1.id + "," + w2.id + ">";
    w.source = parallel_product(w1.source, w2.source);
    w.target = parallel_product(w1.target, w2.target);
    w.kind = w1.kind == Kind::Strong && w2.kind == Kind::Strong ? Kind::Strong : Kind::Plain;
    auto f1 = w1.forward, f2 = w2.forward;
    w.forward = Functional{1, [f1, f2] (Query & q, Pos x) {
        auto t = q.tape(0);
        if (x % 2 == 0)
            return run_on(f1, {evens(t)}, q.budget(), x / 2);
        return run_on(f2, {odds(t)}, q.budget(), x / 2);
    }, w.id + " forward"};
    if (w.kind == Kind::Strong)
        w.backward = Functional{1, [w1, w2] (Query & q, Pos x) {
            auto t = q.tape(0);
            if (x % 2 == 0)
                return run_on(w1.backward, {evens(t)}, q.budget(), x / 2);
            return run_on(w2.backward, {odds(t)}, q.budget(), x / 2);
        }, w.id + " backward"};
    else
        w.backward = Functional{2, [w1, w2] (Query & q, Pos x) {
            auto a = q.tape(0), t = q.tape(1);
            if (x % 2 == 0)
                return run_on(w1.backward, backward_tapes(w1, evens(a), evens(t)), q.budget(), x / 2);
            return run_on(w2.backward, backward_tapes(w2, odds(a), odds(t)), q.budget(), x / 2);
        }, w.id + " backward"};
    return w;
}

auto wred::alternative_product(const vector<Problem> & ps) -> Problem
{
    if (ps.empty())
        throw InputError("alternative product of no problems");
    ProblemSpec s;
    s.name = "[";
    for (std::size_t i = 0 ; i < ps.size() ; ++i)
        s.name += (i ? "," : "") + ps[i]->name;
    s.name += "]";
    for (auto & p : ps)
        s.arity = max(s.arity, p->arity);
    s.shape = "alternative";
    s.parts = ps;
    s.check_instance = [ps] (const Point & a, const Scale & sc) {
        auto t = alternative_tag(a, ps.size());
        return ps[t]->check_instance(alternative_body(a, t), sc);
    };
    s.verify_at = [ps] (const Point & a, const Point & sol, const Scale & sc) {
        auto t = alternative_tag(a, ps.size());
        return ps[t]->verify_at(alternative_body(a, t), sol, sc);
    };
    s.solve = [ps] (const Point & a, const Scale & sc) {
        auto t = alternative_tag(a, ps.size());
        return ps[t]->solve(alternative_body(a, t), sc);
    };
    return make(std::move(s));
}

auto wred::alternative_embedding(const vector<Problem> & ps, std::uint64_t tag) -> Witness
{
    if (tag >= ps.size())
        throw InputError("alternative tag " + to_string(tag) + " out of range");
    Witness w;
    w.id = "embed" + to_string(tag);
    w.source = ps[tag];
    w.target = alternative_product(ps);
    w.kind = Kind::Strong;
    w.forward = Functional{1, [tag] (Query & q, Pos x) {
        if (x < tag)
            return 1;
        if (x == tag)
            return 0;
        return q.bit(0, x - tag - 1);
    }, "tag" + to_string(tag)};
    w.backward = identity_functional();
    return w;
}

auto wred::compose_witness(const Witness & w1, const Witness & w2) -> Witness
{
    validate_witness(w1);
    validate_witness(w2);
    if (! same_problem(w1.target, w2.source))
        throw InputError("cannot compose '" + w1.id + "' (into " + w1.target->name + ") with '" + w2.id
                + "' (from " + w2.source->name + ")");
    Witness w;
    w.id = w2.id + "." + w1.id;
    w.source = w1.source;
    w.target = w2.target;
    w.kind = w1.kind == Kind::Strong && w2.kind == Kind::Strong ? Kind::Strong : Kind::Plain;
    auto f1 = w1.forward, f2 = w2.forward;
    w.forward = Functional{1, [f1, f2] (Query & q, Pos x) {
        return run_on(f2, {applied(f1, {q.tape(0)}, q.budget())}, q.budget(), x);
    }, w.id + " forward"};
    if (w.kind == Kind::Strong)
        w.backward = Functional{1, [w1, w2] (Query & q, Pos x) {
            return run_on(w1.backward, {applied(w2.backward, {q.tape(0)}, q.budget())}, q.budget(), x);
        }, w.id + " backward"};
    else
        w.backward = Functional{2, [w1, w2] (Query & q, Pos x) {
            // the intermediate instance is threaded through
            auto a = q.tape(0);
            auto mid = applied(w1.forward, {a}, q.budget());
            auto sol = applied(w2.backward, backward_tapes(w2, mid, q.tape(1)), q.budget());
            return run_on(w1.backward, backward_tapes(w1, a, sol), q.budget(), x);
        }, w.id + " backward"};
    return w;
}

auto wred::compositional_product(const Problem & q, const Problem & p, const Functional & glue) -> Problem
{
    if (glue.arity != 2)
        throw InputError("glue functional must read the instance and the first solution");
    ProblemSpec s;
    s.name = q->name + "*" + p->name;
    s.arity = max(p->arity, q->arity);
    s.total = p->total;
    s.shape = "compositional";
    s.parts = {q, p};
    s.check_instance = p->check_instance;
    s.verify_at = [q, p, glue] (const Point & a, const Point & sol, const Scale & sc) {
        auto first = p->verify_at(a, even_bits(sol), sc);
        if (first.failed())
            return Verdict::fail("first half: " + first.detail);
        auto second = guarded([&] {
            auto glued = apply_point(glue, {a, even_bits(sol)}, sc.fuel, "glue");
            glued.prefix(sc.horizon);
            return q->verify_at(glued, odd_bits(sol), sc);
        });
        if (! second.ok())
            second.detail = "second half: " + second.detail;
        return worst(first, second);
    };
    s.solve = [q, p, glue] (const Point & a, const Scale & sc) -> optional<Point> {
        auto b = p->solve(a, sc);
        if (! b)
            return nullopt;
        auto c = q->solve(apply_point(glue, {a, *b}, sc.fuel, "glue"), sc);
        if (! c)
            return nullopt;
        return interleave(*b, *c);
    };
    return make(std::move(s));
}

auto wred::seq(const Problem & p) -> Problem
{
    return columns_problem(p, nullopt);
}

auto wred::power(const Problem & p, std::size_t n) -> Problem
{
    if (n == 0)
        throw InputError("power needs at least one column");
    return columns_problem(p, n);
}

auto wred::lift_seq(const Witness & w) -> Witness
{
    validate_witness(w);
    Witness r;
    r.id = "Seq(" + w.id + ")";
    r.source = seq(w.source);
    r.target = seq(w.target);
    r.kind = w.kind;
    auto f = w.forward;
    r.forward = Functional{1, [f] (Query & q, Pos z) {
        auto [i, y] = cantor_unpair(z);
        return run_on(f, {column_tape(q.tape(0), i)}, q.budget(), y);
    }, r.id + " forward"};
    if (w.kind == Kind::Strong)
        r.backward = Functional{1, [w] (Query & q, Pos z) {
            auto [i, y] = cantor_unpair(z);
            return run_on(w.backward, {column_tape(q.tape(0), i)}, q.budget(), y);
        }, r.id + " backward"};
    else
        r.backward = Functional{2, [w] (Query & q, Pos z) {
            auto [i, y] = cantor_unpair(z);
            return run_on(w.backward, {column_tape(q.tape(0), i), column_tape(q.tape(1), i)}, q.budget(), y);
        }, r.id + " backward"};
    return r;
}

namespace
{
    // E_t for the iterate: E_{n-1} = A_{n-1}, E_t = Phi(<A_t, E_{t+1}>)
    auto iterate_tape(const Functional & phi, TapeFn family, std::size_t n, std::size_t t, Budget & b) -> TapeFn
    {
        TapeFn e = column_tape(family, n - 1);
        for (std::size_t l = n - 1 ; l-- > t ; )
            e = applied(phi, {pair_tape(column_tape(family, l), e)}, b);
        return e;
    }
}

auto wred::iterate_finite(const Witness & w, std::size_t n) -> Witness
{
    validate_witness(w);
    if (n == 0)
        throw InputError("iterate needs n >= 1");
    if (! same_problem(w.target, w.source->parts.empty() ? nullptr : w.source->parts.back()))
        throw InputError("iterate needs a witness for <P,P> <= P, got " + w.source->name + " <= " + w.target->name);
    Witness r;
    r.id = w.id + "^" + to_string(n);
    r.source = power(w.target, n);
    r.target = w.target;
    r.kind = w.kind;
    auto phi = w.forward;
    r.forward = Functional{1, [phi, n] (Query & q, Pos x) {
        return iterate_tape(phi, q.tape(0), n, 0, q.budget())(x);
    }, r.id + " forward"};
    // level l: T_l -> Psi -> <S_l, T_{l+1}>; the last level keeps T_{n-1}
    auto back = [w, n] (Query & q, TapeFn instance, TapeFn t0, Pos z) -> int {
        auto [col, y] = cantor_unpair(z);
        if (col >= n)
            return 0;
        TapeFn t = t0;
        for (std::size_t l = 0 ; l < col ; ++l) {
            auto level_instance = w.kind == Kind::Strong ? TapeFn{} : pair_tape(column_tape(instance, l),
                    iterate_tape(w.forward, instance, n, l + 1, q.budget()));
            t = odds(applied(w.backward, backward_tapes(w, level_instance, t), q.budget()));
        }
        if (col == n - 1)
            return t(y);
        auto level_instance = w.kind == Kind::Strong ? TapeFn{} : pair_tape(column_tape(instance, col),
                iterate_tape(w.forward, instance, n, col + 1, q.budget()));
        return run_on(w.backward, backward_tapes(w, level_instance, t), q.budget(), 2 * y);
    };
    if (w.kind == Kind::Strong)
        r.backward = Functional{1, [back] (Query & q, Pos z) { return back(q, TapeFn{}, q.tape(0), z); }, r.id + " backward"};
    else
        r.backward = Functional{2, [back] (Query & q, Pos z) { return back(q, q.tape(0), q.tape(1), z); }, r.id + " backward"};
    return r;
}

auto wred::iterate_instance(const Witness & w, const vector<Point> & as, Pos fuel) -> Point
{
    if (as.empty())
        throw InputError("iterate needs at least one instance");
    Point e = as.back();
    for (std::size_t l = as.size() - 1 ; l-- > 0 ; )
        e = apply_point(w.forward, {interleave(as[l], e)}, fuel, "iterate level " + to_string(l));
    return e;
}

auto wred::iterate_expression(std::size_t n) -> string
{
    if (n == 0)
        throw InputError("iterate needs n >= 1");
    string s = "A" + to_string(n - 1);
    for (std::size_t l = n - 1 ; l-- > 0 ; )
        s = "Φ(A" + to_string(l) + "," + s + ")";
    return s;
}

namespace
{
    struct NeedBit
    {
        Pos level;
        Pos pos;
    };

    auto cut_tape(const Point & c, Pos n) -> TapeFn
    {
        return [c, n] (Pos p) -> int {
            if (p >= n)
                throw PrefixOverrun{};
            return c.at(p);
        };
    }

    // Phi(s_i, (C|m_{i+1})^Phi(s_{i+1}, ... Phi(s_s, C|n) ...))
    auto nested(const Functional & phi, const function<TapeFn (Pos)> & sigma, const Point & c, const vector<Pos> & m,
            Pos i, Pos s, Pos n, Budget & b) -> TapeFn
    {
        TapeFn e = applied(phi, {pair_tape(sigma(s), cut_tape(c, n))}, b);
        for (Pos t = s ; t-- > i ; ) {
            Pos cut = m.at(t + 1);
            TapeFn tail = [c, cut, e] (Pos p) { return p < cut ? c.at(p) : e(p); };
            e = applied(phi, {pair_tape(sigma(t), tail)}, b);
        }
        return e;
    }

    class SquashEngine
    {
        private:
            SquashConfig _cfg;
            mutable mutex _mutex;
            vector<Pos> _markers{0};
            vector<std::uint64_t> _leaves;

            auto all_converge(Pos i, Pos s, Pos n, map<pair<Pos, Pos>, int> & assign, std::uint64_t & leaves) const -> bool
            {
                auto sigma = [&assign, n] (Pos t) -> TapeFn {
                    return [&assign, n, t] (Pos p) -> int {
                        if (p >= n)
                            throw PrefixOverrun{};
                        auto it = assign.find({t, p});
                        if (it == assign.end())
                            throw NeedBit{t, p};
                        return it->second;
                    };
                };
                try {
                    Budget b(_cfg.fuel);
                    nested(_cfg.w.forward, sigma, _cfg.c, _markers, i, s, n, b)(s);
                }
                catch (const NeedBit & nb) {
                    for (int v = 0 ; v < 2 ; ++v) {
                        assign[{nb.level, nb.pos}] = v;
                        if (! all_converge(i, s, n, assign, leaves)) {
                            assign.erase({nb.level, nb.pos});
                            return false;
                        }
                    }
                    assign.erase({nb.level, nb.pos});
                    return true;
                }
                catch (const OutOfFuel &) {
                    ++leaves;
                    return false;
                }
                catch (const PrefixOverrun &) {
                    ++leaves;
                    return false;
                }
                if (++leaves > _cfg.leaf_limit)
                    throw ResourceError("marker search at stage " + to_string(s) + ", candidate n = " + to_string(n)
                            + ": frontier of " + to_string(leaves) + " leaves exceeds " + to_string(_cfg.leaf_limit));
                return true;
            }

            auto extend_once() -> void
            {
                Pos s = _markers.size() - 1;
                std::uint64_t leaves = 0;
                for (Pos n = max(_markers.back(), s) + 1 ; n <= _cfg.max_n ; ++n) {
                    bool ok = true;
                    leaves = 0;
                    for (Pos i = 0 ; i <= s && ok ; ++i) {
                        map<pair<Pos, Pos>, int> assign;
                        ok = all_converge(i, s, n, assign, leaves);
                    }
                    if (ok) {
                        _markers.push_back(n);
                        _leaves.push_back(leaves);
                        return;
                    }
                }
                throw ResourceError("marker search at stage " + to_string(s) + ": no candidate n up to "
                        + to_string(_cfg.max_n) + " converges (frontier " + to_string(leaves) + " leaves)");
            }

        public:
            SquashEngine(SquashConfig cfg, vector<Pos> seed = {}) :
                _cfg(std::move(cfg))
            {
                if (! seed.empty()) {
                    if (seed.front() != 0)
                        throw InputError("marker sequences start at 0");
                    _markers = std::move(seed);
                }
            }

            auto config() const -> const SquashConfig &
            {
                return _cfg;
            }

            // m_0 .. m_s
            auto markers_to(Pos s) -> vector<Pos>
            {
                unique_lock lock(_mutex);
                while (_markers.size() <= s)
                    extend_once();
                return vector<Pos>(_markers.begin(), _markers.begin() + s + 1);
            }

            auto leaves() const -> vector<std::uint64_t>
            {
                unique_lock lock(_mutex);
                return _leaves;
            }

            // B_i(x) by the stage rule, reading the A-family through cols
            auto b_bit(Pos i, Pos x, const function<TapeFn (Pos)> & cols, Budget & b) -> int
            {
                if (i > x)
                    return _cfg.c.at(x);
                auto m = markers_to(x + 1);
                if (x < m[i])
                    return _cfg.c.at(x);
                return nested(_cfg.w.forward, cols, _cfg.c, m, i, x, m[x + 1], b)(x);
            }
    };

    auto family_columns(const Point & a) -> function<TapeFn (Pos)>
    {
        return [a] (Pos t) -> TapeFn { return [a, t] (Pos p) { return a.at(cantor_pair(t, p)); }; };
    }

    auto tape_columns(TapeFn a) -> function<TapeFn (Pos)>
    {
        return [a] (Pos t) { return column_tape(a, t); };
    }

    // one evaluation of the stage rule, with divergence as a contract failure
    auto b_value(SquashEngine & e, Pos i, Pos x, const function<TapeFn (Pos)> & cols) -> int
    {
        Budget b(e.config().fuel);
        try {
            return e.b_bit(i, x, cols, b);
        }
        catch (const OutOfFuel &) {
        }
        catch (const PrefixOverrun &) {
        }
        throw ContractError("B_" + to_string(i) + "(" + to_string(x) + ") diverges although the markers promise convergence");
    }
}

auto wred::validate_squash(const SquashConfig & cfg) -> void
{
    if (! cfg.q || ! cfg.p)
        throw InputError("squash config '" + cfg.name + "' needs both problems");
    if (! cfg.p->total || ! cfg.q->total)
        throw InputError("squash config '" + cfg.name + "': both problems must be total ("
                + cfg.q->name + (cfg.q->total ? " is" : " is not") + ", " + cfg.p->name + (cfg.p->total ? " is" : " is not") + ")");
    if (! cfg.p->tolerance)
        throw InputError("squash config '" + cfg.name + "': " + cfg.p->name + " has no finite tolerance");
    validate_witness(cfg.w);
    if (! same_problem(cfg.w.target, cfg.p) || cfg.w.source->name != parallel_product(cfg.q, cfg.p)->name)
        throw InputError("squash config '" + cfg.name + "': witness is for " + cfg.w.source->name + " <= "
                + cfg.w.target->name);
    if (cfg.fuel == 0)
        throw InputError("squash config '" + cfg.name + "': fuel must be positive");
}

auto wred::squash_markers(const SquashConfig & cfg, MarkerStats * stats) -> vector<Pos>
{
    validate_squash(cfg);
    SquashEngine e(cfg);
    auto m = e.markers_to(cfg.stages);
    if (stats)
        stats->leaves = e.leaves();
    return m;
}

auto wred::squash_forward(const SquashConfig & cfg, const vector<Pos> & markers, const Point & fam,
        std::size_t count, Pos horizon) -> SquashTable
{
    validate_squash(cfg);
    SquashEngine e(cfg, markers);
    SquashTable t;
    t.horizon = horizon;
    t.markers = e.markers_to(max<Pos>(horizon, count + 1));
    auto cols = family_columns(fam);
    for (std::size_t i = 0 ; i <= count ; ++i) {
        vector<int> row;
        for (Pos x = 0 ; x < horizon ; ++x)
            row.push_back(b_value(e, i, x, cols));
        t.rows.push_back(std::move(row));
    }
    return t;
}

auto wred::check_squash_identity(const SquashConfig & cfg, const SquashTable & t, const Point & fam, std::size_t count) -> void
{
    if (t.rows.size() < count + 1)
        throw InputError("squash table has " + to_string(t.rows.size()) + " rows, need " + to_string(count + 1));
    SquashEngine e(cfg, t.markers);
    auto cols = family_columns(fam);
    for (std::size_t i = 0 ; i < count ; ++i) {
        for (Pos x = 0 ; x < t.horizon ; ++x) {
            if (x < t.markers.at(i)) {
                if (t.rows[i][x] != cfg.c.at(x))
                    throw ContractError("B_" + to_string(i) + "(" + to_string(x) + ") differs from C below m_" + to_string(i));
                continue;
            }
            // past the table, B_{i+1} is read from the stage rule itself
            auto next = [&, i] (Pos p) { return p < t.horizon ? t.rows[i + 1][p] : b_value(e, i + 1, p, cols); };
            auto r = evaluate(cfg.w.forward, {Point{"pair", [&, i] (Pos p) {
                return p % 2 == 0 ? fam.at(cantor_pair(i, p / 2)) : next(p / 2);
            }}}, x, cfg.fuel);
            if (! r.converged())
                throw ContractError("Phi(A_" + to_string(i) + ", B_" + to_string(i + 1) + ") diverges at " + to_string(x));
            if (r.value != t.rows[i][x])
                throw ContractError("squash identity fails: B_" + to_string(i) + "(" + to_string(x) + ") = "
                        + to_string(t.rows[i][x]) + " but Phi(A_" + to_string(i) + ", B_" + to_string(i + 1) + ") gives "
                        + to_string(r.value));
        }
    }
}

auto wred::squash_backward(const SquashConfig & cfg, const vector<Pos> & markers, const Point & t0,
        std::size_t count, const Point & fam) -> SquashChain
{
    validate_squash(cfg);
    auto e = make_shared<SquashEngine>(cfg, markers);
    auto m = e->markers_to(count);
    SquashChain chain;
    chain.t.push_back(t0);
    auto cols = family_columns(fam);
    for (std::size_t i = 0 ; i < count ; ++i) {
        string depth = "squash chain depth " + to_string(i);
        auto u = apply_point(cfg.p->tolerance(m[i]), {chain.t.back()}, cfg.fuel, depth + " theta");
        Point r = cfg.w.kind == Kind::Strong
            ? apply_point(cfg.w.backward, {u}, cfg.fuel, depth + " psi")
            : apply_point(cfg.w.backward, {Point{"<A,B>", [e, cols, fam, i] (Pos p) {
                    return p % 2 == 0 ? fam.at(cantor_pair(i, p / 2)) : b_value(*e, i + 1, p / 2, cols);
                }}, u}, cfg.fuel, depth + " psi");
        chain.s.push_back(even_bits(r));
        chain.t.push_back(odd_bits(r));
    }
    return chain;
}

auto wred::squash(const SquashConfig & cfg) -> Witness
{
    validate_squash(cfg);
    auto e = make_shared<SquashEngine>(cfg);
    Witness w;
    w.id = "squash(" + (cfg.name.empty() ? cfg.w.id : cfg.name) + ")";
    w.source = seq(cfg.q);
    w.target = cfg.p;
    w.kind = cfg.w.kind;
    w.forward = Functional{1, [e] (Query & q, Pos x) {
        return e->b_bit(0, x, tape_columns(q.tape(0)), q.budget());
    }, w.id + " forward"};
    auto p = cfg.p;
    auto inner = cfg.w;
    // column i of the answer is S_i; T_{l+1} is the odd half of Psi(Theta(T_l, m_l))
    auto back = [e, p, inner] (Query & q, TapeFn instance, TapeFn t0, Pos z) -> int {
        auto [i, y] = cantor_unpair(z);
        auto m = e->markers_to(i);
        TapeFn t = t0;
        for (Pos l = 0 ; ; ++l) {
            auto u = applied(p->tolerance(m[l]), {t}, q.budget());
            TapeFn level_instance;
            if (inner.kind == Kind::Plain) {
                auto cols = tape_columns(instance);
                auto & budget = q.budget();
                level_instance = pair_tape(cols(l), [e, cols, l, &budget] (Pos x) { return e->b_bit(l + 1, x, cols, budget); });
            }
            auto r = applied(inner.backward, backward_tapes(inner, level_instance, u), q.budget());
            if (l == i)
                return r(2 * y);
            t = odds(r);
        }
    };
    if (w.kind == Kind::Strong)
        w.backward = Functional{1, [back] (Query & q, Pos z) { return back(q, TapeFn{}, q.tape(0), z); }, w.id + " backward"};
    else
        w.backward = Functional{2, [back] (Query & q, Pos z) { return back(q, q.tape(0), q.tape(1), z); }, w.id + " backward"};
    return w;
}

auto wred::split_digits(std::uint64_t c, std::uint64_t base, std::size_t s) -> vector<std::uint64_t>
{
    if (base < 1)
        throw InputError("digit base must be positive");
    vector<std::uint64_t> ds;
    for (std::size_t i = 0 ; i < s ; ++i) {
        ds.push_back(base == 1 ? 0 : c % base);
        if (base > 1)
            c /= base;
    }
    if (c != 0 && base > 1)
        throw InputError("colour has more than " + to_string(s) + " base-" + to_string(base) + " digits");
    return ds;
}

auto wred::merge_digits(const vector<std::uint64_t> & ds, std::uint64_t base) -> std::uint64_t
{
    std::uint64_t c = 0, w = 1;
    for (auto d : ds) {
        if (d >= base)
            throw InputError("digit " + to_string(d) + " out of range for base " + to_string(base));
        c += d * w;
        w *= base;
    }
    return c;
}

namespace
{
    auto ipow(std::uint64_t b, std::size_t e) -> std::uint64_t
    {
        std::uint64_t r = 1;
        for (std::size_t i = 0 ; i < e ; ++i)
            r *= b;
        return r;
    }
}

auto wred::split_coloring(const Coloring & f, std::uint64_t k, std::size_t s) -> vector<Coloring>
{
    if (! f.colors || *f.colors != ipow(k, s))
        throw InputError("splitting needs a colouring with exactly " + to_string(k) + "^" + to_string(s) + " colours");
    vector<Coloring> gs;
    for (std::size_t i = 0 ; i < s ; ++i)
        gs.push_back(Coloring{f.arity, k, [f, k, s, i] (const Tuple & t) { return split_digits(f(t), k, s)[i]; },
            f.name + "#" + to_string(i)});
    return gs;
}

auto wred::merge_colorings(const vector<Coloring> & gs, std::uint64_t j) -> Coloring
{
    if (gs.empty())
        throw InputError("merging no colourings");
    return Coloring{gs[0].arity, ipow(j, gs.size()), [gs, j] (const Tuple & t) {
        vector<std::uint64_t> ds;
        for (auto & g : gs)
            ds.push_back(g(t));
        return merge_digits(ds, j);
    }, "merge"};
}

namespace
{
    auto parse_rt(const Problem & p) -> pair<std::size_t, std::uint64_t>
    {
        std::size_t n = 0;
        unsigned long long k = 0;
        char tail = 0;
        if (! p || std::sscanf(p->name.c_str(), "RT%zu_%llu%c", &n, &k, &tail) != 2)
            throw InputError("fan-out needs Ramsey problems, got " + (p ? p->name : string("nothing")));
        return {n, k};
    }
}

auto wred::fanout_rt(const Witness & w, std::size_t s) -> Witness
{
    validate_witness(w);
    if (w.kind != Kind::Strong)
        throw InputError("fan-out needs a strong witness: '" + w.id + "' is plain, and its backward functional "
                "would have to know which digit colouring it is answering for");
    if (s == 0)
        throw InputError("fan-out power must be at least 1");
    auto [n, k] = parse_rt(w.source);
    auto [n2, j] = parse_rt(w.target);
    if (n != n2)
        throw InputError("fan-out needs matching exponents");
    auto ks = ipow(k, s), js = ipow(j, s);
    Witness r;
    r.id = "fanout(" + w.id + "," + to_string(s) + ")";
    r.source = rt(n, ks);
    r.target = rt(n, js);
    r.kind = Kind::Strong;
    auto phi = w.forward;
    r.forward = Functional{1, [phi, n, k, s, ks, j, js] (Query & q, Pos pos) {
        auto a = q.tape(0);
        auto & b = q.budget();
        // g = sum j^i g_i with g_i = Phi(i-th base-k digit of f)
        return encode_color_bit(n, js, pos, [&] (const Tuple & t) {
            std::uint64_t g = 0, weight = 1;
            for (std::size_t i = 0 ; i < s ; ++i) {
                TapeFn digit = [a, n, k, s, ks, i] (Pos p) {
                    return encode_color_bit(n, k, p, [&] (const Tuple & u) {
                        return split_digits(read_color(a, n, ks, u), k, s)[i];
                    });
                };
                g += weight * read_color(applied(phi, {digit}, b), n, j, t);
                weight *= j;
            }
            return g;
        });
    }, r.id + " forward"};
    r.backward = w.backward;
    return r;
}

auto wred::check_sample(const Witness & w, const Point & a, const Scale & sc, const Scale * target_sc) -> Verdict
{
    const Scale & tsc = target_sc ? *target_sc : sc;
    try {
        auto sv = w.source->check_instance(a, sc);
        if (! sv.ok())
            return Verdict::inconclusive("sampled instance rejected: " + sv.detail);
        for (Pos x = 0 ; x < 4 ; ++x)
            check_contract(w.forward, {a}, x, sc.fuel);
        auto b = forward_image(w, a, sc.fuel);
        auto tv = w.target->check_instance(b, tsc);
        if (tv.failed())
            return Verdict::fail("forward image is not a " + w.target->name + " instance: " + tv.detail);
        if (! tv.ok())
            return Verdict::inconclusive("forward image: " + tv.detail);
        auto t = w.target->solve(b, tsc);
        if (! t)
            return Verdict::inconclusive("no " + w.target->name + " solution at horizon " + to_string(tsc.horizon));
        auto own = w.target->verify_at(b, *t, tsc);
        if (own.failed())
            return Verdict::fail("brute-force solution rejected by its own verifier: " + own.detail);
        auto s = backward_image(w, a, *t, sc.fuel);
        auto v = w.source->verify_at(a, s, sc);
        v.detail = "backward image: " + v.detail;
        return v;
    }
    catch (const ResourceError & e) {
        return Verdict::inconclusive(string("resource: ") + e.what());
    }
    catch (const ContractError & e) {
        return Verdict::fail(string("contract: ") + e.what());
    }
}

auto wred::check_witness(const Witness & w, const Sampler & sample, std::uint64_t samples, const Scale & sc,
        std::uint64_t seed, const Scale * target_sc) -> SoundnessReport
{
    validate_witness(w);
    SoundnessReport r;
    for (std::uint64_t i = 0 ; i < samples ; ++i) {
        auto v = check_sample(w, sample(mix64(seed) ^ i), sc, target_sc);
        ++r.samples;
        switch (v.status) {
            case Status::Pass: ++r.passed; break;
            case Status::Fail: ++r.failed; break;
            case Status::Inconclusive: ++r.inconclusive; break;
        }
        r.details.push_back("sample " + to_string(i) + ": " + status_name(v.status) + (v.detail.empty() ? "" : " " + v.detail));
    }
    return r;
}
