#include <wred/adversaries.hh>
#include <wred/error.hh>

#include <algorithm>
#include <map>
#include <set>

using namespace wred;

using std::function;
using std::make_shared;
using std::map;
using std::nullopt;
using std::optional;
using std::pair;
using std::set;
using std::shared_ptr;
using std::string;
using std::to_string;
using std::vector;

auto wred::attempt(const Functional & f, vector<TapeFn> tapes, Pos x, Pos fuel) -> optional<int>
{
    Budget b(fuel);
    try {
        return run_on(f, std::move(tapes), b, x);
    }
    catch (const OutOfFuel &) {
    }
    catch (const PrefixOverrun &) {
    }
    return nullopt;
}

namespace
{
    auto prefix_tape(const Prefix & p) -> TapeFn
    {
        return as_tape(Oracle{p});
    }

    auto set_prefix(const vector<Pos> & s) -> Prefix
    {
        if (s.empty())
            return Prefix{};
        vector<std::uint8_t> bits(*std::max_element(s.begin(), s.end()) + 1, 0);
        for (auto x : s)
            bits[x] = 1;
        return Prefix{std::move(bits)};
    }

    auto bits_string(std::uint64_t alpha, unsigned a) -> string
    {
        string s;
        for (unsigned j = 0 ; j < a ; ++j)
            s += ((alpha >> j) & 1) ? '1' : '0';
        return s;
    }

    auto join(const vector<Pos> & xs) -> string
    {
        string s;
        for (std::size_t i = 0 ; i < xs.size() ; ++i)
            s += (i ? "," : "") + to_string(xs[i]);
        return s;
    }

    auto children(const vector<Prefix> & level) -> vector<Prefix>
    {
        vector<Prefix> out;
        for (auto & t : level)
            for (int b : {0, 1}) {
                auto c = t;
                c.push_back(b);
                out.push_back(c);
            }
        return out;
    }

    // a colour in the b-bit block of y, most significant bit first
    auto read_block(Query & q, Pos y, unsigned b) -> std::uint64_t
    {
        std::uint64_t v = 0;
        for (unsigned t = 0 ; t < b ; ++t)
            v = 2 * v + q.bit(0, y * b + t);
        return v;
    }

    auto block_bit(std::uint64_t c, unsigned b, Pos pos) -> int
    {
        return (c >> (b - 1 - pos % b)) & 1;
    }

    auto ceil_inverse(const Rational & q) -> std::uint64_t
    {
        Rational r = 1 / q;
        mpz_class c = (r.get_num() + r.get_den() - 1) / r.get_den();
        return c.get_ui();
    }
}

// qWWKL

auto wred::qwwkl_exponent(const Rational & p, const Rational & q) -> unsigned
{
    if (! (0 <= p && p < q && q <= 1))
        throw InputError("need 0 <= p < q <= 1");
    unsigned a = 0;
    while (! (pow2_inverse(a) < q - p))
        ++a;
    return a;
}

auto wred::qwwkl_cutter(const Functional & phi, const Functional & psi, const QwwklConfig & cfg) -> QwwklResult
{
    if (phi.arity != 1)
        throw InputError("phi must read one tree");
    if (psi.arity != 1 && psi.arity != 2)
        throw InputError("psi must read a path, and optionally the tree");

    QwwklResult r;
    r.a = qwwkl_exponent(cfg.p, cfg.q);
    auto a = r.a;
    auto actions = make_shared<vector<QwwklAction>>();

    auto member = [actions, a] (const Prefix & t) {
        for (auto & act : *actions) {
            if (t.length() < act.stage)
                continue;
            bool match = true;
            for (unsigned j = 0 ; j < a && match ; ++j)
                match = t.at(act.xs[j]) == int((act.alpha >> j) & 1);
            if (match)
                return false;
        }
        return true;
    };

    Rational cut = 1 - pow2_inverse(a);
    Rational measure = 1;
    map<Pos, int> phi_memo;
    Pos next_x = 0;
    r.log = StageLog("qwwkl");

    for (Pos s = 0 ; s < cfg.stages ; ++s) {
        // the code of T_s; strings longer than s are not fixed yet
        TapeFn tree_tape = [member, s] (Pos pos) -> int {
            auto t = index_string(pos);
            if (t.length() > s)
                throw PrefixOverrun{};
            return member(t) ? 1 : 0;
        };
        auto phi_at = [&] (const Prefix & t) -> optional<int> {
            auto i = string_index(t);
            auto it = phi_memo.find(i);
            if (it != phi_memo.end())
                return it->second;
            auto v = attempt(phi, {tree_tape}, i, cfg.fuel);
            if (v)
                phi_memo.emplace(i, *v);
            return v;
        };

        // the deepest level of Phi(T_s) on which every candidate has converged
        optional<vector<Prefix>> level;
        Pos height = 0;
        if (auto root = phi_at(Prefix{})) {
            level = *root ? vector<Prefix>{Prefix{}} : vector<Prefix>{};
            for (Pos n = 1 ; n <= std::min(s, cfg.height_cap) && ! level->empty() ; ++n) {
                vector<Prefix> next;
                bool all = true;
                for (auto & c : children(*level)) {
                    auto v = phi_at(c);
                    if (! v) {
                        all = false;
                        break;
                    }
                    if (*v)
                        next.push_back(c);
                }
                if (! all)
                    break;
                level = std::move(next);
                height = n;
            }
        }

        Rational phi_measure = level ? Rational(level->size()) * pow2_inverse(height) : Rational(0);
        r.phi_measure = phi_measure;
        r.phi_height = height;
        string note = "height=" + to_string(height) + ";phi=" + wred::to_string(phi_measure);

        vector<Pos> xs;
        for (unsigned j = 0 ; j < a ; ++j)
            xs.push_back(next_x + j);

        optional<string> why;
        if (! level || phi_measure < cfg.q)
            why = "phi below q";
        else if (a > 0 && xs.back() >= s)
            why = "x past stage";

        map<std::uint64_t, std::size_t> counts;
        if (! why) {
            for (auto & t : *level) {
                vector<TapeFn> tapes{prefix_tape(t)};
                if (psi.arity == 2)
                    tapes.push_back(tree_tape);
                std::uint64_t alpha = 0;
                for (unsigned j = 0 ; j < a && ! why ; ++j) {
                    auto v = attempt(psi, tapes, xs[j], cfg.fuel);
                    if (! v)
                        why = "psi diverges on " + t.to_string() + " at " + to_string(xs[j]);
                    else if (*v)
                        alpha |= std::uint64_t(1) << j;
                }
                if (why)
                    break;
                ++counts[alpha];
            }
        }

        if (why) {
            r.log.append(StageRecord{s + 1, "1", "", measure, measure, note + ";" + *why, {}, {}});
            continue;
        }

        auto best = counts.begin();
        for (auto it = counts.begin() ; it != counts.end() ; ++it)
            if (it->second > best->second)
                best = it;
        if (Rational(best->second) < Rational(level->size()) * pow2_inverse(a))
            throw ContractError("no alpha holds 2^-a of the level");

        actions->push_back(QwwklAction{s + 1, xs, best->first});
        next_x += a;
        auto before = measure;
        measure *= cut;
        r.log.append(StageRecord{s + 1, "2", "x=" + join(xs) + ";alpha=" + bits_string(best->first, a),
                before, measure, note + ";count=" + to_string(best->second) + "/" + to_string(level->size()), {}, {}});
    }

    r.actions = *actions;
    r.measure = measure;
    r.tree = TreeByRule{member, cfg.p, "qwwkl-cut"};
    return r;
}

// TS1

auto wred::ts1_diagonalizer(const Functional & phi, const Functional & psi, const Ts1Config & cfg) -> Ts1Result
{
    if (cfg.j < 2 || cfg.k < 2)
        throw InputError("need j, k >= 2");
    if (cfg.stages < cfg.horizon)
        throw InputError("stages must reach the horizon");
    if (phi.arity != 1 || psi.arity != 1)
        throw InputError("phi and psi read one tape each");

    Ts1Result r;
    r.log = StageLog("ts1");
    auto b = color_bits(cfg.j), bk = color_bits(cfg.k);
    auto f = make_shared<vector<std::uint64_t>>();
    TapeFn f_tape = [f, b] (Pos pos) -> int {
        auto x = pos / b;
        if (x >= f->size())
            throw PrefixOverrun{};
        return block_bit((*f)[x], b, pos);
    };

    map<Pos, int> phi_memo;
    auto phi_color = [&] (Pos y) -> optional<std::uint64_t> {
        std::uint64_t v = 0;
        for (unsigned t = 0 ; t < bk ; ++t) {
            auto pos = y * bk + t;
            auto it = phi_memo.find(pos);
            optional<int> bit;
            if (it != phi_memo.end())
                bit = it->second;
            else if ((bit = attempt(phi, {f_tape}, pos, cfg.fuel)))
                phi_memo.emplace(pos, *bit);
            if (! bit)
                return nullopt;
            v = 2 * v + *bit;
        }
        return v % cfg.k;
    };

    map<pair<vector<Pos>, Pos>, optional<int>> psi_memo;
    auto psi_on = [&] (const vector<Pos> & s, Pos x) -> optional<int> {
        auto key = std::make_pair(s, x);
        auto it = psi_memo.find(key);
        if (it != psi_memo.end())
            return it->second;
        auto v = attempt(psi, {prefix_tape(set_prefix(s))}, x, cfg.fuel);
        psi_memo.emplace(key, v);
        return v;
    };

    set<std::uint64_t> valid;
    for (std::uint64_t c = 0 ; c < cfg.j ; ++c)
        valid.insert(c);
    vector<Pos> u;

    for (Pos s = 1 ; s <= cfg.stages ; ++s) {
        Rational before(valid.size());
        bool acted = false;
        if (r.fsets.size() + 1 < cfg.j) {
            Pos lo = u.empty() ? 0 : u.back() + 1;
            Pos dom = f->size();
            map<Pos, optional<std::uint64_t>> colours;
            for (Pos y = lo ; y < s ; ++y)
                colours[y] = phi_color(y);

            vector<Pos> cand;
            optional<pair<vector<Pos>, Pos>> found;
            function<void (Pos)> search = [&] (Pos from) {
                for (Pos y = from ; y < s && ! found ; ++y) {
                    if (! colours[y] || (! cand.empty() && colours[y] != colours[cand.front()]))
                        continue;
                    cand.push_back(y);
                    auto uf = u;
                    uf.insert(uf.end(), cand.begin(), cand.end());
                    for (Pos x = 0 ; x < dom && ! found ; ++x) {
                        if (! valid.contains((*f)[x]) || psi_on(u, x))
                            continue;
                        auto v = psi_on(uf, x);
                        if (v && *v == 1)
                            found = std::make_pair(cand, x);
                    }
                    if (! found && cand.size() < cfg.max_f)
                        search(y + 1);
                    cand.pop_back();
                }
            };
            search(lo);

            if (found) {
                auto & [fs, x] = *found;
                r.fsets.push_back(fs);
                r.xs.push_back(x);
                r.action_stages.push_back(s);
                u.insert(u.end(), fs.begin(), fs.end());
                auto colour = (*f)[x];
                valid.erase(colour);
                r.log.append(StageRecord{s, "act", "F=" + join(fs) + ";x=" + to_string(x),
                        before, Rational(valid.size()), "colour " + to_string(colour) + " invalidated", {colour}, {}});
                acted = true;
            }
        }
        if (! acted)
            r.log.append(StageRecord{s, "wait", "", before, before, "", {}, {}});
        // f_s extends f_{s-1} by the least valid colour
        f->push_back(*valid.begin());
    }

    r.f = *f;
    r.valid.assign(valid.begin(), valid.end());

    Pos lo = u.empty() ? 0 : u.back() + 1;
    map<std::uint64_t, vector<Pos>> classes;
    bool undefined = false;
    for (Pos y = lo ; y < cfg.horizon ; ++y) {
        if (auto c = phi_color(y))
            classes[*c].push_back(y);
        else
            undefined = true;
    }
    for (auto & [c, ys] : classes)
        if (ys.size() > r.h.size())
            r.h = ys;
    r.t = u;
    r.t.insert(r.t.end(), r.h.begin(), r.h.end());

    set<std::uint64_t> pc;
    for (auto y : r.t)
        if (auto c = phi_color(y))
            pc.insert(*c);
        else
            undefined = true;
    r.phi_colors.assign(pc.begin(), pc.end());

    bool diverges = false;
    set<std::uint64_t> fc;
    vector<std::uint8_t> padded(cfg.horizon, 0);
    for (auto y : r.t)
        padded[y] = 1;
    Prefix t_code{padded};
    for (Pos x = 0 ; x < cfg.horizon ; ++x) {
        auto v = attempt(psi, {prefix_tape(t_code)}, x, cfg.fuel);
        if (! v) {
            diverges = true;
            continue;
        }
        if (*v == 1) {
            r.psi_output.push_back(x);
            if (x < r.f.size())
                fc.insert(r.f[x]);
        }
    }
    r.psi_colors.assign(fc.begin(), fc.end());

    auto l = r.fsets.size();
    if (l + 1 > cfg.j)
        r.verdict = Verdict::fail("acted " + to_string(l) + " times");
    else if (pc.size() > l + 1)
        r.verdict = Verdict::fail("T carries " + to_string(pc.size()) + " colours of phi(f)");
    else if (undefined)
        r.verdict = Verdict::inconclusive("phi(f) undefined below the horizon");
    else if (pc.size() >= cfg.k)
        r.verdict = Verdict::inconclusive("T is not thin at this scale");
    else if (fc.size() == cfg.j)
        r.verdict = Verdict::pass("psi(T) meets every colour of f");
    else if (diverges)
        r.verdict = Verdict::pass("psi(T) diverges below the horizon");
    else
        r.verdict = Verdict::inconclusive("psi(T) is thin for f below the horizon");
    return r;
}

auto wred::ts1_toys(std::uint64_t j, std::uint64_t k) -> vector<ToyPair>
{
    auto b = color_bits(j), bk = color_bits(k);
    auto recolor = [b, bk, k] (function<std::uint64_t (std::uint64_t, Pos)> fn, string label) {
        return Functional{1, [b, bk, k, fn] (Query & q, Pos pos) {
            auto y = pos / bk;
            auto c = fn(read_block(q, y, b), y) % k;
            return block_bit(c, bk, pos);
        }, label};
    };
    auto echo = Functional{1, [] (Query & q, Pos x) { return q.bit(0, x); }, "echo"};
    auto silent = Functional{1, [] (Query & q, Pos x) { return q.bit(0, x + (Pos(1) << 20)); }, "silent"};
    auto shift = Functional{1, [] (Query & q, Pos x) { return q.bit(0, x + 1); }, "shift"};
    auto evens = Functional{1, [] (Query & q, Pos x) { return q.bit(0, 2 * x); }, "evens"};
    auto same = recolor([] (std::uint64_t c, Pos) { return c; }, "recolour");
    auto up = recolor([] (std::uint64_t c, Pos) { return c + 1; }, "recolour+1");
    auto parity = recolor([] (std::uint64_t c, Pos y) { return c ^ (y & 1); }, "parity");
    auto two = Functional{1, [bk, k] (Query &, Pos pos) { return block_bit(2 % k, bk, pos); }, "constant-2"};
    return {
        {"recolour-echo", same, echo},
        {"recolour-silent", same, silent},
        {"shift", up, shift},
        {"constant-evens", two, evens},
        {"parity-echo", parity, echo},
    };
}

// Delta2

struct Delta2Instance::State
{
    std::uint64_t k;
    Delta2Approx g;
    map<std::uint64_t, vector<std::uint64_t>> cols;
    map<std::uint64_t, vector<Pos>> case2;
};

Delta2Instance::Delta2Instance(std::uint64_t k, Delta2Approx g) :
    _state(make_shared<State>(State{k, std::move(g), {}, {}}))
{
    if (k < 2)
        throw InputError("need k >= 2");
}

auto Delta2Instance::k() const -> std::uint64_t
{
    return _state->k;
}

auto Delta2Instance::color(std::uint64_t i, Pos s) const -> std::uint64_t
{
    auto & st = *_state;
    auto & col = st.cols[i];
    while (col.size() <= s) {
        Pos t = col.size();
        set<std::uint64_t> c;
        for (Pos a = 0 ; a < t ; ++a)
            if (st.g.g(i, i, a, t) == 1)
                c.insert(col[a]);
        optional<std::uint64_t> pick;
        for (std::uint64_t n = 0 ; n < st.k && ! pick ; ++n)
            if (! c.contains(n))
                pick = n;
        if (! pick) {
            // every colour is in C, so every colour has occurred; take the one
            // that occurred first the latest
            map<std::uint64_t, Pos> first;
            for (Pos a = 0 ; a < t ; ++a)
                first.emplace(col[a], a);
            pick = 0;
            for (auto & [n, at] : first)
                if (at > first[*pick])
                    pick = n;
            st.case2[i].push_back(t);
        }
        col.push_back(*pick);
    }
    return col[s];
}

auto Delta2Instance::column(std::uint64_t i) const -> Coloring
{
    auto self = *this;
    return Coloring{1, _state->k, [self, i] (const Tuple & t) { return self.color(i, t.at(0)); },
        "delta2(" + _state->g.name + ")[" + to_string(i) + "]"};
}

auto Delta2Instance::point() const -> Point
{
    auto self = *this;
    return family([self] (std::uint64_t i) { return encode_coloring(self.column(i)); }, "delta2(" + _state->g.name + ")");
}

auto Delta2Instance::log(std::uint64_t i, Pos horizon) const -> StageLog
{
    if (horizon > 0)
        color(i, horizon - 1);
    StageLog out("delta2[" + to_string(i) + "]");
    for (auto t : _state->case2[i])
        if (t < horizon)
            out.append(StageRecord{t, "2", "colour=" + to_string(color(i, t)), 0, 0, "", {}, {}});
    return out;
}

auto Delta2Instance::check_defeats(std::uint64_t e, Pos horizon) const -> Verdict
{
    auto & st = *_state;
    vector<Pos> d;
    bool declared = bool(st.g.stable);
    for (Pos a = 0 ; a < horizon ; ++a) {
        Pos s = declared ? std::max<Pos>(st.g.stable(e, e, a), a + 1) : 4 * horizon;
        if (st.g.g(e, e, a, s) == 1)
            d.push_back(a);
    }
    set<std::uint64_t> colours;
    for (auto a : d)
        colours.insert(color(e, a));
    string tail = declared ? "" : " (no declared stabilization)";
    if (colours.size() == st.k)
        return Verdict::pass("D_" + to_string(e) + " meets all " + to_string(st.k) + " colours" + tail);
    if (d.empty() || d.back() < horizon / 2)
        return Verdict::pass("D_" + to_string(e) + " is finite at the horizon" + tail);
    return Verdict::fail("D_" + to_string(e) + " misses a colour of f_" + to_string(e) + " below " + to_string(horizon) + tail);
}

auto wred::delta2_diagonalizer(std::uint64_t k, Delta2Approx g) -> Delta2Instance
{
    return Delta2Instance(k, std::move(g));
}

// rainbow colourings

namespace
{
    // Phi(sigma)(x) for x below a bound, memoized
    class Outputs
    {
        private:
            Functional _phi;
            Pos _fuel;
            map<pair<Pos, Pos>, optional<int>> _memo;

        public:
            Outputs(Functional phi, Pos fuel) :
                _phi(std::move(phi)),
                _fuel(fuel)
            {
            }

            auto ones(const Prefix & sigma, Pos bound) -> vector<Pos>
            {
                auto i = string_index(sigma);
                vector<Pos> out;
                for (Pos x = 0 ; x < bound ; ++x) {
                    auto key = std::make_pair(i, x);
                    auto it = _memo.find(key);
                    if (it == _memo.end())
                        it = _memo.emplace(key, attempt(_phi, {prefix_tape(sigma)}, x, _fuel)).first;
                    if (it->second && *it->second == 1)
                        out.push_back(x);
                }
                return out;
            }
    };

    struct CmState
    {
        Outputs out;
        optional<Prefix> w;
        optional<Pos> trigger;
        Pos searched = 0;
        map<Pos, optional<pair<Pos, Pos>>> pairs;

        auto pair_at(Pos s) -> optional<pair<Pos, Pos>>
        {
            auto it = pairs.find(s);
            if (it != pairs.end())
                return it->second;
            while (! w && searched < s) {
                ++searched;
                for (Pos i = 0 ; i < searched && ! w ; ++i)
                    if (out.ones(index_string(i), searched).size() >= 2) {
                        w = index_string(i);
                        trigger = searched;
                    }
            }
            optional<pair<Pos, Pos>> p;
            if (w && *trigger <= s) {
                auto xs = out.ones(*w, s);
                if (xs.size() >= 2)
                    p = std::make_pair(xs[0], xs[1]);
            }
            pairs.emplace(s, p);
            return p;
        }
    };
}

auto wred::cm_coloring(const Functional & phi, Pos horizon, Pos fuel) -> CmColoring
{
    if (phi.arity != 1)
        throw InputError("phi reads one set");
    auto st = make_shared<CmState>(CmState{Outputs(phi, fuel), nullopt, nullopt, 0, {}});
    CmColoring r;
    r.f = Coloring{2, nullopt, [st] (const Tuple & t) -> std::uint64_t {
        auto z = t.at(0), s = t.at(1);
        if (auto p = st->pair_at(s); p && (z == p->first || z == p->second))
            return cantor_pair(p->first, s);
        return cantor_pair(z, s);
    }, "cm(" + phi.label + ")"};
    if (auto p = st->pair_at(horizon))
        r.excluded = Exclusion{p->first, p->second, *st->w};
    r.trigger_stage = st->trigger;
    return r;
}

auto wred::comparable(const Prefix & a, const Prefix & b) -> bool
{
    auto n = std::min(a.length(), b.length());
    return a.take(n) == b.take(n);
}

auto wred::cylinder_measure(const vector<Prefix> & f) -> Rational
{
    auto sorted = f;
    std::sort(sorted.begin(), sorted.end(), [] (const Prefix & a, const Prefix & b) {
        return a.length() < b.length() || (a.length() == b.length() && a < b);
    });
    vector<Prefix> minimal;
    for (auto & p : sorted)
        if (std::none_of(minimal.begin(), minimal.end(), [&] (const Prefix & m) { return comparable(m, p); }))
            minimal.push_back(p);
    Rational m = 0;
    for (auto & p : minimal)
        m += pow2_inverse(p.length());
    return m;
}

auto wred::rainbow_measure_coloring(const Functional & phi, const Rational & q, const RainbowMeasureConfig & cfg) -> RainbowMeasure
{
    if (phi.arity != 1)
        throw InputError("phi reads one set");
    if (! (0 < q && q <= 1))
        throw InputError("need 0 < q <= 1");
    Pos strings = (Pos(1) << (cfg.max_length + 1)) - 1;
    if (cfg.max_length > 20 || strings > cfg.candidate_limit)
        throw ResourceError("cylinder search budget exceeded at frontier length " + to_string(cfg.max_length));

    RainbowMeasure r;
    r.q = q;
    r.log = StageLog("rainbow-measure");
    Outputs out(phi, cfg.fuel);
    set<Pos> used;
    vector<Prefix> taken;
    Rational remaining = 1;

    for (Pos s = 1 ; s < cfg.horizon ; ++s) {
        // good strings, in index order, each with its least unused pair
        vector<pair<Prefix, pair<Pos, Pos>>> good;
        for (Pos i = 0 ; i < strings ; ++i) {
            auto sigma = index_string(i);
            if (std::any_of(taken.begin(), taken.end(), [&] (const Prefix & t) { return comparable(t, sigma); }))
                continue;
            vector<Pos> free;
            for (auto x : out.ones(sigma, s))
                if (! used.contains(x))
                    free.push_back(x);
            if (free.size() >= 2)
                good.emplace_back(sigma, std::make_pair(free[0], free[1]));
        }
        FSet fs;
        for (auto & [sigma, xy] : good) {
            if (cylinder_measure(fs.strings) >= q)
                break;
            if (std::any_of(fs.strings.begin(), fs.strings.end(), [&] (const Prefix & t) { return comparable(t, sigma); }))
                continue;
            fs.strings.push_back(sigma);
            fs.used.push_back(xy.first);
            fs.used.push_back(xy.second);
        }
        fs.measure = cylinder_measure(fs.strings);
        if (fs.strings.empty() || fs.measure < q)
            continue;
        std::sort(fs.used.begin(), fs.used.end());
        fs.used.erase(std::unique(fs.used.begin(), fs.used.end()), fs.used.end());
        fs.stage = s;
        for (auto x : fs.used)
            used.insert(x);
        taken.insert(taken.end(), fs.strings.begin(), fs.strings.end());
        string acted;
        for (auto & t : fs.strings)
            acted += (acted.empty() ? "" : ";") + (t.length() ? t.to_string() : string("e"));
        auto before = remaining;
        remaining -= fs.measure;
        r.log.append(StageRecord{s, "F", acted, before, remaining, "used=" + join(fs.used), {}, {}});
        r.fsets.push_back(std::move(fs));
    }

    for (auto & fs : r.fsets)
        r.bound = std::max<std::uint64_t>(r.bound, fs.used.size());

    auto sets = make_shared<vector<FSet>>(r.fsets);
    r.f = Coloring{2, nullopt, [sets] (const Tuple & t) -> std::uint64_t {
        auto z = t.at(0), s = t.at(1);
        for (auto & fs : *sets)
            if (fs.stage <= s && std::binary_search(fs.used.begin(), fs.used.end(), z))
                return cantor_pair(fs.used.front(), s);
        return cantor_pair(z, s);
    }, "rainbow-measure(" + phi.label + ")"};

    r.verdict = Verdict::pass(to_string(r.fsets.size()) + " sets, bound " + to_string(r.bound));
    for (std::size_t m = 0 ; m < r.fsets.size() ; ++m) {
        if (r.fsets[m].measure < q)
            r.verdict = Verdict::fail("set " + to_string(m) + " has measure below q");
        for (std::size_t n = 0 ; n < m ; ++n)
            for (auto & a : r.fsets[m].strings)
                for (auto & b : r.fsets[n].strings)
                    if (comparable(a, b))
                        r.verdict = Verdict::fail("sets " + to_string(n) + " and " + to_string(m) + " overlap");
    }
    if (r.fsets.size() > ceil_inverse(q))
        r.verdict = Verdict::fail("more than 1/q sets");
    r.verdict = worst(r.verdict, is_bounded(r.f, cfg.horizon, r.bound));
    return r;
}

auto wred::column_restrict(const Functional & phi, std::uint64_t e, std::uint64_t j) -> Functional
{
    auto c = cantor_pair(e, j);
    return Functional{phi.arity, [phi, c] (Query & q, Pos x) { return phi.step(q, cantor_pair(x, c)); },
        phi.label + "|<" + to_string(e) + "," + to_string(j) + ">"};
}

auto wred::rrt_column_splitter(const Functional & phi, std::uint64_t e, std::uint64_t count,
        const RainbowMeasureConfig & cfg) -> vector<SplitColumn>
{
    vector<SplitColumn> out;
    for (std::uint64_t j = 1 ; j <= count ; ++j)
        out.push_back(SplitColumn{cantor_pair(e, j), j, rainbow_measure_coloring(column_restrict(phi, e, j), pow2_inverse(j), cfg)});
    return out;
}

// named functionals

namespace
{
    auto registry() -> map<string, Functional>
    {
        map<string, Functional> m;
        m["identity"] = identity_functional();
        m["zero"] = constant_functional(1, 0);
        m["one"] = constant_functional(1, 1);
        m["pair-01"] = Functional{1, [] (Query &, Pos x) { return x < 2 ? 1 : 0; }, "pair-01"};
        // {2b, 2b+1}, b the first two bits
        m["two-bit-pairs"] = Functional{1, [] (Query & q, Pos x) {
            Pos b = 2 * q.bit(0, 0) + q.bit(0, 1);
            return (x == 2 * b || x == 2 * b + 1) ? 1 : 0;
        }, "two-bit-pairs"};
        m["echo"] = Functional{1, [] (Query & q, Pos x) { return q.bit(0, x); }, "echo"};
        m["never"] = Functional{1, [] (Query & q, Pos x) { return q.bit(0, x + (Pos(1) << 20)); }, "never"};
        return m;
    }
}

auto wred::adversary_functional(const string & name) -> Functional
{
    auto m = registry();
    auto it = m.find(name);
    if (it == m.end())
        throw InputError("unknown functional '" + name + "'");
    return it->second;
}

auto wred::adversary_functional_names() -> vector<string>
{
    vector<string> out;
    for (auto & [k, v] : registry())
        out.push_back(k);
    return out;
}
