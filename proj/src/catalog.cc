#include <wred/catalog.hh>
#include <wred/error.hh>

#include <algorithm>
#include <numeric>
#include <tuple>
#include <random>

using namespace wred;

using std::function;
using std::nullopt;
using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace
{
    auto evens(TapeFn t) -> TapeFn
    {
        return [t] (Pos p) { return t(2 * p); };
    }

    auto odds(TapeFn t) -> TapeFn
    {
        return [t] (Pos p) { return t(2 * p + 1); };
    }

    auto column_tape(TapeFn t, std::uint64_t i) -> TapeFn
    {
        return [t, i] (Pos p) { return t(cantor_pair(i, p)); };
    }

    auto halves() -> Functional
    {
        return Functional{1, [] (Query & q, Pos p) { return q.bit(0, p / 2); }, "<H,H>"};
    }

    // the colouring read from tape 0 of the query, recoloured by fn
    auto recolor(std::size_t n, Colors k, std::size_t m, Colors j, function<std::uint64_t (std::uint64_t)> fn) -> Functional
    {
        return Functional{1, [=] (Query & q, Pos pos) {
            auto a = q.tape(0);
            return encode_color_bit(n, k, pos, [&] (const Tuple & t) {
                return fn(read_color(a, m, j, Tuple(t.begin(), t.begin() + m)));
            });
        }, "recolour"};
    }

    auto params(std::initializer_list<std::pair<const char *, string>> kv) -> string
    {
        string s;
        for (auto & [k, v] : kv)
            s += (s.empty() ? "" : " ") + string(k) + "=" + v;
        return s;
    }
}

auto wred::rt_color_embed(std::size_t n, std::uint64_t j, std::uint64_t k) -> Witness
{
    if (j > k)
        throw InputError("colour embedding needs j <= k (got j=" + to_string(j) + ", k=" + to_string(k) + ")");
    Witness w;
    w.id = "rt-embed(" + to_string(n) + "," + to_string(j) + "," + to_string(k) + ")";
    w.source = rt(n, j);
    w.target = rt(n, k);
    w.forward = j == k ? identity_functional() : recolor(n, k, n, j, [] (std::uint64_t c) { return c; });
    w.backward = identity_functional();
    return w;
}

auto wred::rt_arity_lift(std::size_t m, std::size_t n, std::uint64_t k) -> Witness
{
    if (m > n || m == 0)
        throw InputError("arity lift needs 1 <= m <= n");
    Witness w;
    w.id = "rt-lift(" + to_string(m) + "," + to_string(n) + "," + to_string(k) + ")";
    w.source = rt(m, k);
    w.target = rt(n, k);
    w.forward = m == n ? identity_functional() : recolor(n, k, m, k, [] (std::uint64_t c) { return c; });
    w.backward = identity_functional();
    return w;
}

auto wred::product_color(std::uint64_t f, std::uint64_t g, std::uint64_t j) -> std::uint64_t
{
    return f + j * g;
}

auto wred::rt_product(std::size_t n, std::uint64_t j, std::uint64_t k) -> Witness
{
    if (j == 0 || k == 0)
        throw InputError("colour counts must be positive");
    Witness w;
    w.id = "rt-product(" + to_string(n) + "," + to_string(j) + "," + to_string(k) + ")";
    w.source = parallel_product(rt(n, j), rt(n, k));
    w.target = rt(n, j * k);
    w.forward = Functional{1, [n, j, k] (Query & q, Pos pos) {
        auto a = q.tape(0);
        auto f = evens(a), g = odds(a);
        return encode_color_bit(n, j * k, pos, [&] (const Tuple & t) {
            return product_color(read_color(f, n, j, t), read_color(g, n, k, t), j);
        });
    }, "f + j g"};
    w.backward = halves();
    return w;
}

auto wred::coh_interleave(optional<std::size_t> count) -> Witness
{
    if (count && *count != 2)
        throw InputError("COH interleaving takes two families or a sequence");
    Witness w;
    w.target = coh();
    if (count) {
        w.id = "coh-pair";
        w.source = parallel_product(coh(), coh());
        // T_{2i} = R_i, T_{2i+1} = S_i
        w.forward = Functional{1, [] (Query & q, Pos z) {
            auto [c, y] = cantor_unpair(z);
            return q.bit(0, 2 * cantor_pair(c / 2, y) + c % 2);
        }, "T_2i=R_i,T_2i+1=S_i"};
        w.backward = halves();
    }
    else {
        w.id = "coh-seq";
        w.source = seq(coh());
        // T_<i,j> = R_{i,j}
        w.forward = Functional{1, [] (Query & q, Pos z) {
            auto [c, y] = cantor_unpair(z);
            auto [i, j] = cantor_unpair(c);
            return q.bit(0, cantor_pair(i, cantor_pair(j, y)));
        }, "T_<i,j>=R_ij"};
        w.backward = Functional{1, [] (Query & q, Pos z) { return q.bit(0, cantor_unpair(z).second); }, "<C,C,..>"};
    }
    return w;
}

auto wred::interleave_trees(const TreeByRule & t0, const TreeByRule & t1) -> TreeByRule
{
    return TreeByRule{[t0, t1] (const Prefix & s) { return t0.contains(even_part(s)) && t1.contains(odd_part(s)); },
        nullopt, "<" + t0.name + "," + t1.name + ">"};
}

namespace
{
    // the column-i substring of s: the bits at cantor(i, 0), cantor(i, 1), .. below |s|
    auto column_string(const Prefix & s, std::uint64_t i) -> Prefix
    {
        Prefix r;
        for (Pos y = 0 ; cantor_pair(i, y) < s.length() ; ++y)
            r.push_back(s.at(cantor_pair(i, y)));
        return r;
    }

    auto seq_tree_member(const Prefix & s, const function<bool (std::uint64_t, const Prefix &)> & member) -> bool
    {
        for (std::uint64_t i = 0 ; cantor_pair(i, 0) < s.length() ; ++i)
            if (! member(i, column_string(s, i)))
                return false;
        return true;
    }
}

auto wred::interleave_tree_family(const function<TreeByRule (std::uint64_t)> & ts) -> TreeByRule
{
    return TreeByRule{[ts] (const Prefix & s) {
        return seq_tree_member(s, [&] (std::uint64_t i, const Prefix & c) { return ts(i).contains(c); });
    }, nullopt, "seq-interleave"};
}

auto wred::wkl_interleave(optional<std::size_t> count) -> Witness
{
    if (count && *count != 2)
        throw InputError("WKL interleaving takes two trees or a sequence");
    Witness w;
    w.target = wkl();
    w.backward = identity_functional();
    if (count) {
        w.id = "wkl-pair";
        w.source = parallel_product(wkl(), wkl());
        w.forward = Functional{1, [] (Query & q, Pos pos) {
            auto a = q.tape(0);
            auto s = index_string(pos);
            return tree_from_tape(evens(a))(even_part(s)) && tree_from_tape(odds(a))(odd_part(s)) ? 1 : 0;
        }, "even bits in T0, odd bits in T1"};
    }
    else {
        w.id = "wkl-seq";
        w.source = seq(wkl());
        w.forward = Functional{1, [] (Query & q, Pos pos) {
            auto a = q.tape(0);
            return seq_tree_member(index_string(pos), [&] (std::uint64_t i, const Prefix & c) {
                return tree_from_tape(column_tape(a, i))(c);
            }) ? 1 : 0;
        }, "column i in T_i"};
    }
    return w;
}

auto wred::collapse_color(std::uint64_t c, std::uint64_t j) -> std::uint64_t
{
    return std::min(c, j - 1);
}

auto wred::ts_collapse(std::size_t n, std::uint64_t j, Colors k) -> Witness
{
    if (j < 2 || (k && *k <= j))
        throw InputError("collapse needs 2 <= j < k");
    Witness w;
    w.id = "ts-collapse(" + to_string(n) + "," + to_string(j) + "," + colors_name(k) + ")";
    w.source = ts(n, k);
    w.target = ts(n, j);
    w.forward = recolor(n, j, n, k, [j] (std::uint64_t c) { return collapse_color(c, j); });
    // (S, c) with c < j-1 is thin for f; with c = j-1, f never reaches j-1 on S
    w.backward = identity_functional();
    return w;
}

auto wred::seq_interleave(const Problem & p) -> Witness
{
    Witness w;
    auto s = seq(p);
    w.id = "seq-interleave(" + p->name + ")";
    w.source = parallel_product(s, s);
    w.target = s;
    w.forward = Functional{1, [] (Query & q, Pos z) {
        auto [c, y] = cantor_unpair(z);
        return q.bit(0, 2 * cantor_pair(c / 2, y) + c % 2);
    }, "interleave columns"};
    w.backward = Functional{1, [] (Query & q, Pos p) {
        auto [c, y] = cantor_unpair(p / 2);
        return q.bit(0, cantor_pair(2 * c + p % 2, y));
    }, "split columns"};
    return w;
}

// samplers

auto wred::planted_coloring(std::size_t n, Colors k, std::uint64_t seed, Pos horizon, Pos planted) -> Coloring
{
    std::mt19937_64 rng(mix64(seed));
    vector<Pos> xs(horizon);
    std::iota(xs.begin(), xs.end(), Pos(0));
    std::shuffle(xs.begin(), xs.end(), rng);
    xs.resize(std::min(planted, horizon));
    std::sort(xs.begin(), xs.end());
    std::uint64_t kk = k ? *k : 5;
    std::uint64_t c0 = mix64(seed + 1) % kk;
    std::uint64_t salt = mix64(seed ^ (kk << 32) ^ n);
    return Coloring{n, k, [xs, c0, kk, salt] (const Tuple & t) {
        bool inside = std::all_of(t.begin(), t.end(), [&] (Pos x) { return std::binary_search(xs.begin(), xs.end(), x); });
        if (inside)
            return c0;
        return mix64(salt ^ (tuple_rank(t) * 0x9e3779b97f4a7c15ull)) % kk;
    }, "planted(" + format_set(xs) + ")"};
}

auto wred::pattern_tree(std::uint64_t seed) -> TreeByRule
{
    // strings avoiding a fixed word; appending the complement of its last bit never
    // completes the word, so the tree has no dead ends
    auto h = mix64(seed ^ 0x5eed);
    std::size_t len = 2 + h % 3;
    string word;
    for (std::size_t i = 0 ; i < len ; ++i)
        word += (h >> (8 + i)) & 1 ? '1' : '0';
    return TreeByRule{[word] (const Prefix & p) { return p.to_string().find(word) == string::npos; }, nullopt,
        "avoid(" + word + ")"};
}

namespace
{
    auto rt_sampler(std::size_t n, Colors k, Pos planted = 10) -> Sampler
    {
        return [n, k, planted] (std::uint64_t seed) { return encode_coloring(planted_coloring(n, k, seed, 16, planted)); };
    }

    auto product_sampler(std::size_t n, std::uint64_t j, std::uint64_t k) -> Sampler
    {
        return [n, j, k] (std::uint64_t seed) {
            return interleave(encode_coloring(planted_coloring(n, j, seed)), encode_coloring(planted_coloring(n, k, seed)));
        };
    }

    auto random_sampler(std::uint64_t salt) -> Sampler
    {
        return [salt] (std::uint64_t seed) { return random_point(seed, salt); };
    }

    auto tree_sampler() -> Sampler
    {
        return [] (std::uint64_t seed) { return encode_tree(pattern_tree(seed)); };
    }

    auto coh_check(bool pair) -> function<Verdict (const Point &, const Scale &)>
    {
        auto w = coh_interleave(pair ? optional<std::size_t>(2) : nullopt);
        return [w, pair] (const Point & a, const Scale & sc) {
            auto b = forward_image(w, a, sc.fuel);
            for (std::uint64_t i = 0 ; i < 8 ; ++i)
                for (Pos y = 0 ; y < sc.horizon ; ++y) {
                    int want;
                    if (pair)
                        want = (i % 2 == 0 ? even_bits(a) : odd_bits(a)).at(cantor_pair(i / 2, y));
                    else {
                        auto [r, c] = cantor_unpair(i);
                        want = column(column(a, r), c).at(y);
                    }
                    if (b.at(cantor_pair(i, y)) != want)
                        return Verdict::fail("column " + to_string(i) + " differs at " + to_string(y));
                }
            auto t = w.target->solve(b, sc);
            if (! t)
                return Verdict::inconclusive("no shadow solution");
            auto s = backward_image(w, a, *t, sc.fuel);
            for (Pos x = 0 ; x < sc.horizon ; ++x) {
                int l = pair ? s.at(2 * x) : column(s, 0).at(x);
                int r = pair ? s.at(2 * x + 1) : column(s, 3).at(x);
                if (l != t->at(x) || r != t->at(x))
                    return Verdict::fail("backward image does not repeat the solution at " + to_string(x));
            }
            return Verdict::pass("columns and solution copies agree at horizon " + to_string(sc.horizon));
        };
    }

    // the generic check, except that the last n - m elements of the finite target solution
    // are left out: no tuple of g constrains their f-colour
    auto lift_check(std::size_t m, std::size_t n, std::uint64_t k) -> function<Verdict (const Point &, const Scale &)>
    {
        auto w = rt_arity_lift(m, n, k);
        return [w, m, n, k] (const Point & a, const Scale & sc) {
            auto b = forward_image(w, a, sc.fuel);
            auto t = w.target->solve(b, sc);
            if (! t)
                return Verdict::inconclusive("no " + w.target->name + " solution at horizon " + to_string(sc.horizon));
            auto own = w.target->verify_at(b, *t, sc);
            if (! own.ok())
                return Verdict::fail("brute-force solution rejected by its own verifier: " + own.detail);
            auto h = members_below(backward_image(w, a, *t, sc.fuel), sc.horizon);
            h.resize(h.size() > n - m ? h.size() - (n - m) : 0);
            auto v = verify_homogeneous_at(totalize_coloring(a, m, k), Point::from_set(h), sc.horizon, 0);
            v.detail = "backward image less its last " + to_string(n - m) + ": " + v.detail;
            return v;
        };
    }

    auto projection_config() -> SquashConfig
    {
        SquashConfig cfg;
        cfg.name = "projection";
        cfg.q = trivial();
        cfg.p = rt(1, 2);
        cfg.w = Witness{"proj", Functional{1, [] (Query & q, Pos x) { return q.bit(0, 2 * x + 1); }, "B"},
            halves(), Kind::Strong, parallel_product(cfg.q, cfg.p), cfg.p};
        return cfg;
    }

    // reads A below 2, so a homogeneous set for the image minus {0,1} is one for B
    auto trivial_q_config() -> SquashConfig
    {
        SquashConfig cfg;
        cfg.name = "trivial-q";
        cfg.q = trivial();
        cfg.p = rt(1, 2);
        cfg.w = Witness{"low-a", Functional{1, [] (Query & q, Pos x) { return x < 2 ? q.bit(0, 2 * x) : q.bit(0, 2 * x + 1); }, "A|2^B"},
            Functional{1, [] (Query & q, Pos x) { return x % 2 == 1 && x / 2 < 2 ? 0 : q.bit(0, x / 2); }, "<T,T-{0,1}>"},
            Kind::Strong, parallel_product(cfg.q, cfg.p), cfg.p};
        return cfg;
    }

    auto coh_config() -> SquashConfig
    {
        SquashConfig cfg;
        cfg.name = "coh-interleave";
        cfg.q = coh();
        cfg.p = coh();
        cfg.w = coh_interleave(2);
        cfg.max_n = 1024;
        return cfg;
    }

    // <RT1_2, Seq RT1_2> <= Seq RT1_2: column 0 is A, column j+1 is column j of B
    auto seq_shift_config() -> SquashConfig
    {
        SquashConfig cfg;
        cfg.name = "seq-shift";
        cfg.q = rt(1, 2);
        cfg.p = seq(rt(1, 2));
        Witness w;
        w.id = "shift";
        w.source = parallel_product(cfg.q, cfg.p);
        w.target = cfg.p;
        w.forward = Functional{1, [] (Query & q, Pos z) {
            auto [c, y] = cantor_unpair(z);
            return c == 0 ? q.bit(0, 2 * y) : q.bit(0, 2 * cantor_pair(c - 1, y) + 1);
        }, "A,B0,B1,.."};
        w.backward = Functional{1, [] (Query & q, Pos p) {
            if (p % 2 == 0)
                return q.bit(0, cantor_pair(0, p / 2));
            auto [c, y] = cantor_unpair(p / 2);
            return q.bit(0, cantor_pair(c + 1, y));
        }, "<T0,shift T>"};
        cfg.w = w;
        cfg.max_n = 1024;
        return cfg;
    }
}

auto wred::squash_configs() -> vector<SquashConfig>
{
    return {trivial_q_config(), coh_config(), projection_config(), seq_shift_config()};
}

auto wred::find_squash_config(const string & name) -> SquashConfig
{
    for (auto & c : squash_configs())
        if (c.name == name)
            return c;
    throw InputError("no squash configuration named '" + name + "'");
}

namespace
{
    auto entry(string id, string statement, string ps, Witness w, Sampler s) -> CatalogEntry
    {
        CatalogEntry e;
        e.id = std::move(id);
        e.statement = std::move(statement);
        e.params = std::move(ps);
        e.witness = std::move(w);
        e.sampler = std::move(s);
        return e;
    }

    auto reduction(const Witness & w) -> string
    {
        return w.source->name + " <=" + (w.kind == Kind::Strong ? "sW " : "W ") + w.target->name;
    }

    auto build() -> vector<CatalogEntry>
    {
        vector<CatalogEntry> es;
        auto add = [&] (string id, string ps, Witness w, Sampler s) -> CatalogEntry & {
            auto st = reduction(w);
            es.push_back(entry(std::move(id), st, std::move(ps), std::move(w), std::move(s)));
            return es.back();
        };

        for (auto [n, j, k] : vector<std::tuple<std::size_t, std::uint64_t, std::uint64_t>>{{1, 2, 2}, {1, 2, 3}, {1, 2, 5}, {2, 2, 3}})
            add("rt-embed-" + to_string(n) + "-" + to_string(j) + "-" + to_string(k),
                    params({{"n", to_string(n)}, {"j", to_string(j)}, {"k", to_string(k)}}),
                    rt_color_embed(n, j, k), rt_sampler(n, j));
        for (auto [m, n, k] : vector<std::tuple<std::size_t, std::size_t, std::uint64_t>>{{1, 2, 2}, {1, 2, 3}, {2, 2, 2}})
            add("rt-lift-" + to_string(m) + "-" + to_string(n) + "-" + to_string(k),
                    params({{"m", to_string(m)}, {"n", to_string(n)}, {"k", to_string(k)}}),
                    rt_arity_lift(m, n, k), rt_sampler(m, k)).check = m < n ? lift_check(m, n, k) : nullptr;
        for (auto [n, j, k] : vector<std::tuple<std::size_t, std::uint64_t, std::uint64_t>>{{1, 2, 2}, {1, 2, 3}, {2, 2, 2}})
            add("rt-product-" + to_string(n) + "-" + to_string(j) + "-" + to_string(k),
                    params({{"n", to_string(n)}, {"j", to_string(j)}, {"k", to_string(k)}}),
                    rt_product(n, j, k), product_sampler(n, j, k));

        add("coh-pair", "count=2", coh_interleave(2), random_sampler(31)).check = coh_check(true);
        add("coh-seq", "count=omega", coh_interleave(nullopt), random_sampler(32)).check = coh_check(false);

        auto & wp = add("wkl-pair", "count=2", wkl_interleave(2), [] (std::uint64_t seed) {
            return interleave(encode_tree(pattern_tree(seed)), encode_tree(pattern_tree(mix64(seed))));
        });
        wp.target_scale = Scale{};
        wp.target_scale->horizon = 32;
        auto & ws = add("wkl-seq", "count=omega", wkl_interleave(nullopt), [] (std::uint64_t seed) {
            return family([seed] (std::uint64_t i) { return encode_tree(pattern_tree(mix64(seed) ^ i)); }, "trees");
        });
        // tree codes index strings of length at most 62, so the columns stay short
        ws.scale.horizon = 8;
        ws.scale.columns = 3;
        ws.target_scale = Scale{};
        ws.target_scale->horizon = cantor_pair(2, 7) + 1;

        for (auto [n, j, k] : vector<std::tuple<std::size_t, std::uint64_t, Colors>>{{1, 2, 3}, {1, 3, 4}, {2, 2, 3}, {1, 2, nullopt}, {2, 3, nullopt}})
            add("ts-collapse-" + to_string(n) + "-" + to_string(j) + "-" + colors_name(k),
                    params({{"n", to_string(n)}, {"j", to_string(j)}, {"k", colors_name(k)}}),
                    ts_collapse(n, j, k), rt_sampler(n, k));

        // T_sigma separates the sides of sigma only at depth |sigma| + 2
        auto & wq = add("wkl-seqwwkl", "ext-horizon=24", wkl_seqwwkl_witness(24), tree_sampler());
        wq.target_scale = Scale{};
        wq.target_scale->horizon = 18;

        add("seq-interleave", "P=RT1_2", seq_interleave(rt(1, 2)), random_sampler(33));
        auto & it = add("iterate-3", "P=Seq(RT1_2) n=3", iterate_finite(seq_interleave(rt(1, 2)), 3), random_sampler(34));
        it.scale.columns = 2;
        it.target_scale = Scale{};
        it.target_scale->columns = 8;
        add("lift-seq-embed", "n=1 j=2 k=3", lift_seq(rt_color_embed(1, 2, 3)), random_sampler(35));
        add("compose-embed", "2->3->4", compose_witness(rt_color_embed(1, 2, 3), rt_color_embed(1, 3, 4)), rt_sampler(1, 2));
        add("alt-embed", "tag=1 of [RT1_2,RT1_3]", alternative_embedding({rt(1, 2), rt(1, 3)}, 1), rt_sampler(1, 3));
        add("fanout-id-2", "k=j=2 s=2", fanout_rt(identity_witness(rt(1, 2)), 2), rt_sampler(1, 4));
        add("fanout-embed-2", "k=2 j=3 s=2", fanout_rt(rt_color_embed(1, 2, 3), 2), rt_sampler(1, 4));

        auto tq = trivial_q_config();
        tq.stages = 24;
        add("squash-trivial-q", "Q=ANY P=RT1_2", squash(tq), random_sampler(36));
        auto sh = seq_shift_config();
        auto & ss = add("squash-seq-shift", "Q=RT1_2 P=Seq(RT1_2)", squash(sh), random_sampler(37));
        // the chain of tolerance cuts drops a few small elements from each column
        ss.target_scale = Scale{};
        ss.target_scale->size = 8;
        return es;
    }
}

auto wred::catalog() -> const vector<CatalogEntry> &
{
    static const vector<CatalogEntry> es = build();
    return es;
}

auto wred::find_entry(const string & id) -> const CatalogEntry &
{
    for (auto & e : catalog())
        if (e.id == id)
            return e;
    throw InputError("no catalog entry '" + id + "'");
}

auto wred::run_entry(const CatalogEntry & e, std::uint64_t samples, std::uint64_t seed) -> SoundnessReport
{
    return run_entry(e, samples, seed, e.scale);
}

auto wred::run_entry(const CatalogEntry & e, std::uint64_t samples, std::uint64_t seed, const Scale & sc) -> SoundnessReport
{
    if (! e.check)
        return check_witness(e.witness, e.sampler, samples, sc, seed, e.target_scale ? &*e.target_scale : nullptr);
    SoundnessReport r;
    for (std::uint64_t i = 0 ; i < samples ; ++i) {
        Verdict v;
        try {
            v = e.check(e.sampler(mix64(seed) ^ i), sc);
        }
        catch (const ResourceError & err) {
            v = Verdict::inconclusive(string("resource: ") + err.what());
        }
        catch (const ContractError & err) {
            v = Verdict::fail(string("contract: ") + err.what());
        }
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

auto wred::absent_reductions() -> vector<Absent>
{
    return {
        {"RTn_k <=sW RTn_j, 2 <= j < k", "no strong reduction lowers the number of colours, for any n"},
        {"<RTn_2, RTn_k> <=W RTn_k", "a sequential instance would then have solutions whose jumps are computable in the n-th jump"},
        {"RTn_2k <=W RTn_k", "follows from the product reduction and the previous entry"},
        {"WKL <=W WWKL", "WKL is equivalent to SeqWWKL, which WWKL cannot squash"},
        {"SeqWWKL <=W WWKL", "WWKL is not total, so squashing does not apply, and the reduction fails"},
        {"p-WWKL <=W q-WWKL, p < q", "the q-WWKL adversary defeats every candidate pair of functionals"},
        {"<TSn_k, TSn_j> <=W TSn_j", "a sequential TS instance codes the n-th jump into all of its solutions"},
        {"TS1_j <=W TS1_k, j < k", "the TS1 diagonalizer defeats every candidate pair of functionals"},
    };
}
