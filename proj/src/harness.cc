#include <wred/harness.hh>
#include <wred/error.hh>
#include <wred/oracle.hh>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

using namespace wred;

using std::function;
using std::map;
using std::nullopt;
using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace
{
    auto parse_u64(const string & s, const string & where) -> std::uint64_t
    {
        if (s.empty() || ! std::all_of(s.begin(), s.end(), [] (char c) { return c >= '0' && c <= '9'; }))
            throw InputError(where + ": '" + s + "' is not a number");
        try {
            return std::stoull(s);
        }
        catch (const std::exception &) {
            throw InputError(where + ": '" + s + "' is out of range");
        }
    }

    auto words(const string & line) -> vector<string>
    {
        std::istringstream in(line);
        vector<string> out;
        string w;
        while (in >> w)
            out.push_back(w);
        return out;
    }

    auto csv_field(const string & s) -> string
    {
        if (s.find_first_of(",\"\n") == string::npos)
            return s;
        string out = "\"";
        for (char c : s) {
            if (c == '"')
                out += '"';
            out += c;
        }
        return out + "\"";
    }

    auto need_kind(const InstanceDocument & doc, const string & kind) -> void
    {
        if (doc.kind != kind)
            throw InputError("expected a " + kind + " document, got '" + doc.kind + "'");
    }

    auto cell_line(const InstanceDocument & doc, std::size_t c) -> string
    {
        return c < doc.cell_lines.size() ? "line " + to_string(doc.cell_lines[c]) : "cell " + to_string(c);
    }

    auto colors_param(const InstanceDocument & doc) -> Colors
    {
        auto it = doc.params.find("k");
        if (it == doc.params.end() || it->second == "omega")
            return it == doc.params.end() ? Colors(2) : Colors(nullopt);
        return parse_u64(it->second, "param k");
    }

    // rule registries

    using ColoringRule = function<Coloring (const InstanceDocument &)>;

    auto coloring_rules() -> map<string, ColoringRule>
    {
        map<string, ColoringRule> m;
        m["parity-sum"] = [] (const InstanceDocument & d) {
            auto n = param_u64(d, "n", 2);
            auto k = colors_param(d);
            std::uint64_t mod = k ? *k : 2;
            return Coloring{n, k, [mod] (const Tuple & t) {
                std::uint64_t s = 0;
                for (auto x : t)
                    s += x;
                return s % mod;
            }, "parity-sum"};
        };
        m["constant"] = [] (const InstanceDocument & d) {
            return constant_coloring(param_u64(d, "n", 2), colors_param(d), param_u64(d, "c", 0));
        };
        m["min-mod"] = [] (const InstanceDocument & d) {
            auto k = colors_param(d);
            std::uint64_t mod = k ? *k : 2;
            return Coloring{param_u64(d, "n", 2), k, [mod] (const Tuple & t) { return t.front() % mod; }, "min-mod"};
        };
        m["random"] = [] (const InstanceDocument & d) {
            auto k = colors_param(d);
            if (! k)
                throw InputError("random colourings need finitely many colours");
            auto seed = param_u64(d, "seed", 0);
            std::uint64_t mod = *k;
            return Coloring{param_u64(d, "n", 2), k, [seed, mod] (const Tuple & t) { return mix64(seed ^ mix64(tuple_rank(t))) % mod; },
                "random(" + to_string(seed) + ")"};
        };
        m["planted"] = [] (const InstanceDocument & d) {
            return planted_coloring(param_u64(d, "n", 2), colors_param(d), param_u64(d, "seed", 0), param_u64(d, "horizon", 16),
                    param_u64(d, "planted", 10));
        };
        return m;
    }

    auto tree_rules() -> map<string, function<TreeByRule (const InstanceDocument &)>>
    {
        map<string, function<TreeByRule (const InstanceDocument &)>> m;
        m["full"] = [] (const InstanceDocument &) { return full_tree(); };
        m["no-11"] = [] (const InstanceDocument &) {
            return TreeByRule{[] (const Prefix & p) {
                for (Pos i = 1 ; i < p.length() ; ++i)
                    if (p.at(i) && p.at(i - 1))
                        return false;
                return true;
            }, nullopt, "no-11"};
        };
        m["starts-1"] = [] (const InstanceDocument &) {
            return TreeByRule{[] (const Prefix & p) { return p.length() == 0 || p.at(0) == 1; }, Rational(1, 2), "starts-1"};
        };
        m["pattern"] = [] (const InstanceDocument & d) { return pattern_tree(param_u64(d, "seed", 0)); };
        return m;
    }

    auto point_rules() -> map<string, function<Point (const InstanceDocument &)>>
    {
        map<string, function<Point (const InstanceDocument &)>> m;
        m["constant"] = [] (const InstanceDocument & d) { return Point::constant(int(param_u64(d, "b", 0) & 1)); };
        m["random"] = [] (const InstanceDocument & d) { return random_point(param_u64(d, "seed", 0)); };
        m["evens"] = [] (const InstanceDocument &) { return Point("evens", [] (Pos x) { return int(x % 2 == 0); }); };
        return m;
    }

    auto family_rules() -> map<string, function<SetFamily (const InstanceDocument &)>>
    {
        map<string, function<SetFamily (const InstanceDocument &)>> m;
        m["multiples"] = [] (const InstanceDocument &) {
            return SetFamily{[] (std::uint64_t i, Pos x) { return int(x % (i + 2) == 0); }, "multiples"};
        };
        m["random"] = [] (const InstanceDocument & d) {
            auto seed = param_u64(d, "seed", 0);
            return SetFamily{[seed] (std::uint64_t i, Pos x) { return int(mix64(seed ^ mix64(cantor_pair(i, x))) & 1); },
                "random(" + to_string(seed) + ")"};
        };
        return m;
    }

    auto predicate_rules() -> map<string, function<BoundedPredicate (const InstanceDocument &)>>
    {
        using Map = map<string, function<BoundedPredicate (const InstanceDocument &)>>;
        Map m;
        auto make = [] (string name, std::size_t n, function<int (std::uint64_t, const Tuple &)> r, function<bool (std::uint64_t)> t) {
            return [=] (const InstanceDocument & d) {
                return BoundedPredicate{r, n, t, name, param_u64(d, "domain", 32)};
            };
        };
        m["equals-i"] = make("equals-i", 1, [] (auto i, auto & x) { return int(x[0] == i); }, [] (auto) { return true; });
        m["never"] = make("never", 1, [] (auto, auto &) { return 0; }, [] (auto) { return false; });
        m["even"] = make("even", 1, [] (auto i, auto & x) { return int(2 * x[0] == i); }, [] (auto i) { return i % 2 == 0; });
        m["above"] = make("above", 2, [] (auto, auto & x) { return int(x[1] > x[0]); }, [] (auto) { return true; });
        m["above-even"] = make("above-even", 2, [] (auto i, auto & x) { return int(x[1] > x[0] && i % 2 == 0); },
                [] (auto i) { return i % 2 == 0; });
        m["equal-small"] = make("equal-small", 2, [] (auto, auto & x) { return int(x[1] == x[0] && x[1] < 10); },
                [] (auto) { return false; });
        return m;
    }

    template <typename M_>
    auto lookup(const M_ & m, const InstanceDocument & doc)
    {
        auto it = m.find(doc.rule);
        if (it == m.end())
            throw InputError("unknown " + doc.kind + " rule '" + doc.rule + "'");
        return it->second(doc);
    }

    template <typename M_>
    auto keys(const M_ & m) -> vector<string>
    {
        vector<string> out;
        for (auto & [k, v] : m)
            out.push_back(k);
        return out;
    }

    // cells (0, i, v) for i < count, each once; v below limit
    auto dense_cells(const InstanceDocument & doc, std::uint64_t count, std::uint64_t limit) -> vector<std::uint64_t>
    {
        vector<std::uint64_t> out(count);
        vector<bool> seen(count, false);
        for (std::size_t c = 0 ; c < doc.cells.size() ; ++c) {
            auto [col, i, v] = doc.cells[c];
            if (col != 0)
                throw InputError(cell_line(doc, c) + ": column " + to_string(col) + " in a single table");
            if (i >= count)
                throw InputError(cell_line(doc, c) + ": index " + to_string(i) + " outside the declared domain");
            if (v >= limit)
                throw InputError(cell_line(doc, c) + ": value " + to_string(v) + " out of range");
            if (seen[i])
                throw InputError(cell_line(doc, c) + ": index " + to_string(i) + " given twice");
            seen[i] = true;
            out[i] = v;
        }
        for (std::uint64_t i = 0 ; i < count ; ++i)
            if (! seen[i])
                throw InputError("table is incomplete: index " + to_string(i) + " missing");
        return out;
    }
}

// documents

auto wred::parse_document(const string & text) -> InstanceDocument
{
    InstanceDocument d;
    std::istringstream in(text);
    string line;
    std::size_t no = 0;
    bool header = false, ended = false;
    while (std::getline(in, line)) {
        ++no;
        auto hash = line.find('#');
        if (hash != string::npos)
            line.erase(hash);
        auto w = words(line);
        if (w.empty())
            continue;
        auto where = "line " + to_string(no);
        if (ended)
            throw InputError(where + ": text after 'end'");
        if (! header) {
            if (w.size() != 2 || w[0] != "wred-instance" || w[1] != "1")
                throw InputError(where + ": expected 'wred-instance 1'");
            header = true;
            continue;
        }
        auto & key = w[0];
        if (key == "end" && w.size() == 1)
            ended = true;
        else if ((key == "kind" || key == "representation" || key == "rule") && w.size() == 2)
            (key == "kind" ? d.kind : key == "representation" ? d.representation : d.rule) = w[1];
        else if (key == "param" && w.size() == 3) {
            if (! d.params.emplace(w[1], w[2]).second)
                throw InputError(where + ": parameter '" + w[1] + "' given twice");
        }
        else if (key == "cell" && w.size() == 4) {
            d.cells.push_back({parse_u64(w[1], where), parse_u64(w[2], where), parse_u64(w[3], where)});
            d.cell_lines.push_back(no);
        }
        else
            throw InputError(where + ": cannot read '" + line + "'");
    }
    if (! header)
        throw InputError("empty document");
    if (! ended)
        throw InputError("document does not end with 'end'");
    static const std::set<string> kinds{"coloring", "tree", "family", "point", "predicate", "squash"};
    if (! kinds.contains(d.kind))
        throw InputError("unknown kind '" + d.kind + "'");
    if (d.representation != "table" && d.representation != "rule")
        throw InputError("representation must be table or rule");
    if (d.representation == "rule" && d.rule.empty())
        throw InputError("rule representation without a rule name");
    if (d.representation == "table" && ! d.rule.empty())
        throw InputError("table representation with a rule name");
    return d;
}

auto wred::render_document(const InstanceDocument & d) -> string
{
    std::ostringstream out;
    out << "wred-instance 1\n" << "kind " << d.kind << "\n" << "representation " << d.representation << "\n";
    if (! d.rule.empty())
        out << "rule " << d.rule << "\n";
    for (auto & [k, v] : d.params)
        out << "param " << k << " " << v << "\n";
    for (auto & c : d.cells)
        out << "cell " << c[0] << " " << c[1] << " " << c[2] << "\n";
    out << "end\n";
    return out.str();
}

auto wred::read_document(const string & path) -> InstanceDocument
{
    std::ifstream in(path);
    if (! in)
        throw InputError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_document(buf.str());
    }
    catch (const InputError & e) {
        throw InputError(path + ": " + e.what());
    }
}

auto wred::write_document(const string & path, const InstanceDocument & doc) -> void
{
    std::ofstream out(path);
    if (! out)
        throw InputError("cannot write '" + path + "'");
    out << render_document(doc);
}

auto wred::param_u64(const InstanceDocument & doc, const string & key, optional<std::uint64_t> fallback) -> std::uint64_t
{
    auto it = doc.params.find(key);
    if (it == doc.params.end()) {
        if (fallback)
            return *fallback;
        throw InputError("missing parameter '" + key + "'");
    }
    return parse_u64(it->second, "param " + key);
}

auto wred::load_coloring(const InstanceDocument & doc) -> Coloring
{
    need_kind(doc, "coloring");
    if (doc.representation == "rule")
        return lookup(coloring_rules(), doc);
    auto n = param_u64(doc, "n");
    auto k = colors_param(doc);
    if (! k)
        throw InputError("a coloring table needs finitely many colours");
    auto domain = param_u64(doc, "domain");
    auto by_rank = dense_cells(doc, binomial(domain, n), *k);
    return table_coloring(n, k, domain, by_rank, "table");
}

auto wred::save_coloring(const Coloring & f, Pos domain) -> InstanceDocument
{
    if (! f.colors)
        throw InputError("only finite colourings save as tables");
    InstanceDocument d{"coloring", "table", "", {}, {}, {}};
    d.params["n"] = to_string(f.arity);
    d.params["k"] = to_string(*f.colors);
    d.params["domain"] = to_string(domain);
    for (std::uint64_t r = 0 ; r < binomial(domain, f.arity) ; ++r)
        d.cells.push_back({0, r, f(rank_tuple(r, f.arity))});
    return d;
}

auto wred::load_tree(const InstanceDocument & doc) -> TreeByRule
{
    need_kind(doc, "tree");
    if (doc.representation == "rule")
        return lookup(tree_rules(), doc);
    auto depth = param_u64(doc, "depth");
    if (depth > 20)
        throw InputError("tree tables go to depth 20 at most");
    auto bits = dense_cells(doc, (Pos(1) << (depth + 1)) - 1, 2);
    return TreeByRule{[bits, depth] (const Prefix & p) {
        return bits[string_index(p.length() > depth ? p.take(depth) : p)] == 1;
    }, nullopt, "table"};
}

auto wred::save_tree(const TreeByRule & t, Pos depth) -> InstanceDocument
{
    InstanceDocument d{"tree", "table", "", {}, {}, {}};
    d.params["depth"] = to_string(depth);
    for (Pos i = 0 ; i < (Pos(1) << (depth + 1)) - 1 ; ++i)
        d.cells.push_back({0, i, t.contains(index_string(i)) ? 1u : 0u});
    return d;
}

auto wred::load_point(const InstanceDocument & doc) -> Point
{
    need_kind(doc, "point");
    if (doc.representation == "rule")
        return lookup(point_rules(), doc);
    auto bits = dense_cells(doc, param_u64(doc, "length"), 2);
    vector<std::uint8_t> b(bits.begin(), bits.end());
    return Point::extend(Prefix{b}, Point::constant(0));
}

auto wred::save_point(const Point & p, Pos length) -> InstanceDocument
{
    InstanceDocument d{"point", "table", "", {}, {}, {}};
    d.params["length"] = to_string(length);
    for (Pos i = 0 ; i < length ; ++i)
        d.cells.push_back({0, i, std::uint64_t(p.at(i))});
    return d;
}

auto wred::load_family(const InstanceDocument & doc) -> SetFamily
{
    need_kind(doc, "family");
    if (doc.representation == "rule")
        return lookup(family_rules(), doc);
    auto cols = param_u64(doc, "columns");
    auto len = param_u64(doc, "length");
    vector<vector<int>> bits(cols, vector<int>(len, -1));
    for (std::size_t c = 0 ; c < doc.cells.size() ; ++c) {
        auto [i, x, v] = doc.cells[c];
        if (i >= cols || x >= len)
            throw InputError(cell_line(doc, c) + ": cell outside the declared table");
        if (v > 1)
            throw InputError(cell_line(doc, c) + ": value " + to_string(v) + " out of range");
        if (bits[i][x] >= 0)
            throw InputError(cell_line(doc, c) + ": cell given twice");
        bits[i][x] = int(v);
    }
    for (auto & col : bits)
        if (std::count(col.begin(), col.end(), -1))
            throw InputError("family table is incomplete");
    return SetFamily{[bits, cols, len] (std::uint64_t i, Pos x) { return i < cols && x < len ? bits[i][x] : 0; }, "table"};
}

auto wred::load_predicate(const InstanceDocument & doc) -> BoundedPredicate
{
    need_kind(doc, "predicate");
    if (doc.representation != "rule")
        throw InputError("predicates are given by rule");
    return lookup(predicate_rules(), doc);
}

auto wred::load_squash_config(const InstanceDocument & doc) -> SquashConfig
{
    need_kind(doc, "squash");
    if (doc.representation != "rule")
        throw InputError("squash configurations are given by rule");
    auto cfg = find_squash_config(doc.rule);
    cfg.stages = param_u64(doc, "stages", cfg.stages);
    cfg.fuel = param_u64(doc, "fuel", cfg.fuel);
    cfg.max_n = param_u64(doc, "max_n", cfg.max_n);
    return cfg;
}

auto wred::rule_names(const string & kind) -> vector<string>
{
    if (kind == "coloring")
        return keys(coloring_rules());
    if (kind == "tree")
        return keys(tree_rules());
    if (kind == "point")
        return keys(point_rules());
    if (kind == "family")
        return keys(family_rules());
    if (kind == "predicate")
        return keys(predicate_rules());
    if (kind == "squash") {
        vector<string> out;
        for (auto & c : squash_configs())
            out.push_back(c.name);
        return out;
    }
    throw InputError("unknown kind '" + kind + "'");
}

// reports

auto wred::row_status(const Verdict & v) -> string
{
    return status_name(v.status);
}

auto Report::to_csv() const -> string
{
    auto sorted = rows;
    std::stable_sort(sorted.begin(), sorted.end(), [] (const ReportRow & a, const ReportRow & b) { return a.case_id < b.case_id; });
    std::ostringstream out;
    out << "case_id,entry_id,check,status,detail,seed,horizon,fuel\n";
    for (auto & r : sorted)
        out << csv_field(r.case_id) << ',' << csv_field(r.entry_id) << ',' << csv_field(r.check) << ','
            << r.status << ',' << csv_field(r.detail) << ',' << r.seed << ',' << r.horizon << ',' << r.fuel << '\n';
    return out.str();
}

auto Report::count(const string & status) const -> std::size_t
{
    return std::count_if(rows.begin(), rows.end(), [&] (const ReportRow & r) { return r.status == status; });
}

auto Report::exit_code() const -> int
{
    int code = 0;
    for (auto & r : rows) {
        if (r.status == "fail")
            code = std::max(code, 1);
        else if (r.status == "error") {
            if (r.detail.starts_with("input"))
                code = std::max(code, 3);
            else if (r.detail.starts_with("resource"))
                code = std::max(code, 2);
            else
                code = std::max(code, 1);
        }
    }
    return code;
}

auto wred::config_from_env(SuiteConfig base) -> SuiteConfig
{
    auto read = [] (const char * name) -> optional<Pos> {
        auto v = std::getenv(name);
        if (! v || ! *v)
            return nullopt;
        return parse_u64(v, name);
    };
    if (! base.horizon)
        base.horizon = read("WRED_HORIZON_DEFAULT");
    if (! base.fuel)
        base.fuel = read("WRED_FUEL_DEFAULT");
    return base;
}

auto wred::select_entries(const string & selector) -> vector<const CatalogEntry *>
{
    if (selector.empty())
        throw InputError("empty selector");
    vector<const CatalogEntry *> out;
    bool prefix = selector.back() == '*';
    auto stem = prefix ? selector.substr(0, selector.size() - 1) : selector;
    for (auto & e : catalog())
        if (selector == "all" || (prefix ? e.id.starts_with(stem) : e.id == selector))
            out.push_back(&e);
    if (out.empty())
        throw InputError("no catalog entry matches '" + selector + "'");
    return out;
}

auto wred::run_suite(const string & selector, const SuiteConfig & cfg) -> Report
{
    auto entries = select_entries(selector);
    Report rep;
    for (auto e : entries) {
        auto sc = e->scale;
        if (cfg.horizon)
            sc.horizon = *cfg.horizon;
        if (cfg.fuel)
            sc.fuel = *cfg.fuel;
        ReportRow base{"", e->id, "", "", "", cfg.seed, sc.horizon, sc.fuel};
        try {
            auto r = run_entry(*e, cfg.samples, cfg.seed, sc);
            for (std::size_t i = 0 ; i < r.details.size() ; ++i) {
                auto row = base;
                char idx[16];
                std::snprintf(idx, sizeof(idx), "%05zu", i);
                row.case_id = e->id + "/" + idx;
                row.check = "soundness";
                // "sample i: status detail"
                auto & d = r.details[i];
                auto colon = d.find(": ");
                auto rest = colon == string::npos ? d : d.substr(colon + 2);
                auto sp = rest.find(' ');
                row.status = rest.substr(0, sp);
                row.detail = sp == string::npos ? "" : rest.substr(sp + 1);
                rep.add(row);
            }
        }
        catch (const WredError & err) {
            auto row = base;
            row.case_id = e->id + "/setup";
            row.check = "soundness";
            row.status = "error";
            row.detail = string(kind_name(err.kind())) + ": " + err.what();
            rep.add(row);
        }
    }
    return rep;
}

auto wred::run_squash(SquashConfig cfg, optional<Pos> stages, std::size_t count, std::uint64_t seed) -> Report
{
    if (stages)
        cfg.stages = *stages;
    validate_squash(cfg);
    Report rep;
    ReportRow base{"", cfg.name, "", "pass", "", seed, 0, cfg.fuel};
    auto markers = squash_markers(cfg);
    auto horizon = markers.back() + 1;
    base.horizon = horizon;
    for (std::size_t i = 0 ; i < markers.size() ; ++i) {
        auto row = base;
        char idx[16];
        std::snprintf(idx, sizeof(idx), "%03zu", i);
        row.case_id = "squash/" + cfg.name + "/m" + idx;
        row.check = "marker";
        row.detail = "m_" + to_string(i) + " = " + to_string(markers[i]);
        if (i > 0 && markers[i] <= i - 1) {
            row.status = "fail";
            row.detail += " is not past stage " + to_string(i - 1);
        }
        rep.add(row);
    }
    count = std::min(count, markers.size() - 1);
    auto fam = random_point(seed, 31);
    auto t = squash_forward(cfg, markers, fam, count, horizon);
    for (std::size_t i = 0 ; i < t.rows.size() ; ++i) {
        auto row = base;
        char idx[16];
        std::snprintf(idx, sizeof(idx), "%03zu", i);
        row.case_id = "squash/" + cfg.name + "/B" + idx;
        row.check = "table";
        for (auto b : t.rows[i])
            row.detail += char('0' + b);
        rep.add(row);
    }
    auto row = base;
    row.case_id = "squash/" + cfg.name + "/identity";
    row.check = "identity";
    try {
        check_squash_identity(cfg, t, fam, count);
        row.detail = "B_i = Phi(A_i, B_{i+1}) past m_i for i < " + to_string(count);
    }
    catch (const ContractError & e) {
        row.status = "fail";
        row.detail = e.what();
    }
    rep.add(row);
    return rep;
}

auto wred::oracle_tasks() -> vector<string>
{
    return {"homogeneous", "min-homogeneous", "paths", "rainbow", "thin"};
}

auto wred::run_oracle(const string & task, const InstanceDocument & doc, Pos horizon, Pos size, std::uint64_t node_limit) -> Report
{
    Report rep;
    ReportRow row{"oracle/" + task, doc.kind + ":" + (doc.rule.empty() ? "table" : doc.rule), task, "", "", 0, horizon, 0};
    if (task == "paths") {
        auto t = load_tree(doc);
        auto ps = enumerate_paths(t, horizon);
        row.status = ps.empty() ? "inconclusive" : "pass";
        row.detail = to_string(ps.size()) + " strings of length " + to_string(horizon);
        for (std::size_t i = 0 ; i < ps.size() && i < 8 ; ++i)
            row.detail += (i ? " " : ": ") + ps[i].to_string();
        rep.add(row);
        return rep;
    }
    auto f = load_coloring(doc);
    SearchBudget b{horizon, size, node_limit, 0, true};
    SearchResult r;
    if (task == "homogeneous")
        r = find_homogeneous(f, b);
    else if (task == "min-homogeneous")
        r = find_min_homogeneous(f, b);
    else if (task == "rainbow")
        r = find_rainbow(f, b);
    else if (task == "thin")
        r = find_thin(f, b);
    else
        throw InputError("unknown oracle task '" + task + "'");
    auto v = r.verdict();
    row.status = row_status(v);
    row.detail = "mode " + r.mode + ", nodes " + to_string(r.nodes);
    if (r.set)
        row.detail += ", set " + format_set(*r.set);
    if (r.omitted)
        row.detail += ", omits " + to_string(*r.omitted);
    if (! v.detail.empty())
        row.detail += "; " + v.detail;
    rep.add(row);
    return rep;
}

// adversaries from the command line

namespace
{
    class Params
    {
        private:
            map<string, string> _p;
            std::set<string> _used;

        public:
            explicit Params(map<string, string> p) :
                _p(std::move(p))
            {
            }

            auto str(const string & k, const string & fallback) -> string
            {
                _used.insert(k);
                auto it = _p.find(k);
                return it == _p.end() ? fallback : it->second;
            }

            auto u64(const string & k, std::uint64_t fallback) -> std::uint64_t
            {
                _used.insert(k);
                auto it = _p.find(k);
                return it == _p.end() ? fallback : parse_u64(it->second, "param " + k);
            }

            auto rational(const string & k, const Rational & fallback) -> Rational
            {
                _used.insert(k);
                auto it = _p.find(k);
                return it == _p.end() ? fallback : parse_rational(it->second);
            }

            auto finish() -> void
            {
                for (auto & [k, v] : _p)
                    if (! _used.contains(k))
                        throw InputError("unknown parameter '" + k + "'");
            }
    };

    auto delta2_named(const string & name) -> Delta2Approx
    {
        if (name == "zero")
            return Delta2Approx{[] (auto, auto, auto, auto) { return 0; }, [] (auto, auto, auto) -> Pos { return 0; }, "zero"};
        if (name == "evens")
            return Delta2Approx{[] (auto, auto, std::uint64_t a, auto) { return int(a % 2 == 0); },
                [] (auto, auto, auto) -> Pos { return 0; }, "evens"};
        if (name == "noisy")
            return Delta2Approx{[] (std::uint64_t e, auto, std::uint64_t a, Pos s) {
                    return s > 2 * a ? int((a + e) % 3 == 0) : int((a + s) % 2);
                }, [] (auto, auto, std::uint64_t a) -> Pos { return 2 * a + 1; }, "noisy"};
        throw InputError("unknown approximation '" + name + "'");
    }
}

auto wred::adversary_names() -> vector<string>
{
    return {"cm", "delta2", "qwwkl", "rainbow-measure", "splitter", "ts1"};
}

auto wred::run_adversary(const string & name, const map<string, string> & params, optional<Pos> stages) -> AdversaryRun
{
    Params p(params);
    AdversaryRun out;
    if (name == "qwwkl") {
        QwwklConfig cfg;
        cfg.p = p.rational("p", cfg.p);
        cfg.q = p.rational("q", cfg.q);
        cfg.height_cap = p.u64("height", cfg.height_cap);
        cfg.fuel = p.u64("fuel", cfg.fuel);
        if (stages)
            cfg.stages = *stages;
        auto phi = adversary_functional(p.str("phi", "identity"));
        auto psi = adversary_functional(p.str("psi", "zero"));
        p.finish();
        auto r = qwwkl_cutter(phi, psi, cfg);
        out.log = r.log;
        out.verdict = r.measure >= cfg.p && r.phi_measure < cfg.q
            ? Verdict::pass("T has measure " + to_string(r.measure) + ", Phi(T) measure " + to_string(r.phi_measure))
            : Verdict::inconclusive("T has measure " + to_string(r.measure) + ", Phi(T) measure " + to_string(r.phi_measure));
        out.summary = "a = " + to_string(r.a) + ", " + to_string(r.actions.size()) + " cuts, digest " + r.log.digest();
    }
    else if (name == "ts1") {
        Ts1Config cfg;
        cfg.j = p.u64("j", cfg.j);
        cfg.k = p.u64("k", cfg.k);
        cfg.horizon = p.u64("horizon", cfg.horizon);
        cfg.max_f = p.u64("max_f", cfg.max_f);
        cfg.stages = stages ? *stages : std::max<Pos>(cfg.stages, cfg.horizon);
        auto toy = p.str("toy", "recolour-echo");
        p.finish();
        auto toys = ts1_toys(cfg.j, cfg.k);
        auto it = std::find_if(toys.begin(), toys.end(), [&] (const ToyPair & t) { return t.name == toy; });
        if (it == toys.end())
            throw InputError("unknown toy pair '" + toy + "'");
        auto r = ts1_diagonalizer(it->phi, it->psi, cfg);
        out.log = r.log;
        out.verdict = r.verdict;
        out.summary = to_string(r.action_stages.size()) + " action stages, T = " + format_set(r.t);
    }
    else if (name == "delta2") {
        auto k = p.u64("k", 3);
        auto e = p.u64("e", 0);
        auto g = delta2_named(p.str("approx", "evens"));
        p.finish();
        Pos horizon = stages ? *stages : 64;
        auto d = delta2_diagonalizer(k, g);
        out.log = d.log(e, horizon);
        out.verdict = d.check_defeats(e, horizon);
        string col;
        for (Pos s = 0 ; s < std::min<Pos>(horizon, 32) ; ++s)
            col += char('0' + d.color(e, s));
        out.summary = "f_" + to_string(e) + " = " + col;
    }
    else if (name == "cm") {
        auto phi = adversary_functional(p.str("phi", "pair-01"));
        p.finish();
        Pos horizon = stages ? *stages : 24;
        auto r = cm_coloring(phi, horizon);
        out.log = StageLog("cm");
        if (r.excluded)
            out.log.append(StageRecord{*r.trigger_stage, "trigger", "x=" + to_string(r.excluded->x) + ";y=" + to_string(r.excluded->y),
                    0, 0, "sigma=" + r.excluded->sigma.to_string(), {}, {}});
        out.verdict = is_bounded(r.f, horizon, 2);
        out.summary = r.excluded ? "pair excluded" : "no pair excluded below the horizon";
    }
    else if (name == "rainbow-measure" || name == "splitter") {
        RainbowMeasureConfig cfg;
        cfg.horizon = stages ? *stages : cfg.horizon;
        cfg.max_length = p.u64("max_length", cfg.max_length);
        auto phi = adversary_functional(p.str("phi", "two-bit-pairs"));
        if (name == "rainbow-measure") {
            auto q = p.rational("q", Rational(1, 4));
            p.finish();
            auto r = rainbow_measure_coloring(phi, q, cfg);
            out.log = r.log;
            out.verdict = r.verdict;
            out.summary = to_string(r.fsets.size()) + " sets, bound " + to_string(r.bound);
        }
        else {
            auto e = p.u64("e", 0);
            auto count = p.u64("columns", 2);
            p.finish();
            out.log = StageLog("splitter");
            out.verdict = Verdict::pass();
            for (auto & c : rrt_column_splitter(phi, e, count, cfg)) {
                out.log.append(StageRecord{c.j, "column", "index=" + to_string(c.index), 0, 0,
                        "q=" + to_string(c.run.q) + ";sets=" + to_string(c.run.fsets.size()) + ";bound=" + to_string(c.run.bound), {}, {}});
                out.verdict = worst(out.verdict, c.run.verdict);
            }
            out.summary = to_string(count) + " columns";
        }
    }
    else
        throw InputError("unknown adversary '" + name + "'");
    return out;
}
