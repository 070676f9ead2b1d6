#include <wred/harness.hh>
#include <wred/error.hh>

#include <gtest/gtest.h>

#include <cstdlib>

using namespace wred;

using std::string;
using std::vector;

namespace
{
    auto doc(const string & body) -> string
    {
        return "wred-instance 1\n" + body + "end\n";
    }
}

TEST(Document, ParseAndRender)
{
    auto d = parse_document(doc("kind coloring\nrepresentation rule\nrule parity-sum\nparam n 2\nparam k 2  # two colours\n"));
    EXPECT_EQ(d.kind, "coloring");
    EXPECT_EQ(d.rule, "parity-sum");
    EXPECT_EQ(param_u64(d, "n"), 2u);
    EXPECT_EQ(param_u64(d, "missing", 7), 7u);
    EXPECT_THROW(param_u64(d, "missing"), InputError);
    auto again = parse_document(render_document(d));
    EXPECT_EQ(render_document(again), render_document(d));
}

TEST(Document, Rejects)
{
    EXPECT_THROW(parse_document(""), InputError);
    EXPECT_THROW(parse_document("wred-instance 2\nend\n"), InputError);
    EXPECT_THROW(parse_document("wred-instance 1\nkind coloring\nrepresentation rule\nrule x\n"), InputError);
    EXPECT_THROW(parse_document(doc("kind teapot\nrepresentation rule\nrule x\n")), InputError);
    EXPECT_THROW(parse_document(doc("kind tree\nrepresentation table\nrule full\n")), InputError);
    EXPECT_THROW(parse_document(doc("kind tree\nrepresentation rule\nparam a 1\nparam a 2\nrule full\n")), InputError);
    try {
        parse_document(doc("kind tree\nrepresentation table\ncell 0 x 1\n"));
        FAIL();
    }
    catch (const InputError & e) {
        EXPECT_NE(string(e.what()).find("line 4"), string::npos) << e.what();
    }
}

TEST(Document, ColoringTableRoundTrip)
{
    auto f = load_coloring(parse_document(doc("kind coloring\nrepresentation rule\nrule parity-sum\nparam n 2\nparam k 2\n")));
    auto saved = save_coloring(f, 8);
    EXPECT_EQ(saved.cells.size(), 28u);
    auto g = load_coloring(parse_document(render_document(saved)));
    for (Pos a = 0 ; a < 8 ; ++a)
        for (Pos b = a + 1 ; b < 8 ; ++b) {
            EXPECT_EQ(g(Tuple{a, b}), (a + b) % 2);
            EXPECT_EQ(f(Tuple{a, b}), g(Tuple{a, b}));
        }
}

TEST(Document, ColoringTableRejects)
{
    auto f = constant_coloring(1, 3, 2);
    auto d = save_coloring(f, 4);
    d.cells[2][2] = 3;
    EXPECT_THROW(load_coloring(d), InputError);
    d = save_coloring(f, 4);
    d.cells.pop_back();
    EXPECT_THROW(load_coloring(d), InputError);
    d = save_coloring(f, 4);
    d.cells[1][1] = 0;
    EXPECT_THROW(load_coloring(d), InputError);
    d = save_coloring(f, 4);
    EXPECT_THROW(load_tree(d), InputError);
}

TEST(Document, TreePointFamily)
{
    auto t = load_tree(parse_document(doc("kind tree\nrepresentation rule\nrule no-11\n")));
    auto saved = save_tree(t, 4);
    auto u = load_tree(parse_document(render_document(saved)));
    for (Pos i = 0 ; i < 31 ; ++i)
        EXPECT_EQ(t.contains(index_string(i)), u.contains(index_string(i)));
    EXPECT_FALSE(u.contains(Prefix::from_string("0110")));
    EXPECT_TRUE(u.contains(Prefix::from_string("01010")));

    auto p = random_point(5);
    auto q = load_point(parse_document(render_document(save_point(p, 20))));
    for (Pos i = 0 ; i < 20 ; ++i)
        EXPECT_EQ(p.at(i), q.at(i));
    EXPECT_EQ(q.at(40), 0);

    auto fam = load_family(parse_document(doc("kind family\nrepresentation table\nparam columns 2\nparam length 2\n"
                    "cell 0 0 1\ncell 0 1 0\ncell 1 0 0\ncell 1 1 1\n")));
    EXPECT_EQ(fam.member(0, 0), 1);
    EXPECT_EQ(fam.member(1, 1), 1);
    EXPECT_EQ(fam.member(1, 0), 0);
    EXPECT_THROW(load_family(parse_document(doc("kind family\nrepresentation table\nparam columns 1\nparam length 2\ncell 0 0 1\n"))),
            InputError);
}

TEST(Document, RulesAndSquash)
{
    for (auto kind : {"coloring", "tree", "point", "family", "predicate", "squash"})
        EXPECT_FALSE(rule_names(kind).empty()) << kind;
    EXPECT_THROW(rule_names("teapot"), InputError);
    EXPECT_THROW(load_coloring(parse_document(doc("kind coloring\nrepresentation rule\nrule nope\n"))), InputError);
    auto cfg = load_squash_config(parse_document(doc("kind squash\nrepresentation rule\nrule trivial-q\nparam stages 6\n")));
    EXPECT_EQ(cfg.stages, 6u);
    auto phi = load_predicate(parse_document(doc("kind predicate\nrepresentation rule\nrule even\n")));
    EXPECT_TRUE(audit_predicate(phi, 6).ok());
}

TEST(Report, CsvSortedAndExitCode)
{
    Report r;
    r.add({"b", "e", "c", "pass", "x,y", 1, 2, 3});
    r.add({"a", "e", "c", "inconclusive", "", 1, 2, 3});
    EXPECT_EQ(r.to_csv(), "case_id,entry_id,check,status,detail,seed,horizon,fuel\n"
            "a,e,c,inconclusive,,1,2,3\nb,e,c,pass,\"x,y\",1,2,3\n");
    EXPECT_EQ(r.exit_code(), 0);
    r.add({"c", "e", "c", "fail", "", 0, 0, 0});
    EXPECT_EQ(r.exit_code(), 1);
    r.add({"d", "e", "c", "error", "resource: out of fuel", 0, 0, 0});
    EXPECT_EQ(r.exit_code(), 2);
    r.add({"e", "e", "c", "error", "input: bad", 0, 0, 0});
    EXPECT_EQ(r.exit_code(), 3);
}

TEST(Suite, Selectors)
{
    EXPECT_THROW(select_entries(""), InputError);
    EXPECT_THROW(select_entries("no-such-entry"), InputError);
    EXPECT_EQ(select_entries("all").size(), catalog().size());
    EXPECT_EQ(select_entries("rt-product*").size(), 3u);
    EXPECT_EQ(select_entries("coh-pair").size(), 1u);
}

TEST(Suite, ProductAllPassAndDeterministic)
{
    SuiteConfig cfg;
    cfg.samples = 5;
    cfg.seed = 11;
    auto a = run_suite("rt-product*", cfg);
    EXPECT_EQ(a.rows.size(), 15u);
    EXPECT_EQ(a.count("pass"), 15u) << a.to_csv();
    EXPECT_EQ(a.exit_code(), 0);
    auto b = run_suite("rt-product*", cfg);
    EXPECT_EQ(a.to_csv(), b.to_csv());
}

TEST(Suite, Environment)
{
    ::setenv("WRED_HORIZON_DEFAULT", "12", 1);
    ::setenv("WRED_FUEL_DEFAULT", "5000", 1);
    auto cfg = config_from_env();
    EXPECT_EQ(cfg.horizon, Pos(12));
    EXPECT_EQ(cfg.fuel, Pos(5000));
    SuiteConfig set;
    set.horizon = 9;
    EXPECT_EQ(config_from_env(set).horizon, Pos(9));
    ::setenv("WRED_FUEL_DEFAULT", "lots", 1);
    EXPECT_THROW(config_from_env(), InputError);
    ::unsetenv("WRED_HORIZON_DEFAULT");
    ::unsetenv("WRED_FUEL_DEFAULT");
    EXPECT_FALSE(config_from_env().horizon);
}

TEST(Squash, ReportsIdentity)
{
    auto r = run_squash(find_squash_config("trivial-q"), 8, 4, 3);
    EXPECT_EQ(r.exit_code(), 0) << r.to_csv();
    EXPECT_EQ(r.count("fail"), 0u);
    EXPECT_EQ(r.rows.back().check, "identity");
    EXPECT_EQ(r.to_csv(), run_squash(find_squash_config("trivial-q"), 8, 4, 3).to_csv());
}

TEST(Oracle, Tasks)
{
    auto d = parse_document(doc("kind coloring\nrepresentation rule\nrule parity-sum\nparam n 2\nparam k 2\n"));
    auto r = run_oracle("homogeneous", d, 12, 4);
    EXPECT_EQ(r.rows.at(0).status, "pass") << r.rows.at(0).detail;
    EXPECT_THROW(run_oracle("teapot", d, 12, 4), InputError);
    auto t = parse_document(doc("kind tree\nrepresentation rule\nrule no-11\n"));
    auto p = run_oracle("paths", t, 4, 0);
    EXPECT_NE(p.rows.at(0).detail.find("8 strings"), string::npos) << p.rows.at(0).detail;
}

TEST(Adversary, Runs)
{
    for (auto & n : adversary_names()) {
        auto r = run_adversary(n, {}, std::nullopt);
        EXPECT_FALSE(r.verdict.failed()) << n << ": " << r.verdict.detail;
        EXPECT_FALSE(r.summary.empty());
    }
    EXPECT_THROW(run_adversary("qwwkl", {{"colour", "3"}}, 4), InputError);
    EXPECT_THROW(run_adversary("nope", {}, 4), InputError);
    auto a = run_adversary("qwwkl", {{"phi", "identity"}, {"psi", "zero"}}, std::nullopt);
    EXPECT_EQ(a.log.size(), 64u);
    EXPECT_EQ(a.log.digest(), run_adversary("qwwkl", {}, std::nullopt).log.digest());
}
