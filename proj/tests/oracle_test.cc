#include <wred/error.hh>
#include <wred/oracle.hh>
#include <wred/problems.hh>

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace wred;

using std::optional;
using std::vector;

namespace
{
    auto parity_sum() -> Coloring
    {
        return Coloring{2, 2, [] (const Tuple & t) { return (t[0] + t[1]) % 2; }, "parity-sum"};
    }

    auto budget(Pos n, Pos s) -> SearchBudget
    {
        SearchBudget b;
        b.horizon = n;
        b.size = s;
        return b;
    }

    // independent reference: first size-s subset of [0,n) in lexicographic order satisfying ok
    auto first_subset(Pos n, Pos s, const std::function<bool (const vector<Pos> &)> & ok) -> optional<vector<Pos>>
    {
        vector<Pos> all;
        for (Pos x = 0 ; x < n ; ++x)
            all.push_back(x);
        optional<vector<Pos>> found;
        for_each_subset(all, s, [&] (const Tuple & t) {
            if (ok(t)) {
                found = t;
                return false;
            }
            return true;
        });
        return found;
    }

    auto no_consecutive_ones() -> TreeByRule
    {
        return TreeByRule{[] (const Prefix & p) {
            for (Pos i = 1 ; i < p.length() ; ++i)
                if (p.at(i) && p.at(i - 1))
                    return false;
            return true;
        }, std::nullopt, "no11"};
    }
}

TEST(FindHomogeneous, ConstantColouring)
{
    auto r = find_homogeneous(constant_coloring(2, 3, 1), budget(10, 5));
    ASSERT_TRUE(r.set);
    EXPECT_EQ(*r.set, (vector<Pos>{0, 1, 2, 3, 4}));
}

TEST(FindHomogeneous, ParitySum)
{
    auto f = parity_sum();
    auto ref = first_subset(8, 4, [&] (const vector<Pos> & s) {
        std::set<std::uint64_t> cs;
        for_each_subset(s, 2, [&] (const Tuple & t) { cs.insert(f(t)); return true; });
        return cs.size() <= 1;
    });
    ASSERT_TRUE(ref);
    EXPECT_EQ(*ref, (vector<Pos>{0, 2, 4, 6}));
    auto r = find_homogeneous(f, budget(8, 4));
    ASSERT_TRUE(r.set);
    EXPECT_EQ(*r.set, *ref);
}

TEST(FindHomogeneous, TooLargeIsCertifiedAbsent)
{
    auto r = find_homogeneous(parity_sum(), budget(8, 9));
    EXPECT_FALSE(r.set);
    EXPECT_TRUE(r.certified_absent());
    EXPECT_EQ(r.verdict().status, Status::Fail);
}

TEST(FindHomogeneous, NodeLimitIsInconclusive)
{
    std::mt19937_64 rng(1);
    vector<std::uint64_t> table(binomial(20, 2));
    for (auto & c : table)
        c = rng() % 2;
    auto b = budget(20, 9);
    b.node_limit = 50;
    auto r = find_homogeneous(table_coloring(2, 2, 20, table), b);
    if (! r.set) {
        EXPECT_TRUE(r.budget_hit);
        EXPECT_EQ(r.verdict().status, Status::Inconclusive);
    }
}

TEST(FindHomogeneous, AgreesWithReferenceOnRandomColourings)
{
    std::mt19937_64 rng(2);
    for (int trial = 0 ; trial < 30 ; ++trial) {
        vector<std::uint64_t> table(binomial(9, 2));
        for (auto & c : table)
            c = rng() % 2;
        auto f = table_coloring(2, 2, 9, table);
        auto ref = first_subset(9, 4, [&] (const vector<Pos> & s) {
            std::set<std::uint64_t> cs;
            for_each_subset(s, 2, [&] (const Tuple & t) { cs.insert(f(t)); return true; });
            return cs.size() <= 1;
        });
        auto r = find_homogeneous(f, budget(9, 4));
        EXPECT_EQ(r.set, ref);
    }
}

TEST(FindThin, TwoColoursIsHomogeneousWithComplement)
{
    auto f = parity_sum();
    auto t = find_thin(f, budget(8, 4));
    auto h = find_homogeneous(f, budget(8, 4));
    ASSERT_TRUE(t.set && h.set);
    EXPECT_EQ(*t.set, *h.set);
    EXPECT_EQ(*t.omitted, 1 - f({(*h.set)[0], (*h.set)[1]}));
}

TEST(FindThin, ModThree)
{
    Coloring f{1, 3, [] (const Tuple & t) { return t[0] % 3; }, "mod3"};
    auto ref = first_subset(9, 6, [&] (const vector<Pos> & s) {
        std::set<std::uint64_t> cs;
        for (auto x : s)
            cs.insert(f({x}));
        return cs.size() < 3;
    });
    ASSERT_TRUE(ref);
    EXPECT_EQ(*ref, (vector<Pos>{0, 1, 3, 4, 6, 7}));
    auto r = find_thin(f, budget(9, 6));
    ASSERT_TRUE(r.set);
    EXPECT_EQ(*r.set, *ref);
    EXPECT_EQ(*r.omitted, 2u);
}

TEST(FindThin, InfeasibleBudgetIsInconclusive)
{
    Coloring f{1, 3, [] (const Tuple & t) { return t[0] % 3; }, "mod3"};
    auto b = budget(30, 21);
    b.node_limit = 3;
    auto r = find_thin(f, b);
    EXPECT_FALSE(r.set);
    EXPECT_EQ(r.verdict().status, Status::Inconclusive);
}

TEST(FindThin, OmittedColourAlwaysInRange)
{
    std::mt19937_64 rng(3);
    for (int trial = 0 ; trial < 40 ; ++trial) {
        std::uint64_t k = 2 + rng() % 3;
        vector<std::uint64_t> table(binomial(10, 2));
        for (auto & c : table)
            c = rng() % k;
        auto f = table_coloring(2, k, 10, table);
        auto r = find_thin(f, budget(10, 4));
        if (r.set) {
            ASSERT_TRUE(r.omitted);
            EXPECT_LT(*r.omitted, k);
            EXPECT_TRUE(verify_thin_at(f, ThinSolution{Point::from_set(*r.set), *r.omitted}, 10, 4).ok());
        }
    }
}

TEST(FindRainbow, InjectiveAndConstant)
{
    Coloring inj{2, std::nullopt, [] (const Tuple & t) { return tuple_rank(t); }, "rank"};
    auto r = find_rainbow(inj, budget(12, 6));
    ASSERT_TRUE(r.set);
    EXPECT_EQ(*r.set, (vector<Pos>{0, 1, 2, 3, 4, 5}));
    auto c = find_rainbow(constant_coloring(2, 1, 0), budget(12, 3));
    EXPECT_FALSE(c.set);
    EXPECT_TRUE(c.certified_absent());
}

TEST(EnumeratePaths, Counts)
{
    EXPECT_EQ(enumerate_paths(full_tree(), 3).size(), 8u);
    auto p = enumerate_paths(no_consecutive_ones(), 4);
    EXPECT_EQ(p.size(), 8u);
    EXPECT_TRUE(std::is_sorted(p.begin(), p.end()));
    TreeByRule dead{[] (const Prefix & s) { return s.length() < 2; }, std::nullopt, "dead"};
    EXPECT_TRUE(enumerate_paths(dead, 3).empty());
}

TEST(EnumeratePaths, CountMatchesMeasure)
{
    vector<TreeByRule> ts{full_tree(), no_consecutive_ones(),
        TreeByRule{[] (const Prefix & s) { return s.length() == 0 || s.at(0) == 1; }, std::nullopt, "starts1"}};
    for (auto & t : ts)
        for (Pos d = 0 ; d <= 8 ; ++d) {
            Rational count(mpz_class(enumerate_paths(t, d).size()));
            EXPECT_EQ(count, measure_at_level(t, d) * Rational(mpz_class(1) << d));
        }
}

TEST(MinHomogeneous, DependsOnlyOnMinimum)
{
    Coloring f{2, 2, [] (const Tuple & t) { return t[0] % 2; }, "min-parity"};
    auto r = find_min_homogeneous(f, budget(10, 5));
    ASSERT_TRUE(r.set);
    EXPECT_EQ(*r.set, (vector<Pos>{0, 1, 2, 3, 4}));
}

TEST(MinHomogeneous, ParitySum)
{
    auto r = find_min_homogeneous(parity_sum(), budget(8, 4));
    ASSERT_TRUE(r.set);
    EXPECT_EQ(*r.set, (vector<Pos>{0, 1, 3, 5}));
    auto none = find_min_homogeneous(parity_sum(), budget(4, 5));
    EXPECT_FALSE(none.set);
}

TEST(Structural, ConstantPassesAll)
{
    auto f = constant_coloring(2, 2, 0);
    vector<Pos> h{0, 1, 2, 3, 4, 5, 6};
    for (auto s : {Structure::Transitive, Structure::SemiTransitive, Structure::SemiHereditary, Structure::SemiTrivial})
        EXPECT_TRUE(structural_check(f, h, s).verdict.ok()) << structure_name(s);
}

TEST(Structural, LinearOrderIsTransitive)
{
    vector<Pos> perm{5, 2, 7, 0, 3, 6, 1, 4};
    Coloring f{2, 2, [perm] (const Tuple & t) { return std::uint64_t(perm[t[0]] < perm[t[1]]); }, "order"};
    vector<Pos> h{0, 1, 2, 3, 4, 5, 6, 7};
    EXPECT_TRUE(structural_check(f, h, Structure::Transitive).verdict.ok());
}

TEST(Structural, BrokenTripleFails)
{
    // f(0,1) = f(1,2) = 1 but f(0,2) = 0, and the same for colour 0 on (3,4,5)
    Coloring f{2, 2, [] (const Tuple & t) -> std::uint64_t {
        if (t == Tuple{0, 2})
            return 0;
        if (t == Tuple{3, 5})
            return 1;
        if (t[0] >= 3)
            return 0;
        return 1;
    }, "broken"};
    auto r = structural_check(f, {0, 1, 2}, Structure::Transitive);
    EXPECT_TRUE(r.verdict.failed());
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(*r.witness, (Tuple{0, 1, 2}));
    auto semi = structural_check(f, {0, 1, 2}, Structure::SemiTransitive);
    EXPECT_TRUE(semi.verdict.ok());
    EXPECT_EQ(semi.exceptional, std::optional<std::uint64_t>(1));
    EXPECT_TRUE(structural_check(f, {0, 1, 2, 3, 4, 5}, Structure::SemiTransitive).verdict.failed());
}
