#include <wred/codings.hh>
#include <wred/error.hh>
#include <wred/oracle.hh>

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "coding_fixtures.hh"

using namespace wred;

using std::set;
using std::string;
using std::vector;

using namespace wred::fixtures;

TEST(Jump, QuantifierShape)
{
    EXPECT_TRUE(quantifier_is_exists(1, 0));
    EXPECT_TRUE(quantifier_is_exists(3, 0));
    EXPECT_FALSE(quantifier_is_exists(3, 1));
    EXPECT_TRUE(quantifier_is_exists(3, 2));
    // even n leads with forall
    EXPECT_FALSE(quantifier_is_exists(2, 0));
    EXPECT_TRUE(quantifier_is_exists(2, 1));
}

TEST(Jump, DeclaredTruthAudits)
{
    for (auto & p : predicates())
        EXPECT_TRUE(audit_predicate(p, 6).ok()) << p.name;
    auto bad = pred("lie", 1, [] (auto, auto &) { return 0; }, [] (auto) { return true; });
    EXPECT_TRUE(audit_predicate(bad, 6).failed());
}

TEST(Jump, EqualityPredicate)
{
    auto f = jump_coloring(predicates()[0]);
    for (std::uint64_t i = 0 ; i < 6 ; ++i)
        for (Pos y = 0 ; y < 20 ; ++y)
            EXPECT_EQ(f.column(i)({y}), y > i ? 1u : 0u);
}

TEST(Jump, NeverIsZero)
{
    auto f = jump_coloring(predicates()[1]);
    for (Pos y = 0 ; y < 20 ; ++y)
        EXPECT_EQ(f.column(3)({y}), 0u);
    EXPECT_EQ(jump_decode(f, {{7, 9, 12}}), vector<int>{0});
}

TEST(Jump, DecodeMatchesTruthOnTwentyPredicates)
{
    auto ps = predicates();
    ASSERT_EQ(ps.size(), 20u);
    int mismatches = 0;
    for (auto & p : ps) {
        auto f = jump_coloring(p);
        vector<vector<Pos>> hs;
        for (std::uint64_t i = 0 ; i < 6 ; ++i)
            hs.push_back(spread_homogeneous(f.column(i), 16));
        auto bits = jump_decode(f, hs);
        for (std::uint64_t i = 0 ; i < 6 ; ++i) {
            if (bits[i] != int(p.truth(i)))
                ++mismatches;
            auto c = jump_certificate(f, i, hs[i]);
            EXPECT_TRUE(c.verdict.ok()) << p.name << " i=" << i << ": " << c.verdict.detail;
        }
    }
    EXPECT_EQ(mismatches, 0);
}

TEST(Jump, BothConstructionsForNTwo)
{
    // true side builds z_1 past the Skolem bound, false side builds z_0 past it
    auto ps = predicates();
    auto f = jump_coloring(ps[11]);
    vector<Pos> h{17, 20, 25, 31};
    auto yes = jump_certificate(f, 2, h);
    auto no = jump_certificate(f, 3, h);
    EXPECT_TRUE(yes.truth);
    EXPECT_FALSE(no.truth);
    EXPECT_EQ(yes.color, 1u);
    EXPECT_EQ(no.color, 0u);
    EXPECT_TRUE(yes.verdict.ok());
    EXPECT_TRUE(no.verdict.ok());

    auto g = jump_coloring(ps[18]);
    auto c = jump_certificate(g, 0, vector<Pos>{4, 8, 11, 14});
    // the negation's witness is x_0 = 10, so z_0 = 11
    EXPECT_EQ(c.z, (vector<Pos>{11, 14}));
    EXPECT_EQ(c.color, 0u);
}

TEST(Jump, SkolemWitnesses)
{
    auto ps = predicates();
    EXPECT_EQ(skolem(ps[2], 4, true, {}), Pos(2));
    EXPECT_EQ(skolem(ps[10], 0, true, {5}), Pos(6));
    EXPECT_EQ(skolem(ps[13], 2, false, {}), Pos(2));
    EXPECT_THROW(skolem(ps[10], 0, true, {}), InputError);
}

TEST(Jump, ShortHIsInconclusive)
{
    auto f = jump_coloring(predicates()[0]);
    auto c = jump_certificate(f, 5, vector<Pos>{1, 2, 3});
    EXPECT_EQ(c.verdict.status, Status::Inconclusive);
}

TEST(Jump, NonHomogeneousIsInputError)
{
    auto f = jump_coloring(predicates()[0]);
    EXPECT_THROW(jump_decode(f, {{0, 5, 9}}), InputError);
}

TEST(Jump, PointEncodesColumns)
{
    auto f = jump_coloring(predicates()[10]);
    auto p = f.point();
    for (std::uint64_t i = 0 ; i < 3 ; ++i) {
        auto col = totalize_coloring(column(p, i), 2, 2);
        for (Pos a = 0 ; a < 8 ; ++a)
            for (Pos b = a + 1 ; b < 8 ; ++b)
                EXPECT_EQ(col({a, b}), f.column(i)({a, b}));
    }
}


TEST(Kummer, LimitsAudit)
{
    for (auto & h : limits())
        EXPECT_TRUE(audit_limit(h, 6, 40).ok()) << h.name;
    auto bad = limits()[0];
    bad.stable = [] (auto, auto &) -> Pos { return 0; };
    EXPECT_TRUE(audit_limit(bad, 6, 40).failed());
}

TEST(Kummer, ColouringCountsMembers)
{
    auto f = kummer_coloring(limits()[1], 3);
    // x = {0, 3}: both in D
    EXPECT_EQ(f.column({0, 3})({7}), 2u);
    EXPECT_EQ(f.column({1, 3})({7}), 1u);
    EXPECT_THROW(f.column({1}), InputError);
}

TEST(Kummer, BruteForcedThinSetsSatisfyClaim)
{
    const Pos n = 20;
    std::mt19937_64 rng(5);
    std::uint64_t passes = 0;
    for (auto & h : limits())
        for (std::uint64_t k = 2 ; k <= 4 ; ++k) {
            auto f = kummer_coloring(h, k);
            for (auto & x : tuples(k - 1, 6)) {
                auto col = f.column(x);
                Pos reach = 0;
                for (auto i : x)
                    reach = std::max(reach, h.stable(i, {}));
                for (std::uint64_t c = 0 ; c < k ; ++c) {
                    vector<Pos> thin;
                    for (Pos y = 0 ; y < n ; ++y)
                        if (col({y}) != c)
                            thin.push_back(y);
                    vector<vector<Pos>> cands{thin};
                    for (int r = 0 ; r < 4 && thin.size() > 3 ; ++r) {
                        auto sub = thin;
                        std::shuffle(sub.begin(), sub.end(), rng);
                        sub.resize(3);
                        cands.push_back(sub);
                    }
                    for (auto & cand : cands) {
                        auto claim = kummer_claim_check(f, x, cand, c);
                        EXPECT_FALSE(claim.verdict.failed()) << h.name << " " << format_tuple(x) << " " << claim.verdict.detail;
                        bool hosts = std::any_of(cand.begin(), cand.end(), [&] (Pos y) { return y > reach; });
                        if (hosts) {
                            EXPECT_TRUE(claim.verdict.ok()) << claim.verdict.detail;
                            EXPECT_NE(claim.claimed, c);
                            EXPECT_LT(claim.colors.size(), k);
                            ++passes;
                        }
                    }
                }
            }
        }
    EXPECT_GT(passes, 100u);
}

TEST(Kummer, ConstantInY)
{
    auto f = kummer_coloring(limits()[1], 2);
    // |{3} cap D| = 1, so the thin set omits 0
    auto claim = kummer_claim_check(f, {3}, {1, 2, 5}, 0);
    EXPECT_TRUE(claim.verdict.ok());
    EXPECT_EQ(claim.claimed, 1u);
    EXPECT_TRUE(kummer_claim_check(f, {3}, {1, 2, 5}, 1).verdict.failed());
}

TEST(Kummer, WrongBoundsAreCaught)
{
    auto h = limits()[0];
    h.stable = [] (auto, auto &) -> Pos { return 0; };
    auto f = kummer_coloring(h, 2);
    // f_{<4>}(y) = (y + 4) mod 2 below 8, so colour 0 on evens, but 4 is in D
    auto claim = kummer_claim_check(f, {4}, {2, 4, 6}, 1);
    EXPECT_TRUE(claim.verdict.failed());
}

TEST(Kummer, SparseIsInconclusive)
{
    auto f = kummer_coloring(limits()[0], 2);
    EXPECT_EQ(kummer_claim_check(f, {5}, {0}, 0).verdict.status, Status::Inconclusive);
}

namespace
{
    auto fibers(std::uint64_t i) -> Coloring
    {
        Pos b = 1 + i % 3;
        return Coloring{1, std::nullopt, [i, b] (const Tuple & t) { return mix64(i * 1000 + t[0] / b); },
            "fibers" + std::to_string(b)};
    }

    // least eligible element, recomputed from scratch
    auto greedy_reference(const Coloring & f, Pos size, Pos horizon) -> vector<Pos>
    {
        vector<Pos> out;
        for (Pos x = 0 ; x < horizon && out.size() < size ; ++x) {
            bool fresh = true;
            for (auto a : out)
                fresh = fresh && f({a}) != f({x});
            if (fresh)
                out.push_back(x);
        }
        return out;
    }
}

TEST(Greedy, InjectiveGivesInitialSegment)
{
    auto id = Coloring{1, std::nullopt, [] (const Tuple & t) { return t[0]; }, "id"};
    EXPECT_EQ(rrt1_greedy(id, 5, 64).set, (vector<Pos>{0, 1, 2, 3, 4}));
}

TEST(Greedy, HalvesGivesEvens)
{
    auto half = Coloring{1, std::nullopt, [] (const Tuple & t) { return t[0] / 2; }, "half"};
    auto r = rrt1_greedy(half, 6, 64);
    EXPECT_EQ(r.set, (vector<Pos>{0, 2, 4, 6, 8, 10}));
    EXPECT_TRUE(r.verdict.ok());
}

TEST(Greedy, FiftyBoundedColumns)
{
    vector<Coloring> fs;
    for (std::uint64_t i = 0 ; i < 50 ; ++i)
        fs.push_back(fibers(i));
    auto rs = seq_rrt1_greedy(fs, 12, 64);
    for (std::uint64_t i = 0 ; i < 50 ; ++i) {
        EXPECT_TRUE(rs[i].verdict.ok()) << rs[i].verdict.detail;
        EXPECT_TRUE(verify_rainbow_at(fs[i], Point::from_set(rs[i].set), 64, 12).ok());
        EXPECT_EQ(rs[i].set, greedy_reference(fs[i], 12, 64));
        // dropping the last element and rerunning reproduces the prefix
        auto shorter = rrt1_greedy(fs[i], 11, 64);
        EXPECT_EQ(shorter.set, vector<Pos>(rs[i].set.begin(), rs[i].set.end() - 1));
    }
}

TEST(Greedy, ExhaustedIsInconclusive)
{
    auto c = constant_coloring(1, std::nullopt, 3);
    EXPECT_EQ(rrt1_greedy(c, 2, 64).verdict.status, Status::Inconclusive);
}

TEST(Omega, ZeroColouring)
{
    auto r = ts1_omega_column(constant_coloring(1, std::nullopt, 0), 4, 20);
    EXPECT_EQ(r.set, (vector<Pos>{0, 1, 2, 3}));
    EXPECT_TRUE(r.verdict.ok());
    EXPECT_NE(r.verdict.detail.find("simulated"), string::npos);
}

TEST(Omega, IdentityOmitsZero)
{
    auto id = Coloring{1, std::nullopt, [] (const Tuple & t) { return t[0]; }, "id"};
    auto r = ts1_omega_column(id, 4, 20);
    EXPECT_EQ(r.set, (vector<Pos>{1, 2, 3, 4}));
    EXPECT_EQ(r.omitted, 0u);
}

TEST(Omega, MixedSupport)
{
    auto f = Coloring{1, std::nullopt, [] (const Tuple & t) -> std::uint64_t { return t[0] == 3 || t[0] == 7 ? 5 : 0; }, "mixed"};
    auto rs = seq_ts1_omega_solver({f}, 4, 20);
    EXPECT_EQ(rs[0].set, (vector<Pos>{3, 7, 8, 9}));
    EXPECT_TRUE(rs[0].verdict.ok());
    EXPECT_NE(rs[0].omitted, std::nullopt);
    set<std::uint64_t> cs;
    for (auto a : rs[0].set)
        cs.insert(f({a}));
    EXPECT_FALSE(cs.contains(*rs[0].omitted));
}

namespace
{
    auto toy_approx(Pos declared) -> StableApprox
    {
        return StableApprox{[] (std::uint64_t i, const Tuple & x, Pos s) -> std::uint64_t {
            return s < 8 ? (x[0] + s + i) % 2 : (x[0] + i) % 2;
        }, 1, 2, [declared] (std::uint64_t, const Tuple &) { return declared; }, "toy"};
    }
}

TEST(Lift, ConstantInSIsArityBump)
{
    auto a = StableApprox{[] (std::uint64_t, const Tuple & x, Pos) -> std::uint64_t { return x[0] % 3; }, 1, 3,
        [] (std::uint64_t, const Tuple &) -> Pos { return 0; }, "const"};
    auto l = limit_lift(a);
    EXPECT_EQ(l.lifted(0).arity, 2u);
    for (Pos x = 0 ; x < 10 ; ++x)
        for (Pos s = x + 1 ; s < 12 ; ++s)
            EXPECT_EQ(l.lifted(0)({x, s}), l.limit(0)({x}));
}

TEST(Lift, AuditsDeclaredStabilization)
{
    EXPECT_NO_THROW(limit_lift(toy_approx(8)).audit(0, 20));
    EXPECT_THROW(limit_lift(toy_approx(4)).audit(0, 20), InputError);
}

TEST(Lift, ThinnessTransfers)
{
    auto l = limit_lift(toy_approx(8));
    for (std::uint64_t i = 0 ; i < 3 ; ++i) {
        auto r = find_thin(l.lifted(i), SearchBudget{20, 6, 2'000'000, 0, true});
        ASSERT_TRUE(r.set);
        auto v = l.transfer_check(i, *r.set, *r.omitted);
        EXPECT_TRUE(v.ok()) << v.detail;
    }
    // a set below stabilization has nothing to carry over
    EXPECT_EQ(l.transfer_check(0, {0, 2, 4}, 1).status, Status::Inconclusive);
}
