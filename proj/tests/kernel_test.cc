#include <wred/error.hh>
#include <wred/kernel.hh>

#include <gtest/gtest.h>

#include <algorithm>
#include <memory>
#include <thread>

using namespace wred;

using std::vector;

namespace
{
    auto alternating() -> Point
    {
        return Point{"0101", [] (Pos i) { return int(i % 2); }};
    }

    // reads x and x+1, then spins for x steps
    auto busy() -> Functional
    {
        return Functional{1, [] (Query & q, Pos x) {
            q.tick(x);
            return q.bit(0, x) ^ q.bit(0, x + 1);
        }, "busy"};
    }
}

TEST(Evaluate, IdentityOnAlternating)
{
    auto r = evaluate(identity_functional(), {alternating()}, 3, 100);
    ASSERT_TRUE(r.converged());
    EXPECT_EQ(r.value, 1);
    ASSERT_TRUE(r.use[0].has_value());
    EXPECT_EQ(*r.use[0], 3u);
}

TEST(Evaluate, ZeroFuelDiverges)
{
    EXPECT_FALSE(evaluate(identity_functional(), {alternating()}, 0, 0).converged());
    EXPECT_FALSE(evaluate(constant_functional(1, 1), {alternating()}, 0, 0).converged());
}

TEST(Evaluate, ArityMismatchIsInputError)
{
    EXPECT_THROW(evaluate(projection(2, 0), {alternating()}, 0, 10), InputError);
}

TEST(Evaluate, PrefixOverrunDiverges)
{
    auto r = evaluate(identity_functional(), {Prefix::from_string("01")}, 5, 100);
    EXPECT_FALSE(r.converged());
    EXPECT_TRUE(r.prefix_overrun);
    auto s = evaluate(identity_functional(), {Prefix::from_string("01")}, 1, 100);
    ASSERT_TRUE(s.converged());
    EXPECT_EQ(s.value, 1);
}

TEST(Evaluate, UnqueriedTapesHaveNoUse)
{
    auto r = evaluate(projection(3, 1), {alternating(), alternating(), alternating()}, 4, 10);
    ASSERT_TRUE(r.converged());
    EXPECT_FALSE(r.use[0].has_value());
    EXPECT_TRUE(r.use[1].has_value());
    EXPECT_FALSE(r.use[2].has_value());
}

TEST(Evaluate, RuleFailureIsInputError)
{
    Point bad{"bad", [] (Pos i) -> int { if (i > 2) throw std::runtime_error("boom"); return 0; }};
    EXPECT_THROW(evaluate(identity_functional(), {bad}, 5, 100), InputError);
    Point two{"two", [] (Pos) { return 2; }};
    EXPECT_THROW(evaluate(identity_functional(), {two}, 0, 100), InputError);
}

TEST(Evaluate, EvenBitsOfInterleave)
{
    auto t0 = random_point(7, 0), t1 = random_point(7, 1);
    auto both = interleave(t0, t1);
    Functional evens{1, [] (Query & q, Pos x) { return q.bit(0, 2 * x); }, "evens"};
    for (Pos d = 0 ; d < 16 ; ++d) {
        // direct de-interleave: position 2d of the merged tape
        auto r = evaluate(evens, {both}, d, 100);
        ASSERT_TRUE(r.converged());
        EXPECT_EQ(r.value, t0.at(d));
    }
}

TEST(Evaluate, DeterminismUseSoundnessAndClosure)
{
    vector<Functional> fs{identity_functional(), busy(), projection(1, 0), constant_functional(1, 0)};
    for (auto & f : fs)
        for (std::uint64_t seed = 0 ; seed < 5 ; ++seed)
            for (Pos x = 0 ; x < 12 ; ++x) {
                auto a = random_point(seed);
                for (Pos fuel : {Pos(3), Pos(10), Pos(1000)}) {
                    auto r = check_contract(f, {a}, x, fuel);
                    auto s = evaluate(f, {a}, x, fuel);
                    EXPECT_EQ(r.status, s.status);
                    EXPECT_EQ(r.value, s.value);
                    EXPECT_EQ(r.steps, s.steps);
                }
            }
}

TEST(Evaluate, MonitorFlagsClosureViolation)
{
    // converges at odd positions only
    Functional odd{1, [] (Query & q, Pos x) {
        if (x % 2 == 0)
            q.tick(1000);
        return q.bit(0, x);
    }, "odd-only"};
    Monitor m(odd);
    EXPECT_THROW(m.evaluate({alternating()}, 3, 50), ContractError);
}

TEST(Evaluate, MonitorFlagsStatefulFunctional)
{
    auto calls = std::make_shared<int>(0);
    Functional flaky{1, [calls] (Query & q, Pos x) { return q.bit(0, x) ^ ((*calls)++ % 2); }, "flaky"};
    Monitor m(flaky);
    EXPECT_THROW(m.evaluate({alternating()}, 2, 50), ContractError);
}

TEST(Evaluate, AppliedTapesShareBudget)
{
    auto inner = busy();
    Functional outer{1, [inner] (Query & q, Pos x) {
        auto t = applied(inner, {q.tape(0)}, q.budget());
        return t(x);
    }, "outer"};
    auto a = random_point(3);
    auto r = evaluate(outer, {a}, 6, 1000);
    ASSERT_TRUE(r.converged());
    EXPECT_EQ(r.value, a.at(6) ^ a.at(7));
    EXPECT_EQ(*r.use[0], 7u);
    EXPECT_FALSE(evaluate(outer, {a}, 6, 5).converged());
}

TEST(TupleRank, LeastPair)
{
    EXPECT_EQ(tuple_rank({0, 1}), 0u);
}

TEST(TupleRank, FifthPairByEnumeration)
{
    vector<Tuple> pairs;
    for (Pos y = 0 ; y < 6 ; ++y)
        for (Pos x = 0 ; x < y ; ++x)
            pairs.push_back({x, y});
    std::sort(pairs.begin(), pairs.end(), [] (const Tuple & a, const Tuple & b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    EXPECT_EQ(pairs[5], (Tuple{2, 3}));
    EXPECT_EQ(rank_tuple(5, 2), (Tuple{2, 3}));
    for (std::size_t r = 0 ; r < pairs.size() ; ++r)
        EXPECT_EQ(rank_tuple(r, 2), pairs[r]);
}

TEST(TupleRank, RoundTripTriples)
{
    for (Pos r = 0 ; r < 200 ; ++r)
        EXPECT_EQ(tuple_rank(rank_tuple(r, 3)), r);
}

TEST(TupleRank, RankBelowMIsBoundedMaximum)
{
    // ranks below C(m, n) are exactly the tuples with maximum below m
    for (Pos m = 2 ; m < 9 ; ++m)
        for (Pos r = 0 ; r < binomial(m, 2) + 3 ; ++r)
            EXPECT_EQ(rank_tuple(r, 2).back() < m, r < binomial(m, 2));
}

TEST(TupleRank, NonIncreasingIsInputError)
{
    EXPECT_THROW(tuple_rank({3, 3}), InputError);
    EXPECT_THROW(tuple_rank({4, 1}), InputError);
}

TEST(Codec, InterleaveConstants)
{
    auto p = interleave(Point::constant(0), Point::constant(1));
    EXPECT_EQ(p.prefix(8).to_string(), "01010101");
}

TEST(Codec, ColumnOfFamily)
{
    auto fam = family([] (std::uint64_t i) { return Point::constant(int(i % 2)); });
    auto c = column(fam, 3);
    for (Pos x = 0 ; x < 16 ; ++x)
        EXPECT_EQ(c.at(x), 1);
}

TEST(Codec, EvenBitsReproduceFirstTape)
{
    auto a = random_point(11, 0), b = random_point(11, 1);
    auto e = even_bits(interleave(a, b));
    auto o = odd_bits(interleave(a, b));
    for (Pos x = 0 ; x < 32 ; ++x) {
        EXPECT_EQ(e.at(x), a.at(x));
        EXPECT_EQ(o.at(x), b.at(x));
    }
}

TEST(Codec, CantorRoundTrip)
{
    for (std::uint64_t z = 0 ; z < 5000 ; ++z) {
        auto [a, b] = cantor_unpair(z);
        EXPECT_EQ(cantor_pair(a, b), z);
    }
    EXPECT_EQ(cantor_pair(0, 0), 0u);
    EXPECT_EQ(cantor_pair(1, 0), 1u);
    EXPECT_EQ(cantor_pair(0, 1), 2u);
}

TEST(Codec, PrefixParts)
{
    auto p = Prefix::from_string("011011");
    EXPECT_EQ(even_part(p).to_string(), "011");
    EXPECT_EQ(odd_part(p).to_string(), "101");
    EXPECT_THROW(Prefix::from_string("012"), InputError);
}

TEST(Point, ConcurrentReadersAgree)
{
    auto p = random_point(99);
    vector<int> first(256), second(256);
    std::thread t1([&] { for (Pos i = 0 ; i < 256 ; ++i) first[i] = p.at(i); });
    std::thread t2([&] { for (Pos i = 0 ; i < 256 ; ++i) second[i] = p.at(i); });
    t1.join();
    t2.join();
    EXPECT_EQ(first, second);
}
