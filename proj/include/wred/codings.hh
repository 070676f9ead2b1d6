#ifndef WRED_CODINGS_HH
#define WRED_CODINGS_HH 1

#include <wred/problems.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace wred
{
    // phi(i, x_0..x_{n-1}) under n alternating quantifiers whose last one is
    // existential: for odd n the prefix starts with exists, for even n with forall
    struct BoundedPredicate
    {
        std::function<int (std::uint64_t, const Tuple &)> rule;
        std::size_t n = 1;
        std::function<bool (std::uint64_t)> truth;     // declared ground truth
        std::string name;
        Pos domain = 32;                                // quantifier j ranges below domain * 4^j
    };

    auto quantifier_is_exists(std::size_t n, std::size_t j) -> bool;

    // truth of the formula with every quantifier bounded by the test domain
    auto bounded_truth(const BoundedPredicate & phi, std::uint64_t i) -> bool;
    auto audit_predicate(const BoundedPredicate & phi, std::uint64_t below) -> Verdict;

    // least witness for quantifier j of the given side, the earlier variables fixed;
    // side true witnesses the formula, side false its negation
    auto skolem(const BoundedPredicate & phi, std::uint64_t i, bool side, const Tuple & earlier) -> std::optional<Pos>;

    class JumpColoring
    {
        private:
            BoundedPredicate _phi;

        public:
            explicit JumpColoring(BoundedPredicate phi);
            auto predicate() const -> const BoundedPredicate &;
            // f_i(y) = 1 iff the formula holds with x_j < y_j
            auto value(std::uint64_t i, const Tuple & ys) const -> std::uint64_t;
            auto column(std::uint64_t i) const -> Coloring;
            auto point() const -> Point;
    };

    auto jump_coloring(const BoundedPredicate & phi) -> JumpColoring;

    // the single colour of each H_i; input error if some H_i is not homogeneous
    auto jump_decode(const JumpColoring & f, const std::vector<std::vector<Pos>> & hs) -> std::vector<int>;

    struct JumpCertificate
    {
        bool truth = false;
        std::vector<Pos> z;
        std::optional<std::uint64_t> color;
        Verdict verdict;
    };

    // the z-sequence from the Skolem bounds of the true side, inside H
    auto jump_certificate(const JumpColoring & f, std::uint64_t i, const std::vector<Pos> & h) -> JumpCertificate;

    // Kummer coding

    struct LimitPredicate
    {
        std::function<int (std::uint64_t, const Tuple &)> h;
        std::size_t n = 1;
        // for y_j > stable(i, y_0..y_{j-1}) at every j, h(i, y) = limit(i)
        std::function<Pos (std::uint64_t, const Tuple &)> stable;
        std::function<bool (std::uint64_t)> limit;
        std::string name;
    };

    // colours below the horizon where h disagrees with its limit past the declared bounds
    auto audit_limit(const LimitPredicate & h, std::uint64_t below, Pos horizon) -> Verdict;

    class KummerColoring
    {
        private:
            LimitPredicate _h;
            std::uint64_t _k;

        public:
            KummerColoring(LimitPredicate h, std::uint64_t k);
            auto k() const -> std::uint64_t;
            auto predicate() const -> const LimitPredicate &;
            // f_x(y) = |{i in x : h(i, y) = 1}|, x of size k - 1
            auto column(const Tuple & x) const -> Coloring;
            // columns indexed by the rank of x
            auto point() const -> Point;
    };

    auto kummer_coloring(const LimitPredicate & h, std::uint64_t k) -> KummerColoring;

    struct KummerClaim
    {
        std::vector<Pos> s;
        std::vector<Pos> y;
        std::vector<std::uint64_t> colors;      // on [H]^n
        std::uint64_t claimed = 0;              // |x cap D|
        Verdict verdict;
    };

    auto kummer_claim_check(const KummerColoring & f, const Tuple & x, const std::vector<Pos> & h,
            std::uint64_t omitted) -> KummerClaim;

    // sequential solvers

    struct ColumnSolution
    {
        std::vector<Pos> set;
        std::optional<std::uint64_t> omitted;
        Verdict verdict;
    };

    // each new element is the least whose colour is new
    auto rrt1_greedy(const Coloring & f, Pos size, Pos horizon) -> ColumnSolution;
    auto seq_rrt1_greedy(const std::vector<Coloring> & fs, Pos size, Pos horizon) -> std::vector<ColumnSolution>;

    // the jump is simulated by search below the horizon, and the verdict says so
    auto ts1_omega_column(const Coloring & f, Pos size, Pos horizon) -> ColumnSolution;
    auto seq_ts1_omega_solver(const std::vector<Coloring> & fs, Pos size, Pos horizon) -> std::vector<ColumnSolution>;

    // f_i(x, s) stabilizing in s; the lift is the (n+1)-ary colouring
    struct StableApprox
    {
        std::function<std::uint64_t (std::uint64_t, const Tuple &, Pos)> f;
        std::size_t n = 1;
        std::uint64_t k = 2;
        std::function<Pos (std::uint64_t, const Tuple &)> stable;
        std::string name;
    };

    class LimitLift
    {
        private:
            StableApprox _a;

        public:
            explicit LimitLift(StableApprox a);
            auto lifted(std::uint64_t i) const -> Coloring;
            auto limit(std::uint64_t i) const -> Coloring;
            auto point() const -> Point;
            // input error if f_i changes past a declared bound below the horizon
            auto audit(std::uint64_t i, Pos horizon) const -> void;
            // T thin for the lift, omitting c, is thin for the limit on tuples with
            // a later element of T past stabilization
            auto transfer_check(std::uint64_t i, const std::vector<Pos> & t, std::uint64_t c) const -> Verdict;
    };

    auto limit_lift(const StableApprox & a) -> LimitLift;
}

#endif
