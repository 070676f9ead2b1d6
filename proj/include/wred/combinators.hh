#ifndef WRED_COMBINATORS_HH
#define WRED_COMBINATORS_HH 1

#include <wred/problems.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace wred
{
    enum class Kind
    {
        Strong,
        Plain
    };

    auto kind_name(Kind k) -> const char *;

    // forward reads the source instance; backward reads the target solution (strong)
    // or the source instance and the target solution, in that order (plain)
    struct Witness
    {
        std::string id;
        Functional forward;
        Functional backward;
        Kind kind = Kind::Strong;
        Problem source;
        Problem target;
    };

    auto validate_witness(const Witness & w) -> void;

    auto identity_witness(const Problem & p) -> Witness;

    // the image of a source instance, with divergence reported as a resource error
    auto forward_image(const Witness & w, const Point & a, Pos fuel) -> Point;
    auto backward_image(const Witness & w, const Point & a, const Point & t, Pos fuel) -> Point;

    auto parallel_product(const Problem & p, const Problem & q) -> Problem;
    auto witness_parallel(const Witness & w1, const Witness & w2) -> Witness;

    auto alternative_product(const std::vector<Problem> & ps) -> Problem;
    // ps[tag] <=sW [ps]
    auto alternative_embedding(const std::vector<Problem> & ps, std::uint64_t tag) -> Witness;
    auto compose_witness(const Witness & w1, const Witness & w2) -> Witness;

    // Q . P: solutions are <B, C> with B solving A and C solving glue(A, B)
    auto compositional_product(const Problem & q, const Problem & p, const Functional & glue) -> Problem;

    auto seq(const Problem & p) -> Problem;
    auto lift_seq(const Witness & w) -> Witness;

    // the first n columns of a sequential instance
    auto power(const Problem & p, std::size_t n) -> Problem;
    auto iterate_finite(const Witness & w, std::size_t n) -> Witness;
    auto iterate_instance(const Witness & w, const std::vector<Point> & as, Pos fuel) -> Point;
    auto iterate_expression(std::size_t n) -> std::string;

    struct SquashConfig
    {
        std::string name;
        Problem q;
        Problem p;
        Witness w;                  // <Q,P> <= P
        Point c = Point::constant(0);
        Pos stages = 8;
        Pos fuel = 1u << 16;        // per nested evaluation
        Pos max_n = 48;             // largest candidate marker
        std::uint64_t leaf_limit = 1u << 18;
    };

    auto validate_squash(const SquashConfig & cfg) -> void;

    struct MarkerStats
    {
        std::vector<std::uint64_t> leaves;      // per stage, at the accepted n
    };

    // m_0 .. m_stages; no instance is read
    auto squash_markers(const SquashConfig & cfg, MarkerStats * stats = nullptr) -> std::vector<Pos>;

    struct SquashTable
    {
        std::vector<Pos> markers;
        std::vector<std::vector<int>> rows;     // rows[i][x] = B_i(x)
        Pos horizon = 0;
    };

    // B_0 .. B_count at [0, horizon); markers must reach m_horizon
    auto squash_forward(const SquashConfig & cfg, const std::vector<Pos> & markers, const Point & family,
            std::size_t count, Pos horizon) -> SquashTable;

    // checks B_i(x) = Phi(A_i, B_{i+1})(x) for m_i <= x < horizon, i < count; throws ContractError
    auto check_squash_identity(const SquashConfig & cfg, const SquashTable & t, const Point & family, std::size_t count) -> void;

    // S_0 .. S_{count-1}, together with T_0 .. T_count
    struct SquashChain
    {
        std::vector<Point> s;
        std::vector<Point> t;
    };

    auto squash_backward(const SquashConfig & cfg, const std::vector<Pos> & markers, const Point & t0,
            std::size_t count, const Point & family) -> SquashChain;

    // SeqQ <= P; the forward materializes B_0 (stages bound the reachable positions)
    auto squash(const SquashConfig & cfg) -> Witness;

    auto split_digits(std::uint64_t c, std::uint64_t base, std::size_t s) -> std::vector<std::uint64_t>;
    auto merge_digits(const std::vector<std::uint64_t> & ds, std::uint64_t base) -> std::uint64_t;
    auto split_coloring(const Coloring & f, std::uint64_t k, std::size_t s) -> std::vector<Coloring>;
    auto merge_colorings(const std::vector<Coloring> & gs, std::uint64_t j) -> Coloring;

    // W : RT^n_k <=sW RT^n_j gives RT^n_{k^s} <=sW RT^n_{j^s}
    auto fanout_rt(const Witness & w, std::size_t s) -> Witness;

    struct SoundnessReport
    {
        std::uint64_t samples = 0;
        std::uint64_t passed = 0;
        std::uint64_t failed = 0;
        std::uint64_t inconclusive = 0;
        std::vector<std::string> details;       // one per sample

        auto clean() const -> bool { return failed == 0; }
    };

    using Sampler = std::function<Point (std::uint64_t seed)>;

    // target_sc, when given, governs the target side (instance check, solve, own verification)
    auto check_sample(const Witness & w, const Point & a, const Scale & sc, const Scale * target_sc = nullptr) -> Verdict;
    auto check_witness(const Witness & w, const Sampler & sample, std::uint64_t samples, const Scale & sc,
            std::uint64_t seed, const Scale * target_sc = nullptr) -> SoundnessReport;
}

#endif
