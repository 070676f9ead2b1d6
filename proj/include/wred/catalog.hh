#ifndef WRED_CATALOG_HH
#define WRED_CATALOG_HH 1

#include <wred/combinators.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace wred
{
    // RT^n_j <=sW RT^n_k
    auto rt_color_embed(std::size_t n, std::uint64_t j, std::uint64_t k) -> Witness;
    // RT^m_k <=sW RT^n_k
    auto rt_arity_lift(std::size_t m, std::size_t n, std::uint64_t k) -> Witness;
    // <RT^n_j, RT^n_k> <=sW RT^n_{jk}, colour f + j g
    auto rt_product(std::size_t n, std::uint64_t j, std::uint64_t k) -> Witness;
    auto product_color(std::uint64_t f, std::uint64_t g, std::uint64_t j) -> std::uint64_t;

    // <COH, COH> <=sW COH (count 2) or SeqCOH <=sW COH (nullopt)
    auto coh_interleave(std::optional<std::size_t> count) -> Witness;
    // the same for WKL; backward is the identity in both cases
    auto wkl_interleave(std::optional<std::size_t> count) -> Witness;
    auto interleave_trees(const TreeByRule & t0, const TreeByRule & t1) -> TreeByRule;
    auto interleave_tree_family(const std::function<TreeByRule (std::uint64_t)> & ts) -> TreeByRule;

    // <SeqP, SeqP> <=sW SeqP, columns of the pair sent to even and odd columns
    auto seq_interleave(const Problem & p) -> Witness;

    // TS^n_k <=sW TS^n_j, 2 <= j < k
    auto ts_collapse(std::size_t n, std::uint64_t j, Colors k) -> Witness;
    auto collapse_color(std::uint64_t c, std::uint64_t j) -> std::uint64_t;

    // Ext_S(rho, k): some member of S of length k extends rho; lengths past the
    // horizon are judged at the horizon
    class Extendibility
    {
        private:
            std::function<bool (const Prefix &)> _member;
            Pos _horizon;

        public:
            Extendibility(std::function<bool (const Prefix &)> member, Pos horizon);
            auto operator() (const Prefix & rho, Pos k) const -> bool;
            // the largest k <= cap with Ext(rho, k), at least |rho|
            auto reach(const Prefix & rho, Pos cap) const -> Pos;
            auto horizon() const -> Pos { return _horizon; }
    };

    auto seqwwkl_member(const Extendibility & ext, const Prefix & sigma, const Prefix & tau) -> bool;
    auto seqwwkl_tree(const TreeByRule & s, const Prefix & sigma, Pos horizon = 24) -> TreeByRule;
    // T_{sigma_i} at column i, sigma_i = index_string(i)
    auto wkl_from_seqwwkl(const TreeByRule & s, Pos horizon = 24) -> std::function<TreeByRule (std::uint64_t)>;
    // C(n) = B_{C|n}(0) for n < depth; each used B_sigma is checked as a path of T_sigma to depth
    auto assemble_path(const std::function<Point (const Prefix &)> & b, const std::function<TreeByRule (const Prefix &)> & t,
            Pos depth) -> Prefix;
    // WKL <=sW SeqWWKL(1/2)
    auto wkl_seqwwkl_witness(Pos horizon = 24) -> Witness;

    struct BlowupStep
    {
        TreeByRule tree;
        std::vector<Prefix> sigmas;
        Rational p;
        Rational bound;                 // (1 + eps)(1 - p)^2
        auto map_string(const Prefix & s) const -> Prefix;
    };

    struct Blowup
    {
        TreeByRule tree;
        std::vector<BlowupStep> steps;
        Functional path_map;
        auto map_string(const Prefix & s) const -> Prefix;
    };

    auto blowup_once(const TreeByRule & t, const Rational & p, const Rational & eps, Pos depth) -> BlowupStep;
    // iterates until the bound on the complement falls below 1 - q
    auto blowup_tree(const TreeByRule & t, const Rational & p, const Rational & q, Pos depth,
            const Rational & eps = Rational(1, 10)) -> Blowup;
    auto blowup_iterates(const Rational & p, const Rational & q, const Rational & eps) -> std::size_t;

    struct Extraction
    {
        std::vector<Pos> set;
        std::uint64_t color = 0;        // omitted or homogeneous colour
        Verdict verdict;
        std::string note;
    };

    auto tuple_color(const std::vector<std::uint64_t> & parts, std::uint64_t k) -> std::uint64_t;

    // g(x, y_0, .., y_{n-1}) = <f(x, y_0), .., f(x, y_{n-1})>, into k^n colours
    auto ts_step(std::size_t m, std::size_t n, std::uint64_t k, const Coloring & f) -> Coloring;
    auto ts_step_extract(const Coloring & f, std::size_t n, std::uint64_t k, const std::vector<Pos> & h,
            std::uint64_t avoided, Pos horizon, std::uint64_t threshold = 3) -> Extraction;

    auto ts_aca_coloring(std::size_t n, const std::function<std::uint64_t (std::uint64_t)> & f) -> Coloring;
    // largest m < n with a tuple above y in h realizing b_i for i < m
    auto ts_aca_index(const Coloring & g, const std::vector<Pos> & h, std::uint64_t b, Pos y) -> std::optional<std::size_t>;
    auto ts_aca_range_query(const std::function<std::uint64_t (std::uint64_t)> & f, const Coloring & g,
            const std::vector<Pos> & h, std::uint64_t b, std::size_t m, Pos y) -> std::optional<bool>;

    auto ts_pigeonhole(const Coloring & f) -> Coloring;
    auto ts_pigeonhole_extract(const Coloring & f, const std::vector<Pos> & h, std::uint64_t c, Pos horizon) -> Extraction;

    auto ts33_first(const Coloring & f) -> Coloring;
    // the four cases on a set avoiding first-stage colour 2
    auto ts33_second(const Coloring & f) -> Coloring;

    struct Pipeline
    {
        std::vector<std::string> stages;
        Extraction result;
    };

    auto ts33_pipeline(const Coloring & f, Pos horizon, std::uint64_t node_limit = 400'000) -> Pipeline;

    enum class CubeMerge
    {
        None,
        TransitivePair,
        HereditaryPairs
    };

    // cube index of <a, b, c> is 4a + 2b + c
    auto cube_index(int a, int b, int c) -> std::uint64_t;
    auto cube_colors(CubeMerge m) -> std::uint64_t;
    // merged colour of each cube index
    auto cube_merge_table(CubeMerge m) -> std::vector<std::uint64_t>;
    auto ts3_cube_coloring(const Coloring & f, CubeMerge m) -> Coloring;

    struct Dispatch
    {
        std::string problem;            // STRIV, CAC, ADS or SHER
        Structure structure;
        std::uint64_t color = 0;        // the colour the structure speaks about, where relevant
    };

    auto cube_dispatch(CubeMerge m, std::uint64_t avoided) -> Dispatch;
    auto ts3_cube_pipeline(const Coloring & f, CubeMerge m, Pos horizon, std::uint64_t node_limit = 400'000) -> Pipeline;

    struct CatalogEntry
    {
        std::string id;
        std::string statement;
        std::string params;
        Witness witness;
        Sampler sampler;
        Scale scale;
        std::optional<Scale> target_scale;
        // replaces the generic sample check where solutions are not finitely verifiable
        std::function<Verdict (const Point &, const Scale &)> check;
    };

    auto catalog() -> const std::vector<CatalogEntry> &;
    auto find_entry(const std::string & id) -> const CatalogEntry &;
    auto run_entry(const CatalogEntry & e, std::uint64_t samples, std::uint64_t seed) -> SoundnessReport;
    auto run_entry(const CatalogEntry & e, std::uint64_t samples, std::uint64_t seed, const Scale & sc) -> SoundnessReport;

    struct Absent
    {
        std::string statement;
        std::string reason;
    };

    auto absent_reductions() -> std::vector<Absent>;

    auto squash_configs() -> std::vector<SquashConfig>;
    auto find_squash_config(const std::string & name) -> SquashConfig;

    // samplers
    auto planted_coloring(std::size_t n, Colors k, std::uint64_t seed, Pos horizon = 16, Pos planted = 10) -> Coloring;
    auto pattern_tree(std::uint64_t seed) -> TreeByRule;
}

#endif
