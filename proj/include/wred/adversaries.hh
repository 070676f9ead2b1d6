#ifndef WRED_ADVERSARIES_HH
#define WRED_ADVERSARIES_HH 1

#include <wred/combinators.hh>

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace wred
{
    struct StageRecord
    {
        Pos stage = 0;
        std::string kase;
        std::string acted;
        Rational before;
        Rational after;
        std::string detail;
        std::vector<std::uint64_t> invalidated;
        std::vector<Pos> markers;
    };

    // append-only; the measure never goes up from one record to the next
    class StageLog
    {
        private:
            std::string _name;
            std::vector<StageRecord> _records;

        public:
            explicit StageLog(std::string name = "");
            auto append(StageRecord r) -> void;
            auto records() const -> const std::vector<StageRecord> &;
            auto name() const -> const std::string &;
            auto size() const -> std::size_t { return _records.size(); }
            auto to_csv() const -> std::string;
            // sha-256 of the csv, lowercase hex
            auto digest() const -> std::string;
    };

    auto sha256_hex(const std::string & data) -> std::string;

    // one converging run of f on the tapes, or nothing if it runs out of fuel
    // or reads a region that is not fixed yet
    auto attempt(const Functional & f, std::vector<TapeFn> tapes, Pos x, Pos fuel) -> std::optional<int>;

    // qWWKL

    struct QwwklConfig
    {
        Rational p = Rational(1, 2);
        Rational q = Rational(3, 4);
        Pos stages = 64;
        Pos height_cap = 12;        // levels of Phi(T_s) looked at
        Pos fuel = 1u << 14;
    };

    struct QwwklAction
    {
        Pos stage = 0;              // T_stage is the first level cut
        std::vector<Pos> xs;
        std::uint64_t alpha = 0;    // bit j is alpha(j)
    };

    struct QwwklResult
    {
        unsigned a = 0;
        TreeByRule tree;
        std::vector<QwwklAction> actions;
        StageLog log;
        Rational measure;           // of T
        Rational phi_measure;       // of Phi(T_s) at its height, last stage
        Pos phi_height = 0;
    };

    // least a with 2^-a < q - p
    auto qwwkl_exponent(const Rational & p, const Rational & q) -> unsigned;
    // phi reads the tree code of T_s; psi reads a path (and optionally the tree code of T_s)
    auto qwwkl_cutter(const Functional & phi, const Functional & psi, const QwwklConfig & cfg) -> QwwklResult;

    // TS1 non-squashing

    struct Ts1Config
    {
        std::uint64_t j = 2;
        std::uint64_t k = 3;
        Pos stages = 40;
        Pos horizon = 32;
        std::size_t max_f = 3;      // largest finite set F tried
        Pos fuel = 1u << 14;
    };

    struct Ts1Result
    {
        std::vector<std::uint64_t> f;                   // f on [0, stages]
        std::vector<std::vector<Pos>> fsets;
        std::vector<Pos> xs;
        std::vector<std::uint64_t> valid;
        std::vector<Pos> action_stages;
        std::vector<Pos> h;
        std::vector<Pos> t;
        std::vector<std::uint64_t> phi_colors;          // Phi(f)-colours on T below the horizon
        std::vector<Pos> psi_output;                    // Psi(T) below the horizon
        std::vector<std::uint64_t> psi_colors;          // f-colours on Psi(T)
        Verdict verdict;
        StageLog log;
    };

    // phi reads f as an instance of TS^1_j and writes a TS^1_k instance; psi reads the
    // characteristic function of a finite set up to its maximum
    auto ts1_diagonalizer(const Functional & phi, const Functional & psi, const Ts1Config & cfg) -> Ts1Result;

    struct ToyPair
    {
        std::string name;
        Functional phi;
        Functional psi;
    };

    auto ts1_toys(std::uint64_t j, std::uint64_t k) -> std::vector<ToyPair>;

    // Delta^0_2 diagonalization against SeqTS^1_k

    struct Delta2Approx
    {
        std::function<int (std::uint64_t e, std::uint64_t i, std::uint64_t a, Pos s)> g;
        // g(e, i, a, s) is constant for s >= stable(e, i, a), where declared
        std::function<Pos (std::uint64_t e, std::uint64_t i, std::uint64_t a)> stable;
        std::string name;
    };

    class Delta2Instance
    {
        private:
            struct State;
            std::shared_ptr<State> _state;

        public:
            Delta2Instance(std::uint64_t k, Delta2Approx g);
            auto k() const -> std::uint64_t;
            auto color(std::uint64_t i, Pos s) const -> std::uint64_t;
            auto column(std::uint64_t i) const -> Coloring;
            // the SeqTS^1_k instance
            auto point() const -> Point;
            // case-2 stages of column i below the horizon
            auto log(std::uint64_t i, Pos horizon) const -> StageLog;
            // D_e is finite at the horizon or meets every colour of f_e
            auto check_defeats(std::uint64_t e, Pos horizon) const -> Verdict;
    };

    auto delta2_diagonalizer(std::uint64_t k, Delta2Approx g) -> Delta2Instance;

    // rainbow colourings against a functional

    struct Exclusion
    {
        Pos x = 0;
        Pos y = 0;
        Prefix sigma;
    };

    struct CmColoring
    {
        Coloring f;
        std::optional<Exclusion> excluded;      // the pair in force at the horizon
        std::optional<Pos> trigger_stage;
    };

    auto cm_coloring(const Functional & phi, Pos horizon, Pos fuel = 1u << 12) -> CmColoring;

    struct FSet
    {
        std::vector<Prefix> strings;
        Rational measure;
        std::vector<Pos> used;
        Pos stage = 0;
    };

    struct RainbowMeasure
    {
        Coloring f;
        Rational q;
        std::vector<FSet> fsets;
        std::uint64_t bound = 1;            // sup of the used counts, at least 1
        Verdict verdict;                    // disjointness, measures, count and boundedness
        StageLog log;
    };

    struct RainbowMeasureConfig
    {
        Pos horizon = 24;
        Pos max_length = 8;                 // strings searched for F
        Pos fuel = 1u << 12;
        std::size_t candidate_limit = 4096;
    };

    auto cylinder_measure(const std::vector<Prefix> & f) -> Rational;
    auto comparable(const Prefix & a, const Prefix & b) -> bool;
    auto rainbow_measure_coloring(const Functional & phi, const Rational & q, const RainbowMeasureConfig & cfg = {}) -> RainbowMeasure;

    // Phi_{g(e,j)}(S)(x) = Phi_e(S)(<x, <e, j>>)
    auto column_restrict(const Functional & phi, std::uint64_t e, std::uint64_t j) -> Functional;

    struct SplitColumn
    {
        std::uint64_t index = 0;            // <e, j>
        std::uint64_t j = 0;
        RainbowMeasure run;
    };

    // columns j = 1 .. count, q = 2^-j
    auto rrt_column_splitter(const Functional & phi, std::uint64_t e, std::uint64_t count,
            const RainbowMeasureConfig & cfg = {}) -> std::vector<SplitColumn>;

    // named toy functionals for the command line and the tests
    auto adversary_functional(const std::string & name) -> Functional;
    auto adversary_functional_names() -> std::vector<std::string>;
}

#endif
