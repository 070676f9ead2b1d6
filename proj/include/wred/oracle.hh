#ifndef WRED_ORACLE_HH
#define WRED_ORACLE_HH 1

#include <wred/instances.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wred
{
    struct SearchBudget
    {
        Pos horizon = 16;
        Pos size = 4;
        std::uint64_t node_limit = 2'000'000;
        std::uint64_t seed = 0;
        bool exhaustive = true;
    };

    struct SearchResult
    {
        std::optional<std::vector<Pos>> set;
        std::optional<std::uint64_t> omitted;   // thin searches only
        std::string mode;                       // "greedy" or "exhaustive"
        std::uint64_t nodes = 0;
        bool budget_hit = false;

        // absent, and the search covered everything
        auto certified_absent() const -> bool { return ! set && ! budget_hit && mode == "exhaustive"; }
        auto verdict() const -> Verdict;
    };

    auto find_homogeneous(const Coloring & f, const SearchBudget & b) -> SearchResult;
    auto find_thin(const Coloring & f, const SearchBudget & b) -> SearchResult;
    auto find_rainbow(const Coloring & f, const SearchBudget & b) -> SearchResult;
    // a set on which f takes none of the given colours
    auto find_avoiding(const Coloring & f, const std::vector<std::uint64_t> & colors, const SearchBudget & b) -> SearchResult;
    auto find_min_homogeneous(const Coloring & f, const SearchBudget & b) -> SearchResult;

    // members of T of length d, lexicographic
    auto enumerate_paths(const TreeByRule & t, Pos depth) -> std::vector<Prefix>;

    enum class Structure
    {
        Transitive,
        SemiTransitive,
        SemiHereditary,
        SemiTrivial
    };

    auto structure_name(Structure s) -> const char *;

    struct StructuralVerdict
    {
        Verdict verdict;
        std::optional<std::uint64_t> exceptional;   // colour left out, semi- properties only
        std::optional<Tuple> witness;               // offending triple on failure
    };

    auto structural_check(const Coloring & f, const std::vector<Pos> & h, Structure s) -> StructuralVerdict;
}

#endif
