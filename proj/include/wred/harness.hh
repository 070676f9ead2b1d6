#ifndef WRED_HARNESS_HH
#define WRED_HARNESS_HH 1

#include <wred/adversaries.hh>
#include <wred/catalog.hh>
#include <wred/codings.hh>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wred
{
    // wred-instance 1
    // kind coloring
    // representation table
    // param n 2
    // cell 0 5 1
    // end
    struct InstanceDocument
    {
        std::string kind;                       // coloring, tree, family, point, predicate, squash
        std::string representation;             // table or rule
        std::string rule;
        std::map<std::string, std::string> params;
        std::vector<std::array<std::uint64_t, 3>> cells;
        std::vector<std::size_t> cell_lines;    // source lines, for messages; not rendered
    };

    auto parse_document(const std::string & text) -> InstanceDocument;
    auto render_document(const InstanceDocument & doc) -> std::string;
    auto read_document(const std::string & path) -> InstanceDocument;
    auto write_document(const std::string & path, const InstanceDocument & doc) -> void;

    auto param_u64(const InstanceDocument & doc, const std::string & key,
            std::optional<std::uint64_t> fallback = std::nullopt) -> std::uint64_t;

    auto load_coloring(const InstanceDocument & doc) -> Coloring;
    auto save_coloring(const Coloring & f, Pos domain) -> InstanceDocument;
    auto load_tree(const InstanceDocument & doc) -> TreeByRule;
    auto save_tree(const TreeByRule & t, Pos depth) -> InstanceDocument;
    auto load_point(const InstanceDocument & doc) -> Point;
    auto save_point(const Point & p, Pos length) -> InstanceDocument;
    auto load_family(const InstanceDocument & doc) -> SetFamily;
    auto load_predicate(const InstanceDocument & doc) -> BoundedPredicate;
    auto load_squash_config(const InstanceDocument & doc) -> SquashConfig;
    auto rule_names(const std::string & kind) -> std::vector<std::string>;

    struct ReportRow
    {
        std::string case_id;
        std::string entry_id;
        std::string check;
        std::string status;                     // pass, fail, inconclusive, error
        std::string detail;
        std::uint64_t seed = 0;
        Pos horizon = 0;
        Pos fuel = 0;
    };

    struct Report
    {
        std::vector<ReportRow> rows;

        auto add(ReportRow r) -> void { rows.push_back(std::move(r)); }
        // sorted by case id
        auto to_csv() const -> std::string;
        auto count(const std::string & status) const -> std::size_t;
        // 0 pass, 1 violation, 2 resource, 3 input; worst row wins
        auto exit_code() const -> int;
    };

    auto row_status(const Verdict & v) -> std::string;

    struct SuiteConfig
    {
        std::uint64_t samples = 10;
        std::uint64_t seed = 0;
        std::optional<Pos> horizon;
        std::optional<Pos> fuel;
    };

    // WRED_HORIZON_DEFAULT and WRED_FUEL_DEFAULT fill unset fields
    auto config_from_env(SuiteConfig base = {}) -> SuiteConfig;

    // "all", an entry id, or a prefix ending in '*'
    auto select_entries(const std::string & selector) -> std::vector<const CatalogEntry *>;
    auto run_suite(const std::string & selector, const SuiteConfig & cfg) -> Report;

    // markers, the B-table on a seeded family, and the identity check
    auto run_squash(SquashConfig cfg, std::optional<Pos> stages, std::size_t count, std::uint64_t seed) -> Report;

    auto oracle_tasks() -> std::vector<std::string>;
    auto run_oracle(const std::string & task, const InstanceDocument & doc, Pos horizon, Pos size,
            std::uint64_t node_limit = 2'000'000) -> Report;

    struct AdversaryRun
    {
        StageLog log;
        Verdict verdict;
        std::string summary;
    };

    auto adversary_names() -> std::vector<std::string>;
    auto run_adversary(const std::string & name, const std::map<std::string, std::string> & params,
            std::optional<Pos> stages) -> AdversaryRun;
}

#endif
