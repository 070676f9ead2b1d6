#include <wred/harness.hh>
#include <wred/error.hh>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace wred;

using std::optional;
using std::string;
using std::vector;

namespace
{
    auto emit(const string & text, const string & out) -> void
    {
        if (out.empty() || out == "-") {
            std::cout << text;
            return;
        }
        std::ofstream f(out);
        if (! f)
            throw InputError("cannot write '" + out + "'");
        f << text;
    }

    auto key_values(const vector<string> & kvs) -> std::map<string, string>
    {
        std::map<string, string> out;
        for (auto & kv : kvs) {
            auto eq = kv.find('=');
            if (eq == string::npos || eq == 0)
                throw InputError("expected key=value, got '" + kv + "'");
            if (! out.emplace(kv.substr(0, eq), kv.substr(eq + 1)).second)
                throw InputError("parameter '" + kv.substr(0, eq) + "' given twice");
        }
        return out;
    }

    auto summary_line(const Report & r) -> string
    {
        return std::to_string(r.rows.size()) + " rows: " + std::to_string(r.count("pass")) + " pass, "
            + std::to_string(r.count("fail")) + " fail, " + std::to_string(r.count("inconclusive")) + " inconclusive, "
            + std::to_string(r.count("error")) + " error\n";
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"wred: finite checks for reductions between combinatorial problems"};
    app.require_subcommand(1);

    auto list = app.add_subcommand("list", "list catalog entries, squash configurations, adversaries and rules");

    string selector, out;
    SuiteConfig suite;
    optional<Pos> horizon, fuel;
    auto verify = app.add_subcommand("verify", "check catalog entries on seeded samples");
    verify->add_option("entry", selector, "entry id, prefix ending in '*', or 'all'")->required();
    verify->add_option("--samples", suite.samples, "samples per entry")->capture_default_str();
    verify->add_option("--seed", suite.seed, "base seed")->capture_default_str();
    verify->add_option("--horizon", horizon, "override the entry horizon");
    verify->add_option("--fuel", fuel, "override the entry fuel");
    verify->add_option("--out", out, "write the CSV report here instead of stdout");

    string squash_name;
    optional<Pos> stages;
    std::size_t count = 4;
    std::uint64_t squash_seed = 0;
    auto squash = app.add_subcommand("squash", "run a squashing configuration and check its identity");
    squash->add_option("--config", squash_name, "configuration name or instance document")->required();
    squash->add_option("--stages", stages, "number of marker stages");
    squash->add_option("--count", count, "rows of the B-table to check")->capture_default_str();
    squash->add_option("--seed", squash_seed, "seed of the family")->capture_default_str();
    squash->add_option("--out", out, "write the CSV report here instead of stdout");

    string adv_name;
    vector<string> adv_params;
    auto adversary = app.add_subcommand("adversary", "run a stage-by-stage construction against a functional");
    adversary->add_option("name", adv_name, "construction name")->required();
    adversary->add_option("--param", adv_params, "key=value, repeatable");
    adversary->add_option("--stages", stages, "number of stages or horizon");
    adversary->add_option("--out", out, "write the stage log CSV here instead of stdout");

    string task, input;
    Pos size = 4;
    Pos oracle_horizon = 16;
    std::uint64_t node_limit = 2'000'000;
    auto oracle = app.add_subcommand("oracle", "search for a solution of a finite instance");
    oracle->add_option("task", task, "homogeneous, min-homogeneous, thin, rainbow or paths")->required();
    oracle->add_option("--input", input, "instance document")->required();
    oracle->add_option("--horizon", oracle_horizon, "search below this bound")->capture_default_str();
    oracle->add_option("--size", size, "size of the solution")->capture_default_str();
    oracle->add_option("--nodes", node_limit, "node limit")->capture_default_str();
    oracle->add_option("--out", out, "write the CSV report here instead of stdout");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? 0 : exit_code_for(ErrorKind::Input);
    }

    try {
        if (*list) {
            for (auto & e : catalog())
                std::cout << "entry " << e.id << "  " << e.statement << "\n";
            for (auto & a : absent_reductions())
                std::cout << "absent " << a.statement << "  (" << a.reason << ")\n";
            for (auto & c : squash_configs())
                std::cout << "squash " << c.name << "\n";
            for (auto & n : adversary_names())
                std::cout << "adversary " << n << "\n";
            for (auto & t : oracle_tasks())
                std::cout << "oracle " << t << "\n";
            for (auto kind : {"coloring", "tree", "point", "family", "predicate"})
                for (auto & r : rule_names(kind))
                    std::cout << "rule " << kind << " " << r << "\n";
            return 0;
        }
        if (*verify) {
            suite.horizon = horizon;
            suite.fuel = fuel;
            auto r = run_suite(selector, config_from_env(suite));
            emit(r.to_csv(), out);
            std::cerr << summary_line(r);
            return r.exit_code();
        }
        if (*squash) {
            auto cfg = squash_name.find('/') != string::npos || squash_name.ends_with(".wred")
                ? load_squash_config(read_document(squash_name))
                : find_squash_config(squash_name);
            auto r = run_squash(cfg, stages, count, squash_seed);
            emit(r.to_csv(), out);
            std::cerr << summary_line(r);
            return r.exit_code();
        }
        if (*adversary) {
            auto r = run_adversary(adv_name, key_values(adv_params), stages);
            emit(r.log.to_csv(), out);
            std::cerr << adv_name << ": " << status_name(r.verdict.status) << "; " << r.summary
                << (r.verdict.detail.empty() ? "" : "; " + r.verdict.detail) << "\n"
                << "digest " << r.log.digest() << "\n";
            return r.verdict.failed() ? 1 : 0;
        }
        if (*oracle) {
            auto r = run_oracle(task, read_document(input), oracle_horizon, size, node_limit);
            emit(r.to_csv(), out);
            std::cerr << summary_line(r);
            return r.exit_code();
        }
    }
    catch (const WredError & e) {
        std::cerr << "wred: " << kind_name(e.kind()) << " error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
    return 0;
}
