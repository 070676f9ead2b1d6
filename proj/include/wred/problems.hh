#ifndef WRED_PROBLEMS_HH
#define WRED_PROBLEMS_HH 1

#include <wred/instances.hh>
#include <wred/oracle.hh>

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace wred
{
    struct ProblemSpec;
    using Problem = std::shared_ptr<const ProblemSpec>;

    struct ProblemSpec
    {
        std::string name;
        std::size_t arity = 1;
        bool total = false;

        // does the point code an instance, as far as the horizon shows
        std::function<Verdict (const Point &, const Scale &)> check_instance;
        std::function<Verdict (const Point & instance, const Point & solution, const Scale &)> verify_at;
        // brute-force solution at the horizon; the point is zero past it
        std::function<std::optional<Point> (const Point & instance, const Scale &)> solve;
        // finite tolerance: tolerance(m) is the functional S -> Theta(S, m), where m bounds
        // the instance positions that may differ; empty when the problem has none
        std::function<Functional (Pos m)> tolerance;

        std::string shape = "atomic";
        std::vector<Problem> parts;
    };

    auto rt(std::size_t n, std::uint64_t k) -> Problem;
    auto ts(std::size_t n, Colors k) -> Problem;
    auto rrt(std::size_t n, std::uint64_t bound) -> Problem;
    auto coh() -> Problem;
    auto wkl() -> Problem;
    auto wwkl(const Rational & q) -> Problem;
    // every set is a solution
    auto trivial() -> Problem;
    // RT^2_2 on colourings promised to have a structural property
    auto rt22_restricted(const std::string & name, Structure s) -> Problem;
    auto striv() -> Problem;
    auto cac() -> Problem;
    auto ads() -> Problem;
    auto sher() -> Problem;

    auto totalize_coloring(const Point & a, std::size_t n, Colors k) -> Coloring;

    auto verify_homogeneous_at(const Coloring & f, const Point & h, Pos n, Pos s) -> Verdict;
    auto verify_thin_at(const Coloring & f, const ThinSolution & sol, Pos n, Pos s) -> Verdict;
    auto verify_rainbow_at(const Coloring & f, const Point & s, Pos n, Pos size) -> Verdict;
    auto verify_path_at(const TreeByRule & t, const Point & p, Pos depth) -> Verdict;

    // largest entry of a tuple with rank below m, if any
    auto tolerance_bound(Pos m, std::size_t n) -> std::optional<Pos>;
    auto tolerance_rt(const std::vector<Pos> & s, Pos m, std::size_t n) -> std::vector<Pos>;

    auto measure_at_level(const TreeByRule & t, Pos d) -> Rational;

    auto leftmost_string(const TreeByRule & t, Pos depth) -> std::optional<Prefix>;
    auto is_bounded(const Coloring & f, Pos horizon, std::uint64_t bound) -> Verdict;

    // instances are tagged 1^t 0 followed by the component instance
    auto alternative_tag(const Point & a, std::uint64_t count) -> std::uint64_t;
    auto alternative_instance(std::uint64_t tag, const Point & a) -> Point;
    auto alternative_body(const Point & a, std::uint64_t tag) -> Point;
}

#endif
