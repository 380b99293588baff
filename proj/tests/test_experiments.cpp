#include "doctest.h"
#include "oracles.hpp"

#include <spg/experiments.hpp>
#include <spg/spindle.hpp>

using namespace spg;

namespace
{
    auto path3() -> Spg
    {
        std::vector<FacetSet> sets{{0, 1}, {1, 2}, {2, 3}};
        return build_path_template(SymbolTable::letters(4), sets);
    }

    auto star3() -> Spg
    {
        std::vector<FacetSet> leaves{{2, 3}, {2, 4}, {3, 4}};
        return build_star_template(SymbolTable::letters(5), FacetSet{0, 1}, leaves);
    }
}

TEST_CASE("sweep succeeds at the local lemma multiplier")
{
    for (auto tmpl : {path3(), star3(), build_spindle_template(2).spindle.spg()}) {
        auto r = min_multiplier(max_degree(tmpl));
        std::vector<std::uint32_t> rs{r};
        auto report = sweep_r(tmpl, rs, 20, 5);
        REQUIRE(report.rows.size() == 1);
        CHECK(report.rows[0].r == r);
        CHECK(report.rows[0].trials == 20);
        CHECK(report.rows[0].success_rate() == 1.0);
    }
}

TEST_CASE("sweep without degree-two vertices needs no resampling")
{
    std::vector<FacetSet> sets{{0, 1}, {2, 3}};
    auto tmpl = build_path_template(SymbolTable::letters(4), sets);
    std::vector<std::uint32_t> rs{2, 3, 4};
    for (auto & row : sweep_r(tmpl, rs, 10, 1).rows) {
        CHECK(row.success_rate() == 1.0);
        CHECK(row.mean_rounds == 0.0);
        CHECK(row.mean_initial_bad_events == 0.0);
    }
}

TEST_CASE("sweep is reproducible across thread counts")
{
    std::vector<std::uint32_t> rs{4, 8, 16};
    SweepOptions one{.max_rounds = 50, .threads = 1};
    SweepOptions many{.max_rounds = 50, .threads = 4};
    auto a = sweep_r(star3(), rs, 30, 77, one);
    auto b = sweep_r(star3(), rs, 30, 77, many);
    CHECK(a == b);
    CHECK(a.rows.size() == 3);
    CHECK(a.rows[0].mean_initial_bad_events >= a.rows[2].mean_initial_bad_events);
}

TEST_CASE("sweep argument errors")
{
    std::vector<std::uint32_t> none;
    std::vector<std::uint32_t> small{1};
    std::vector<std::uint32_t> ok{4};
    CHECK_THROWS_AS(sweep_r(path3(), none, 5, 1), InvalidArgument);
    CHECK_THROWS_AS(sweep_r(path3(), small, 5, 1), InvalidArgument);
    CHECK_THROWS_AS(sweep_r(path3(), ok, 0, 1), InvalidArgument);

    auto fat = path3();
    fat.vertices[0].push_back(FacetSet{0, 3});
    CHECK_THROWS_AS(sweep_r(fat, ok, 5, 1), InvalidArgument);
}

TEST_CASE("dimension reduction on transformed paths")
{
    for (std::size_t d : {1, 2}) {
        auto summary = verify_dimension_reduction_on_paths(d, 4, 10, 3);
        CAPTURE(d);
        CHECK(summary.trials == 10);
        CHECK(summary.constructed == 10);
        CHECK(summary.holds == summary.constructed);
        CHECK(summary.failures.empty());
    }
}

TEST_CASE("dimension reduction summary is consistent on stars")
{
    auto summary = verify_dimension_reduction(star3(), 4, 5, 11);
    CHECK(summary.holds + summary.violated == summary.constructed);
    CHECK(summary.failures.size() == summary.violated);
}

TEST_CASE("dimension reduction respects the budget")
{
    CHECK_THROWS_AS(verify_dimension_reduction_on_paths(2, 4, 2, 1, DimensionReductionOptions{10}), BudgetExceeded);
}
