#pragma once

#include <spg/spg.hpp>
#include <spg/transform.hpp>
#include <spg/verify.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace spg
{
    struct SweepRow
    {
        std::uint32_t r = 0;
        std::size_t trials = 0;
        std::size_t successes = 0;
        double mean_rounds = 0.0;
        double mean_initial_bad_events = 0.0;

        auto success_rate() const -> double { return trials == 0 ? 0.0 : double(successes) / double(trials); }
        auto operator==(const SweepRow &) const -> bool = default;
    };

    struct SweepReport
    {
        std::string template_descriptor;
        std::vector<SweepRow> rows;

        auto operator==(const SweepReport &) const -> bool = default;
    };

    struct SweepOptions
    {
        std::size_t max_rounds = 1000;
        Strategy strategy = Strategy::Resample;
        std::string descriptor;
        /// 0 picks the hardware concurrency.
        unsigned threads = 0;
    };

    /// Runs the resampling construction `trials` times for each r, trial t
    /// seeded with derive_seed(seed, t). Output is independent of threading.
    auto sweep_r(const Spg & tmpl, std::span<const std::uint32_t> r_values, std::size_t trials, std::uint64_t seed,
            const SweepOptions & options = {}) -> SweepReport;

    struct DimensionReductionSummary
    {
        std::size_t trials = 0;
        std::size_t constructed = 0;
        std::size_t holds = 0;
        std::size_t violated = 0;
        /// Trial index and report for each violated construction.
        std::vector<std::pair<std::size_t, PropertyReport>> failures;
    };

    /// Transforms `tmpl` per trial and checks dimension reduction on every
    /// successful construction. Throws BudgetExceeded if any check would
    /// exceed the budget.
    auto verify_dimension_reduction(const Spg & tmpl, std::uint32_t r, std::size_t trials, std::uint64_t seed,
            const DimensionReductionOptions & budget = {}, std::size_t max_rounds = 1000) -> DimensionReductionSummary;

    /// verify_dimension_reduction on sliding_path_template(d, d + 1).
    auto verify_dimension_reduction_on_paths(std::size_t d, std::uint32_t r, std::size_t trials, std::uint64_t seed,
            const DimensionReductionOptions & budget = {}) -> DimensionReductionSummary;
}
