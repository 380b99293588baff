#include <spg/experiments.hpp>
#include <spg/random.hpp>
#include <spg/spindle.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace spg
{
    namespace
    {
        struct TrialOutcome
        {
            bool succeeded = false;
            std::size_t rounds = 0;
            std::size_t initial_bad_events = 0;
        };

        // Runs body(t) for t in [0, count) on a small pool; results are
        // indexed by t so order never depends on scheduling.
        template <typename Result, typename Body>
        auto run_trials(std::size_t count, unsigned threads, Body body) -> std::vector<Result>
        {
            std::vector<Result> results(count);
            if (threads == 0)
                threads = std::max(1u, std::thread::hardware_concurrency());
            threads = unsigned(std::min<std::size_t>(threads, count));

            std::atomic<std::size_t> next{0};
            std::exception_ptr failure;
            std::mutex failure_lock;
            auto worker = [&] {
                for (std::size_t t; (t = next++) < count;) {
                    try {
                        results[t] = body(t);
                    }
                    catch (...) {
                        std::lock_guard lock(failure_lock);
                        if (! failure)
                            failure = std::current_exception();
                    }
                }
            };
            std::vector<std::jthread> pool;
            for (unsigned i = 1; i < threads; ++i)
                pool.emplace_back(worker);
            worker();
            pool.clear();
            if (failure)
                std::rethrow_exception(failure);
            return results;
        }
    }

    auto sweep_r(const Spg & tmpl, std::span<const std::uint32_t> r_values, std::size_t trials, std::uint64_t seed,
            const SweepOptions & options) -> SweepReport
    {
        if (r_values.empty())
            throw InvalidArgument("sweep needs at least one value of r");
        if (trials == 0)
            throw InvalidArgument("sweep needs at least one trial");
        for (auto r : r_values)
            if (r < 2)
                throw InvalidArgument("sweep values of r must be at least 2");
        if (! check_singleton(tmpl).holds())
            throw InvalidArgument("template must satisfy the singleton property");

        SweepReport report;
        report.template_descriptor = options.descriptor.empty()
            ? std::to_string(tmpl.vertices.size()) + " vertices, " + std::to_string(tmpl.edges.size()) +
                " edges, d = " + std::to_string(tmpl.dimension) + ", max degree " + std::to_string(max_degree(tmpl))
            : options.descriptor;

        for (auto r : r_values) {
            auto outcomes = run_trials<TrialOutcome>(trials, options.threads, [&](std::size_t t) {
                TransformConfig config{r, derive_seed(seed, t), options.max_rounds, options.strategy};
                auto attempt = attempt_construction(tmpl, config);
                TrialOutcome out;
                out.succeeded = attempt.succeeded;
                out.rounds = attempt.result.rounds_used;
                auto & log = attempt.result.resample_log;
                if (! log.empty() && log.front().round == 0)
                    out.initial_bad_events = log.front().events.size();
                else if (log.empty() && ! attempt.succeeded)
                    out.initial_bad_events = attempt.remaining.size();
                return out;
            });

            SweepRow row;
            row.r = r;
            row.trials = trials;
            double rounds = 0, initial = 0;
            for (auto & o : outcomes) {
                row.successes += o.succeeded;
                rounds += double(o.rounds);
                initial += double(o.initial_bad_events);
            }
            row.mean_rounds = rounds / double(trials);
            row.mean_initial_bad_events = initial / double(trials);
            report.rows.push_back(row);
        }
        return report;
    }

    auto verify_dimension_reduction(const Spg & tmpl, std::uint32_t r, std::size_t trials, std::uint64_t seed,
            const DimensionReductionOptions & budget, std::size_t max_rounds) -> DimensionReductionSummary
    {
        if (trials == 0)
            throw InvalidArgument("at least one trial is required");

        DimensionReductionSummary summary;
        summary.trials = trials;
        for (std::size_t t = 0; t < trials; ++t) {
            TransformConfig config{r, derive_seed(seed, t), max_rounds, Strategy::Resample};
            auto attempt = attempt_construction(tmpl, config);
            if (! attempt.succeeded)
                continue;
            ++summary.constructed;
            auto report = check_dimension_reduction(attempt.result.spg, budget);
            if (report.holds())
                ++summary.holds;
            else {
                ++summary.violated;
                summary.failures.emplace_back(t, std::move(report));
            }
        }
        return summary;
    }

    auto verify_dimension_reduction_on_paths(std::size_t d, std::uint32_t r, std::size_t trials, std::uint64_t seed,
            const DimensionReductionOptions & budget) -> DimensionReductionSummary
    {
        return verify_dimension_reduction(sliding_path_template(d, d + 1), r, trials, seed, budget);
    }
}
