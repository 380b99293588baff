// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "oracles.hpp"

#include <spg/cli.hpp>
#include <spg/document.hpp>
#include <spg/spindle.hpp>
#include <spg/transform.hpp>
#include <spg/verify.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace spg;

namespace
{
    struct Outcome
    {
        bool passed;
        std::string detail;
    };

    // Instances constructed for criteria 3 and 5, replayed by criterion 6.
    struct Constructed
    {
        Spg tmpl;
        TransformResult result;
    };
    std::vector<Constructed> constructed;

    auto foreign_row_violations(const Constructed & c) -> std::size_t
    {
        std::size_t violations = 0;
        auto n = c.tmpl.symbols.size();
        for (EdgeId e = 0; e < c.tmpl.edges.size(); ++e) {
            auto & a = c.tmpl.vertices[c.tmpl.edges[e].u].front();
            auto & b = c.tmpl.vertices[c.tmpl.edges[e].v].front();
            for (auto w : c.result.edge_paths[e])
                if (oracle::foreign_rows(c.result.spg.vertices[w].front(), a, b, c.result.r, n) > 1)
                    ++violations;
        }
        return violations;
    }

    auto golden_vector() -> Outcome
    {
        auto symbols = lift_symbols(SymbolTable::letters(4), 2);
        auto path = subdivision_path(FacetSet{0, 1}, FacetSet{2, 3}, 2, RowPermutation{0, 1}, 4);
        std::vector<std::vector<std::string>> expected{
            {"a@1", "b@1", "a@2", "b@2"},
            {"c@1", "b@1", "a@2", "b@2"},
            {"c@1", "d@1", "a@2", "b@2"},
            {"c@1", "d@1", "c@2", "b@2"},
            {"c@1", "d@1", "c@2", "d@2"}};
        if (path.size() != expected.size())
            return {false, std::to_string(path.size()) + " sets, expected 5"};
        for (std::size_t k = 0; k < path.size(); ++k) {
            std::vector<SymbolId> ids;
            for (auto & label : expected[k])
                ids.push_back(symbols.at(label));
            if (path[k] != FacetSet{ids})
                return {false, "step " + std::to_string(k) + " is " + to_string(path[k], symbols)};
        }
        return {true, "5 sets match"};
    }

    auto template_lengths() -> Outcome
    {
        std::string detail;
        bool ok = true;
        for (std::size_t d = 1; d <= 4; ++d) {
            auto length = build_spindle_template(d).spindle.length();
            auto expected = oracle::binomial(2 * d, d) - 1;
            ok = ok && length == expected;
            detail += (d > 1 ? " " : "") + std::string("d=") + std::to_string(d) + ":" + std::to_string(length);
        }
        return {ok, detail};
    }

    auto end_to_end() -> Outcome
    {
        auto tmpl = build_spindle_template(2).spindle.spg();
        auto r = min_multiplier(max_degree(tmpl));
        if (max_degree(tmpl) != 2 || r != 87)
            return {false, "template is not a degree-2 path at r = 87"};
        std::size_t passed = 0, max_rounds = 0;
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            auto attempt = attempt_construction(tmpl, TransformConfig{r, seed, 1000});
            if (! attempt.succeeded)
                continue;
            auto & g = attempt.result.spg;
            max_rounds = std::max(max_rounds, attempt.result.rounds_used);
            if (validate(g).holds() && check_adjacency(g).holds() && check_strong_adjacency(g).holds() &&
                    check_endpoint_count(g).holds() && check_singleton(g).holds())
                ++passed;
            constructed.push_back({tmpl, std::move(attempt.result)});
        }
        return {passed == 10, std::to_string(passed) + "/10 seeds verified, at most " + std::to_string(max_rounds) + " rounds"};
    }

    auto bad_event_bound() -> Outcome
    {
        const std::size_t trials = 10000;
        bool ok = true;
        std::string detail;
        for (std::uint32_t r : {8u, 16u, 32u}) {
            auto est = estimate_bad_event_probability(FacetSet{0, 1}, FacetSet{2, 3}, FacetSet{4, 5}, r, trials, 1000 + r);
            auto p = 4.0 / r;
            auto limit = p + 3 * std::sqrt(p * (1 - p) / double(trials));
            ok = ok && est.frequency <= limit;
            char buf[96];
            std::snprintf(buf, sizeof buf, "%sr=%u: %.4f <= %.4f", r == 8 ? "" : ", ", r, est.frequency, limit);
            detail += buf;
        }
        return {ok, detail};
    }

    auto localization() -> Outcome
    {
        Rng rng(505);
        std::size_t holds = 0, resolved = 0;
        for (int k = 0; k < 50; ++k) {
            auto d = 1 + rng.below(3);
            auto n = 2 * d + 1 + rng.below(2);
            auto m = 2 + rng.below(std::min<std::uint64_t>(5, oracle::binomial(n, d) - 1));
            auto tmpl = gen::singleton_spg(rng, n, d, m, rng.below(3));
            auto r = std::uint32_t(4 + rng.below(5));
            auto attempt = attempt_construction(tmpl, TransformConfig{r, rng.next(), 1000});
            resolved += attempt.succeeded;
            if (check_localization(attempt.result, tmpl).holds())
                ++holds;
            constructed.push_back({tmpl, std::move(attempt.result)});
        }
        return {holds == 50, std::to_string(holds) + "/50 hold (" + std::to_string(resolved) + " free of bad events)"};
    }

    auto row_replay() -> Outcome
    {
        std::size_t violations = 0, vertices = 0;
        for (auto & c : constructed) {
            violations += foreign_row_violations(c);
            for (auto & path : c.result.edge_paths)
                vertices += path.size();
        }
        bool ok = constructed.size() == 60 && violations == 0;
        return {ok, std::to_string(constructed.size()) + " instances, " + std::to_string(vertices) + " path vertices, " +
                std::to_string(violations) + " violations"};
    }

    auto interpolation() -> Outcome
    {
        std::size_t paths = 0, failures = 0;
        for (std::size_t d = 1; d <= 3; ++d) {
            auto sets = oracle::all_subsets(2 * d, d);
            for (std::uint32_t r = 1; r <= 4; ++r)
                for (auto & perm : oracle::all_permutations(r))
                    for (auto & a : sets)
                        for (auto & b : sets) {
                            if (a == b)
                                continue;
                            ++paths;
                            auto path = subdivision_path(a, b, r, perm, 2 * d);
                            bool ok = path == oracle::interpolated_path(a, b, r, perm, 2 * d);
                            for (std::size_t k = 0; ok && k < path.size(); ++k)
                                ok = oracle::common(path.front(), path[k]).size() == r * d - k;
                            failures += ! ok;
                        }
        }
        return {failures == 0, std::to_string(paths) + " paths, " + std::to_string(failures) + " mismatches"};
    }

    auto oracle_equivalence() -> Outcome
    {
        Rng rng(808);
        std::size_t agree = 0, overfull = 0;
        for (int k = 0; k < 200; ++k) {
            auto n = 5 + rng.below(6);
            auto d = 1 + rng.below(4);
            auto count = std::min<std::size_t>(1 + rng.below(200), oracle::binomial(n, d));
            auto g = gen::partitioned_spg(rng, n, d, count, 1 + rng.below(count), rng.below(4));
            std::map<std::vector<SymbolId>, std::size_t> hashed;
            for (auto & w : check_endpoint_count(g).witnesses)
                hashed[std::vector<SymbolId>(w.sets.front().begin(), w.sets.front().end())] = w.sets.size() - 1;
            auto brute = oracle::overfull_ridges(family(g), d);
            agree += hashed == brute;
            overfull += ! brute.empty();
        }
        return {agree == 200, std::to_string(agree) + "/200 agree (" + std::to_string(overfull) + " with violations)"};
    }

    auto spindle_scaling() -> Outcome
    {
        auto s = build_exponential_spindle(2, TransformConfig{87, 7});
        auto length = s.spindle.length();
        bool ok = length >= 435;
        std::string detail = "d=2 r=87 length " + std::to_string(length) + " >= 435";
        for (std::size_t d = 1; d <= 4; ++d)
            ok = ok && build_spindle_template(d).spindle.length() + 1 == oracle::binomial(2 * d, d);
        return {ok, detail + ", template lengths C(2d,d)-1 for d<=4"};
    }

    auto cli(std::vector<std::string> args, const std::string & input) -> std::pair<int, std::string>
    {
        std::istringstream in{input};
        std::ostringstream out, err;
        auto status = run_cli(args, in, out, err);
        return {status, out.str() + "\x1f" + err.str()};
    }

    auto round_trip() -> Outcome
    {
        std::vector<SpgDocument> corpus;
        Rng rng(1010);
        for (int k = 0; k < 200; ++k) {
            auto n = 3 + rng.below(6);
            auto d = 1 + rng.below(n - 1);
            auto count = std::min<std::size_t>(1 + rng.below(25), oracle::binomial(n, d));
            corpus.push_back(to_document(gen::partitioned_spg(rng, n, d, count, 1 + rng.below(8), rng.below(4))));
        }
        for (std::size_t d = 1; d <= 4; ++d)
            corpus.push_back(to_document(build_spindle_template(d).spindle));
        for (auto & c : constructed)
            corpus.push_back(to_document(c.result));
        std::vector<FacetSet> sets{{0, 1}, {1, 2}, {2, 3}};
        auto path = build_path_template(SymbolTable::letters(4), sets);
        if (auto r = restrict(path, FacetSet{1}))
            corpus.push_back(to_document(*r));

        std::size_t identical = 0;
        for (auto & doc : corpus) {
            auto text = serialize(doc);
            auto back = parse_document(text);
            identical += back == doc && serialize(back) == text;
        }

        auto input = serialize(to_document(path));
        std::vector<std::vector<std::string>> commands{
            {"transform", "--r", "87", "--seed", "7"},
            {"transform", "--r", "4", "--seed", "11", "--strategy", "reject"},
            {"build-spindle", "--dim", "2", "--transform", "--r", "87", "--seed", "3"},
            {"sweep", "--r-list", "4,8,87", "--trials", "10", "--seed", "5", "--json"},
            {"estimate-bad-event", "--dim", "2", "--r", "8", "--trials", "1000", "--seed", "9"}};
        std::size_t deterministic = 0;
        for (auto & args : commands) {
            auto first = cli(args, input);
            auto second = cli(args, input);
            deterministic += first.first == 0 && first == second;
        }
        bool ok = identical == corpus.size() && deterministic == commands.size();
        return {ok, std::to_string(identical) + "/" + std::to_string(corpus.size()) + " documents, " +
                std::to_string(deterministic) + "/" + std::to_string(commands.size()) + " commands byte-identical"};
    }
}

int main()
{
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"golden subdivision path", golden_vector},
        {"spindle template lengths", template_lengths},
        {"end-to-end construction at r = 87", end_to_end},
        {"bad-event frequency bound", bad_event_bound},
        {"localization", localization},
        {"row replay on constructed instances", row_replay},
        {"interpolation law", interpolation},
        {"end-point count oracle equivalence", oracle_equivalence},
        {"spindle scaling", spindle_scaling},
        {"round trip and determinism", round_trip}};

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        }
        catch (const std::exception & e) {
            outcome = {false, std::string("threw: ") + e.what()};
        }
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        failed += ! outcome.passed;
        std::printf("%s %2zu %s: %s (%.2fs)\n", outcome.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                outcome.detail.c_str(), elapsed.count());
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
