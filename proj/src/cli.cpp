#include <spg/cli.hpp>
#include <spg/document.hpp>
#include <spg/experiments.hpp>
#include <spg/spindle.hpp>
#include <spg/transform.hpp>
#include <spg/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace spg
{
    namespace
    {
        constexpr std::size_t default_witness_limit = 20;

        /// Usage or I/O problem detected after argument parsing.
        class UsageError : public Error
        {
        public:
            using Error::Error;
        };

        auto fixed(double value, int digits = 6) -> std::string
        {
            char buffer[64];
            std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
            return buffer;
        }

        auto read_document(const std::string & path, std::istream & in) -> SpgDocument
        {
            std::stringstream text;
            if (path.empty() || path == "-")
                text << in.rdbuf();
            else {
                std::ifstream file(path);
                if (! file)
                    throw UsageError("cannot open '" + path + "'");
                text << file.rdbuf();
            }
            return parse_document(text.str());
        }

        auto strategy_names() -> std::map<std::string, Strategy>
        {
            return {{"resample", Strategy::Resample}, {"reject", Strategy::Reject}};
        }

        auto print_events(std::ostream & err, const std::vector<BadEvent> & events, const SymbolTable & symbols,
                std::size_t limit) -> void
        {
            for (std::size_t i = 0; i < events.size() && i < limit; ++i) {
                auto & ev = events[i];
                err << "  vertex " << ev.vertex << ", edges " << ev.edge1 << " and " << ev.edge2 << ": "
                    << to_string(ev.witness1, symbols) << " ~ " << to_string(ev.witness2, symbols) << '\n';
            }
            if (events.size() > limit)
                err << "  ... " << events.size() - limit << " more\n";
        }

        struct TransformOptions
        {
            std::uint32_t r = 0;
            std::uint64_t seed = 0;
            std::size_t max_rounds = 1000;
            Strategy strategy = Strategy::Resample;
        };

        auto add_transform_options(CLI::App * cmd, TransformOptions & opts, bool required) -> void
        {
            auto r = cmd->add_option("--r", opts.r, "row multiplier r (>= 2)")->check(CLI::Range(2u, 1u << 20));
            auto seed = cmd->add_option("--seed", opts.seed, "generator seed");
            if (required) {
                r->required();
                seed->required();
            }
            cmd->add_option("--max-rounds", opts.max_rounds, "resampling round budget")->capture_default_str();
            cmd->add_option("--strategy", opts.strategy, "resample | reject")
                ->transform(CLI::CheckedTransformer(strategy_names(), CLI::ignore_case));
        }

        auto run_transform(const Spg & tmpl, const TransformOptions & opts, std::ostream & err, std::size_t limit)
            -> std::optional<TransformResult>
        {
            TransformConfig config{opts.r, opts.seed, opts.max_rounds, opts.strategy};
            try {
                auto result = construct_with_resampling(tmpl, config);
                err << "constructed in " << result.rounds_used << " resampling rounds\n";
                return result;
            }
            catch (const ResamplingExhausted & e) {
                err << e.what() << '\n';
                print_events(err, e.remaining, lift_symbols(tmpl.symbols, opts.r), limit);
                return std::nullopt;
            }
        }

        auto with_lifted_apices(SpgDocument doc, const std::optional<std::pair<FacetSet, FacetSet>> & apices,
                std::uint32_t r, std::size_t base_count) -> SpgDocument
        {
            if (apices)
                doc.apices = std::pair{lift_set(apices->first, r, base_count), lift_set(apices->second, r, base_count)};
            return doc;
        }

        auto parse_property(const std::string & name) -> std::vector<Property>
        {
            if (name == "all")
                return {Property::Adjacency, Property::StrongAdjacency, Property::EndPointCount, Property::Singleton,
                    Property::DimensionReduction};
            for (auto p : {Property::Adjacency, Property::StrongAdjacency, Property::EndPointCount, Property::Singleton,
                     Property::DimensionReduction})
                if (name == to_string(p))
                    return {p};
            throw UsageError("unknown property '" + name + "'");
        }
    }

    auto run_cli(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Subset partition graph toolkit", "spgtool"};
        app.require_subcommand(1);

        std::string input = "-";
        bool all_witnesses = false;
        auto add_input = [&](CLI::App * cmd) {
            cmd->add_option("--input", input, "document file, - for stdin")->capture_default_str();
        };

        // build-spindle
        std::size_t dim = 0;
        std::size_t max_dim = 8;
        bool raw = false, transform = false;
        TransformOptions spindle_opts;
        auto build = app.add_subcommand("build-spindle", "path template through all d-subsets of [d] x {1,2}");
        build->add_option("--dim", dim, "dimension d")->required()->check(CLI::PositiveNumber);
        build->add_option("--max-dim", max_dim, "largest d accepted")->capture_default_str();
        auto raw_flag = build->add_flag("--raw", raw, "emit the template (default)");
        build->add_flag("--transform", transform, "emit the transformed spindle")->excludes(raw_flag);
        add_transform_options(build, spindle_opts, false);
        build->add_flag("--all-witnesses", all_witnesses, "print every remaining bad event");

        // transform
        TransformOptions transform_opts;
        auto trans = app.add_subcommand("transform", "randomized subdivision of a singleton template");
        add_input(trans);
        add_transform_options(trans, transform_opts, true);
        trans->add_flag("--all-witnesses", all_witnesses, "print every remaining bad event");

        // verify
        std::vector<std::string> properties{"all"};
        unsigned long long budget = DimensionReductionOptions{}.budget;
        auto verify = app.add_subcommand("verify", "check combinatorial properties");
        add_input(verify);
        verify->add_option("--property", properties,
                "adjacency | strong-adjacency | endpoint-count | singleton | dimension-reduction | all")
            ->delimiter(',')
            ->capture_default_str();
        verify->add_option("--budget", budget, "restriction checks allowed for dimension-reduction")->capture_default_str();
        verify->add_flag("--all-witnesses", all_witnesses, "print every witness");

        // restrict
        std::string facet;
        auto restrict_cmd = app.add_subcommand("restrict", "restriction to the sets containing a facet");
        add_input(restrict_cmd);
        restrict_cmd->add_option("--facet", facet, "comma-separated symbol labels")->required();

        // stats
        auto stats = app.add_subcommand("stats", "dimension, size, degree, diameter, spindle length");
        add_input(stats);

        // sweep
        std::vector<std::uint32_t> r_list;
        std::size_t trials = 0;
        std::uint64_t seed = 0;
        bool as_json = false;
        unsigned threads = 0;
        TransformOptions sweep_opts;
        auto sweep = app.add_subcommand("sweep", "success rate of the construction across values of r");
        add_input(sweep);
        sweep->add_option("--r-list", r_list, "values of r")->required()->delimiter(',');
        sweep->add_option("--trials", trials, "trials per r")->required()->check(CLI::PositiveNumber);
        sweep->add_option("--seed", seed, "base seed")->required();
        sweep->add_option("--max-rounds", sweep_opts.max_rounds, "resampling round budget")->capture_default_str();
        sweep->add_option("--strategy", sweep_opts.strategy, "resample | reject")
            ->transform(CLI::CheckedTransformer(strategy_names(), CLI::ignore_case));
        sweep->add_option("--threads", threads, "worker threads, 0 for all cores");
        sweep->add_flag("--json", as_json, "machine-readable output");

        // estimate-bad-event
        std::uint32_t estimate_r = 0;
        auto estimate = app.add_subcommand("estimate-bad-event", "Monte-Carlo bad-event frequency on a degree-2 star");
        estimate->add_option("--dim", dim, "dimension d")->required()->check(CLI::PositiveNumber);
        estimate->add_option("--r", estimate_r, "row multiplier r")->required()->check(CLI::PositiveNumber);
        estimate->add_option("--trials", trials, "number of trials")->required()->check(CLI::PositiveNumber);
        estimate->add_option("--seed", seed, "generator seed")->required();

        try {
            std::vector<std::string> reversed_args(args.rbegin(), args.rend());
            app.parse(reversed_args);
        }
        catch (const CLI::ParseError & e) {
            auto status = app.exit(e, out, err);
            return status == 0 ? int(ExitStatus::Ok) : int(ExitStatus::Usage);
        }

        auto limit = all_witnesses ? std::size_t(-1) : default_witness_limit;

        try {
            if (build->parsed()) {
                auto tmpl = build_spindle_template(dim, max_dim);
                if (! transform) {
                    out << serialize(to_document(tmpl.spindle));
                    return int(ExitStatus::Ok);
                }
                if (spindle_opts.r == 0 || build->count("--seed") == 0)
                    throw UsageError("--transform needs --r and --seed");
                auto result = run_transform(tmpl.spindle.spg(), spindle_opts, err, limit);
                if (! result)
                    return int(ExitStatus::Exhausted);
                auto doc = with_lifted_apices(to_document(*result),
                        std::pair{tmpl.spindle.apex1(), tmpl.spindle.apex2()}, spindle_opts.r,
                        tmpl.spindle.spg().symbols.size());
                auto spindle = as_spindle(doc);
                if (! check_strong_adjacency(spindle.spg()).holds() || ! check_endpoint_count(spindle.spg()).holds())
                    throw Error("constructed spindle failed verification");
                out << serialize(doc);
                return int(ExitStatus::Ok);
            }

            if (trans->parsed()) {
                auto doc = read_document(input, in);
                auto result = run_transform(doc.spg, transform_opts, err, limit);
                if (! result)
                    return int(ExitStatus::Exhausted);
                out << serialize(with_lifted_apices(to_document(*result), doc.apices, transform_opts.r, doc.spg.symbols.size()));
                return int(ExitStatus::Ok);
            }

            if (verify->parsed()) {
                auto doc = read_document(input, in);
                std::vector<Property> wanted;
                for (auto & name : properties)
                    for (auto p : parse_property(name))
                        if (std::find(wanted.begin(), wanted.end(), p) == wanted.end())
                            wanted.push_back(p);

                bool violated = false;
                for (auto p : wanted) {
                    PropertyReport report;
                    switch (p) {
                    case Property::Adjacency: report = check_adjacency(doc.spg); break;
                    case Property::StrongAdjacency: report = check_strong_adjacency(doc.spg); break;
                    case Property::EndPointCount: report = check_endpoint_count(doc.spg); break;
                    case Property::Singleton: report = check_singleton(doc.spg); break;
                    default: report = check_dimension_reduction(doc.spg, DimensionReductionOptions{budget}); break;
                    }
                    if (report.holds()) {
                        out << to_string(p) << ": holds\n";
                        continue;
                    }
                    violated = true;
                    out << to_string(p) << ": violated (" << report.witnesses.size() << " witnesses)\n";
                    for (std::size_t i = 0; i < report.witnesses.size() && i < limit; ++i)
                        out << "  " << report.witnesses[i].description << '\n';
                    if (report.witnesses.size() > limit)
                        out << "  ... " << report.witnesses.size() - limit << " more\n";
                }
                return int(violated ? ExitStatus::Violation : ExitStatus::Ok);
            }

            if (restrict_cmd->parsed()) {
                auto doc = read_document(input, in);
                auto face = parse_facet(facet, doc.spg.symbols);
                auto restricted = restrict(doc.spg, face);
                if (restricted) {
                    out << serialize(to_document(*restricted));
                    return int(ExitStatus::Ok);
                }
                Spg empty;
                std::vector<std::string> names;
                for (SymbolId x = 0; x < doc.spg.symbols.size(); ++x)
                    if (! face.contains(x))
                        names.push_back(doc.spg.symbols.name(x));
                empty.symbols = SymbolTable{std::move(names)};
                empty.dimension = doc.spg.dimension - face.size();
                empty.is_restriction = true;
                err << "no set contains " << to_string(face, doc.spg.symbols) << "; restriction is empty\n";
                out << serialize(to_document(empty));
                return int(ExitStatus::Ok);
            }

            if (stats->parsed()) {
                auto doc = read_document(input, in);
                auto & spg = doc.spg;
                out << "dimension: " << spg.dimension << '\n';
                out << "symbols: " << spg.symbols.size() << '\n';
                out << "vertices: " << spg.vertices.size() << '\n';
                out << "sets: " << family(spg).size() << '\n';
                out << "edges: " << spg.edges.size() << '\n';
                out << "restriction: " << (spg.is_restriction ? "yes" : "no") << '\n';
                out << "max degree: " << max_degree(spg) << '\n';
                if (auto diam = diameter(spg))
                    out << "diameter: " << *diam << '\n';
                else
                    out << "diameter: undefined (disconnected or empty)\n";
                if (doc.apices)
                    out << "spindle length: " << as_spindle(doc).length() << '\n';
                return int(ExitStatus::Ok);
            }

            if (sweep->parsed()) {
                auto doc = read_document(input, in);
                SweepOptions options{sweep_opts.max_rounds, sweep_opts.strategy, {}, threads};
                auto report = sweep_r(doc.spg, r_list, trials, seed, options);
                if (as_json) {
                    nlohmann::ordered_json j;
                    j["template"] = report.template_descriptor;
                    j["rows"] = nlohmann::ordered_json::array();
                    for (auto & row : report.rows)
                        j["rows"].push_back({{"r", row.r}, {"trials", row.trials}, {"successes", row.successes},
                                {"success_rate", row.success_rate()}, {"mean_rounds", row.mean_rounds},
                                {"mean_initial_bad_events", row.mean_initial_bad_events}});
                    out << j.dump(2) << '\n';
                }
                else {
                    out << "template: " << report.template_descriptor << '\n';
                    out << "r\ttrials\tsuccesses\trate\tmean_rounds\tmean_initial_bad_events\n";
                    for (auto & row : report.rows)
                        out << row.r << '\t' << row.trials << '\t' << row.successes << '\t' << fixed(row.success_rate(), 4)
                            << '\t' << fixed(row.mean_rounds, 4) << '\t' << fixed(row.mean_initial_bad_events, 4) << '\n';
                }
                return int(ExitStatus::Ok);
            }

            if (estimate->parsed()) {
                std::vector<SymbolId> c, l1, l2;
                for (std::size_t i = 0; i < dim; ++i) {
                    c.push_back(SymbolId(i));
                    l1.push_back(SymbolId(dim + i));
                    l2.push_back(SymbolId(2 * dim + i));
                }
                auto result = estimate_bad_event_probability(FacetSet{c}, FacetSet{l1}, FacetSet{l2}, estimate_r, trials, seed);
                auto p = std::min(1.0, result.bound);
                auto sigma = std::sqrt(p * (1.0 - p) / double(trials));
                out << "trials: " << result.trials << '\n';
                out << "occurrences: " << result.occurrences << '\n';
                out << "frequency: " << fixed(result.frequency) << '\n';
                out << "bound 4/r: " << fixed(result.bound) << '\n';
                out << "three sigma: " << fixed(3 * sigma) << '\n';
                out << "within bound: " << (result.frequency <= result.bound + 3 * sigma ? "yes" : "no") << '\n';
                if (estimate_r < 4)
                    out << "note: the bound is only claimed for r >= 4\n";
                return int(ExitStatus::Ok);
            }
        }
        catch (const BudgetExceeded & e) {
            err << "refused: " << e.what() << '\n';
            return int(ExitStatus::Usage);
        }
        catch (const Error & e) {
            err << "error: " << e.what() << '\n';
            return int(ExitStatus::Usage);
        }
        return int(ExitStatus::Usage);
    }
}
