#include <spg/transform.hpp>

#include "bits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace spg
{
    auto lifted_symbol(SymbolId base, std::uint32_t row, std::size_t base_count) -> SymbolId
    {
        return SymbolId(row * base_count + base);
    }

    auto lift_symbols(const SymbolTable & base, std::uint32_t r) -> SymbolTable
    {
        std::vector<std::string> names;
        names.reserve(base.size() * r);
        for (std::uint32_t row = 0; row < r; ++row)
            for (auto & name : base.names())
                names.push_back(name + "@" + std::to_string(row + 1));
        return SymbolTable{std::move(names)};
    }

    auto lift_set(const FacetSet & set, std::uint32_t r, std::size_t base_count) -> FacetSet
    {
        std::vector<SymbolId> out;
        out.reserve(set.size() * r);
        for (std::uint32_t row = 0; row < r; ++row)
            for (auto x : set)
                out.push_back(lifted_symbol(x, row, base_count));
        return FacetSet{std::move(out)};
    }

    auto row_of(const FacetSet & lifted, std::uint32_t row, std::size_t base_count) -> FacetSet
    {
        std::vector<SymbolId> out;
        for (auto x : lifted)
            if (x / base_count == row)
                out.push_back(SymbolId(x % base_count));
        return FacetSet{std::move(out)};
    }

    auto is_row_permutation(const RowPermutation & perm, std::uint32_t r) -> bool
    {
        if (perm.size() != r)
            return false;
        std::vector<char> seen(r, 0);
        for (auto row : perm) {
            if (row >= r || seen[row])
                return false;
            seen[row] = 1;
        }
        return true;
    }

    auto reversed(const RowPermutation & perm) -> RowPermutation
    {
        return {perm.rbegin(), perm.rend()};
    }

    ResamplingExhausted::ResamplingExhausted(std::size_t rounds, std::vector<BadEvent> remaining) :
        Error("resampling budget of " + std::to_string(rounds) + " rounds exhausted with " +
                std::to_string(remaining.size()) + " bad events remaining"),
        rounds(rounds),
        remaining(std::move(remaining))
    {
    }

    auto min_multiplier(std::size_t max_degree) -> std::uint32_t
    {
        if (max_degree == 0)
            return 2;
        return std::uint32_t(std::ceil(16.0 * std::numbers::e * double(max_degree)));
    }

    auto local_lemma_condition(std::size_t max_degree, std::uint32_t r) -> bool
    {
        return (4.0 * double(max_degree) - 5.0) * (4.0 / double(r)) * std::numbers::e < 1.0;
    }

    namespace
    {
        auto require_singleton_template(const Spg & spg, std::uint32_t r) -> void
        {
            if (r < 2)
                throw InvalidArgument("multiplier r must be at least 2");
            if (! check_singleton(spg).holds())
                throw InvalidArgument("template must satisfy the singleton property");
        }
    }

    auto lift_product(const Spg & spg, std::uint32_t r) -> Spg
    {
        require_singleton_template(spg, r);
        Spg result;
        result.symbols = lift_symbols(spg.symbols, r);
        result.dimension = spg.dimension * r;
        for (auto & v : spg.vertices)
            result.vertices.push_back({lift_set(v.front(), r, spg.symbols.size())});
        for (auto & e : spg.edges)
            result.edges.push_back(Edge::between(e.u, e.v));
        return result;
    }

    auto subdivision_path(const FacetSet & from, const FacetSet & to, std::uint32_t r, const RowPermutation & perm,
            std::size_t base_count) -> std::vector<FacetSet>
    {
        if (from.size() != to.size())
            throw InvalidArgument("subdivision endpoints differ in size");
        if (from == to)
            throw InvalidArgument("subdivision endpoints are equal");
        if (! is_row_permutation(perm, r))
            throw InvalidArgument("row order is not a permutation of " + std::to_string(r) + " rows");
        if ((! from.empty() && from.elements().back() >= base_count) || (! to.empty() && to.elements().back() >= base_count))
            throw InvalidArgument("subdivision endpoint uses an unknown symbol");

        auto leaving = set_difference(from, to);
        auto entering = set_difference(to, from);

        std::set<SymbolId> current;
        for (auto x : lift_set(from, r, base_count))
            current.insert(x);

        std::vector<FacetSet> path;
        path.reserve(r * leaving.size() + 1);
        path.push_back(FacetSet{std::vector<SymbolId>(current.begin(), current.end())});
        for (auto row : perm)
            for (std::size_t t = 0; t < leaving.size(); ++t) {
                current.erase(lifted_symbol(leaving[t], row, base_count));
                current.insert(lifted_symbol(entering[t], row, base_count));
                path.push_back(FacetSet{std::vector<SymbolId>(current.begin(), current.end())});
            }
        return path;
    }

    auto build_subdivision(const Spg & spg, std::uint32_t r, const PermutationAssignment & perms) -> TransformResult
    {
        require_singleton_template(spg, r);
        if (perms.per_edge.size() != spg.edges.size())
            throw InvalidArgument("permutation assignment covers " + std::to_string(perms.per_edge.size()) +
                    " edges, template has " + std::to_string(spg.edges.size()));
        for (EdgeId e = 0; e < perms.per_edge.size(); ++e)
            if (! is_row_permutation(perms.per_edge[e], r))
                throw InvalidArgument("permutation for edge " + std::to_string(e) + " is not a bijection on " +
                        std::to_string(r) + " rows");

        const auto n = spg.symbols.size();
        TransformResult result;
        result.r = r;
        result.permutations = perms;
        result.spg = lift_product(spg, r);
        result.spg.edges.clear();
        for (VertexId v = 0; v < spg.vertices.size(); ++v)
            result.vertex_map.push_back(v);

        for (EdgeId e = 0; e < spg.edges.size(); ++e) {
            auto edge = Edge::between(spg.edges[e].u, spg.edges[e].v);
            auto sets = subdivision_path(spg.vertices[edge.u].front(), spg.vertices[edge.v].front(), r, perms.per_edge[e], n);
            std::vector<VertexId> path{result.vertex_map[edge.u]};
            for (std::size_t k = 1; k + 1 < sets.size(); ++k) {
                path.push_back(result.spg.vertices.size());
                result.spg.vertices.push_back({std::move(sets[k])});
            }
            path.push_back(result.vertex_map[edge.v]);
            for (std::size_t k = 1; k < path.size(); ++k)
                result.spg.edges.push_back(Edge::between(path[k - 1], path[k]));
            result.edge_paths.push_back(std::move(path));
        }
        return result;
    }

    namespace
    {
        auto lifted_bits(const TransformResult & result) -> std::vector<detail::Bits>
        {
            std::vector<detail::Bits> bits;
            bits.reserve(result.spg.vertices.size());
            for (auto & v : result.spg.vertices)
                bits.push_back(detail::to_bits(v.front(), result.spg.symbols.size()));
            return bits;
        }

        // Vertices on the subdivision of `e`, walking away from `from`, which is excluded.
        auto walk_from(const TransformResult & result, EdgeId e, VertexId from) -> std::vector<VertexId>
        {
            auto & path = result.edge_paths[e];
            if (path.front() == from)
                return {path.begin() + 1, path.end()};
            return {path.rbegin() + 1, path.rend()};
        }

        auto incident_edges(const Spg & spg) -> std::vector<std::vector<EdgeId>>
        {
            std::vector<std::vector<EdgeId>> result(spg.vertices.size());
            for (EdgeId e = 0; e < spg.edges.size(); ++e) {
                result[spg.edges[e].u].push_back(e);
                result[spg.edges[e].v].push_back(e);
            }
            return result;
        }
    }

    auto find_bad_events(const TransformResult & result, const Spg & original) -> std::vector<BadEvent>
    {
        if (result.edge_paths.size() != original.edges.size() || result.vertex_map.size() != original.vertices.size())
            throw InvalidArgument("transform result does not match the template");

        auto bits = lifted_bits(result);
        const auto threshold = result.spg.dimension - 1;
        auto incident = incident_edges(original);

        std::vector<BadEvent> events;
        for (VertexId v = 0; v < original.vertices.size(); ++v) {
            auto centre = result.vertex_map[v];
            auto & edges = incident[v];
            for (std::size_t x = 0; x < edges.size(); ++x)
                for (std::size_t y = x + 1; y < edges.size(); ++y) {
                    auto side1 = walk_from(result, edges[x], centre);
                    auto side2 = walk_from(result, edges[y], centre);
                    [&] {
                        for (auto w1 : side1)
                            for (auto w2 : side2)
                                if (bits[w1].intersection_count(bits[w2]) >= threshold) {
                                    events.push_back(BadEvent{v, edges[x], edges[y],
                                            result.spg.vertices[w1].front(), result.spg.vertices[w2].front()});
                                    return;
                                }
                    }();
                }
        }
        std::sort(events.begin(), events.end());
        return events;
    }

    auto random_assignment(std::size_t edge_count, std::uint32_t r, Rng & rng) -> PermutationAssignment
    {
        PermutationAssignment perms;
        perms.per_edge.reserve(edge_count);
        for (std::size_t e = 0; e < edge_count; ++e)
            perms.per_edge.push_back(rng.permutation(r));
        return perms;
    }

    namespace
    {
        // Template edges to redraw when the verifiers still object after the
        // local bad events are gone. Only reachable for r < 4, below the
        // range in which bad events are the only way to fail.
        auto edges_behind_violations(const TransformResult & result) -> std::vector<EdgeId>
        {
            std::vector<std::vector<EdgeId>> owners(result.spg.vertices.size());
            for (EdgeId e = 0; e < result.edge_paths.size(); ++e)
                for (auto w : result.edge_paths[e])
                    owners[w].push_back(e);
            std::vector<char> is_template_vertex(result.spg.vertices.size(), 0);
            for (auto v : result.vertex_map)
                is_template_vertex[v] = 1;

            auto witnesses = validate(result.spg).witnesses;
            if (witnesses.empty())
                for (auto & report : {check_adjacency(result.spg), check_endpoint_count(result.spg)})
                    witnesses.insert(witnesses.end(), report.witnesses.begin(), report.witnesses.end());

            std::set<EdgeId> chosen;
            for (auto & w : witnesses) {
                bool any_interior = false;
                for (auto v : w.vertices)
                    if (v < owners.size() && ! is_template_vertex[v]) {
                        chosen.insert(owners[v].begin(), owners[v].end());
                        any_interior = true;
                    }
                if (! any_interior)
                    for (auto v : w.vertices)
                        if (v < owners.size())
                            chosen.insert(owners[v].begin(), owners[v].end());
            }
            if (chosen.empty())
                for (EdgeId e = 0; e < result.edge_paths.size(); ++e)
                    chosen.insert(e);
            return {chosen.begin(), chosen.end()};
        }

        auto certificate_holds(const Spg & spg) -> bool
        {
            return validate(spg).holds() && check_adjacency(spg).holds() && check_strong_adjacency(spg).holds() &&
                check_endpoint_count(spg).holds() && check_singleton(spg).holds();
        }
    }

    auto attempt_construction(const Spg & spg, const TransformConfig & config) -> ConstructionAttempt
    {
        require_singleton_template(spg, config.r);

        Rng rng(config.seed);
        auto perms = random_assignment(spg.edges.size(), config.r, rng);
        std::vector<ResampleRound> log;

        for (std::size_t round = 0;; ++round) {
            auto result = build_subdivision(spg, config.r, perms);
            auto events = find_bad_events(result, spg);

            std::vector<EdgeId> redraw;
            if (events.empty()) {
                if (certificate_holds(result.spg)) {
                    result.rounds_used = round;
                    result.resample_log = std::move(log);
                    return ConstructionAttempt{true, std::move(result), {}};
                }
                redraw = edges_behind_violations(result);
            }
            else {
                std::set<EdgeId> involved;
                for (auto & ev : events) {
                    involved.insert(ev.edge1);
                    involved.insert(ev.edge2);
                }
                redraw.assign(involved.begin(), involved.end());
            }

            if (round == config.max_rounds) {
                result.rounds_used = round;
                result.resample_log = std::move(log);
                return ConstructionAttempt{false, std::move(result), std::move(events)};
            }

            if (config.strategy == Strategy::Reject) {
                redraw.resize(spg.edges.size());
                for (EdgeId e = 0; e < redraw.size(); ++e)
                    redraw[e] = e;
            }
            for (auto e : redraw)
                perms.per_edge[e] = rng.permutation(config.r);
            log.push_back(ResampleRound{round, std::move(events), std::move(redraw)});
        }
    }

    auto construct_with_resampling(const Spg & spg, const TransformConfig & config) -> TransformResult
    {
        auto attempt = attempt_construction(spg, config);
        if (! attempt.succeeded)
            throw ResamplingExhausted(attempt.result.rounds_used, std::move(attempt.remaining));
        return std::move(attempt.result);
    }

    auto estimate_bad_event_probability(const FacetSet & center, const FacetSet & leaf1, const FacetSet & leaf2,
            std::uint32_t r, std::size_t trials, std::uint64_t seed) -> BadEventEstimate
    {
        if (trials == 0)
            throw InvalidArgument("at least one trial is required");
        if (r < 1)
            throw InvalidArgument("multiplier r must be positive");
        if (center == leaf1 || center == leaf2 || leaf1 == leaf2)
            throw InvalidArgument("star sets must be distinct");
        if (center.size() != leaf1.size() || center.size() != leaf2.size() || center.empty())
            throw InvalidArgument("star sets must have the same positive size");

        std::size_t n = 0;
        for (auto * s : {&center, &leaf1, &leaf2})
            n = std::max<std::size_t>(n, s->elements().back() + 1);
        const auto threshold = r * center.size() - 1;

        Rng rng(seed);
        BadEventEstimate estimate;
        estimate.trials = trials;
        estimate.bound = 4.0 / double(r);
        for (std::size_t t = 0; t < trials; ++t) {
            auto perm1 = rng.permutation(r);
            auto perm2 = rng.permutation(r);
            std::vector<detail::Bits> side1, side2;
            for (auto & s : subdivision_path(center, leaf1, r, perm1, n))
                side1.push_back(detail::to_bits(s, n * r));
            for (auto & s : subdivision_path(center, leaf2, r, perm2, n))
                side2.push_back(detail::to_bits(s, n * r));

            bool bad = false;
            for (std::size_t i = 1; i < side1.size() && ! bad; ++i)
                for (std::size_t j = 1; j < side2.size() && ! bad; ++j)
                    bad = side1[i].intersection_count(side2[j]) >= threshold;
            if (bad)
                ++estimate.occurrences;
        }
        estimate.frequency = double(estimate.occurrences) / double(trials);
        return estimate;
    }

    auto check_localization(const TransformResult & result, const Spg & original) -> PropertyReport
    {
        if (result.r < 4)
            throw InvalidArgument("localization needs r >= 4, got r = " + std::to_string(result.r));
        if (result.edge_paths.size() != original.edges.size())
            throw InvalidArgument("transform result does not match the template");

        std::vector<std::vector<EdgeId>> owners(result.spg.vertices.size());
        for (EdgeId e = 0; e < result.edge_paths.size(); ++e)
            for (auto w : result.edge_paths[e])
                owners[w].push_back(e);

        auto touches = [&](EdgeId a, EdgeId b) {
            auto & x = original.edges[a];
            auto & y = original.edges[b];
            return a == b || x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
        };

        auto sets = family(result.spg);
        PropertyReport report{Property::Localization, {}};
        for (auto & ridge : ridge_index(sets))
            for (std::size_t x = 0; x < ridge.members.size(); ++x)
                for (std::size_t y = x + 1; y < ridge.members.size(); ++y) {
                    auto i = ridge.members[x], j = ridge.members[y];
                    bool local = false;
                    for (auto a : owners[i])
                        for (auto b : owners[j])
                            local = local || touches(a, b);
                    if (! local)
                        report.witnesses.push_back(Witness{Property::Localization,
                                to_string(sets[i], result.spg.symbols) + " and " + to_string(sets[j], result.spg.symbols) +
                                    " share rd-1 symbols on edges without a common endpoint",
                                {i, j}, {sets[i], sets[j]}});
                }
        std::sort(report.witnesses.begin(), report.witnesses.end());
        return report;
    }
}
