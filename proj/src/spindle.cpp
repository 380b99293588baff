#include <spg/spindle.hpp>
#include <spg/verify.hpp>

#include <algorithm>
#include <set>

namespace spg
{
    auto spindle_symbols(std::size_t d) -> SymbolTable
    {
        std::vector<std::string> names;
        for (std::size_t s = 1; s <= 2; ++s)
            for (std::size_t i = 1; i <= d; ++i)
                names.push_back(std::to_string(i) + "_" + std::to_string(s));
        return SymbolTable{std::move(names)};
    }

    namespace
    {
        // Colex successor of a k-subset of {0, ..., n-1}; false after the last.
        auto next_colex(std::vector<SymbolId> & c, std::size_t n) -> bool
        {
            for (std::size_t i = 0; i < c.size(); ++i) {
                auto limit = i + 1 < c.size() ? c[i + 1] : SymbolId(n);
                if (c[i] + 1 < limit) {
                    ++c[i];
                    for (std::size_t j = 0; j < i; ++j)
                        c[j] = SymbolId(j);
                    return true;
                }
            }
            return false;
        }

        auto require_distinct_uniform(std::span<const FacetSet> sets) -> void
        {
            if (sets.empty())
                throw InvalidArgument("template needs at least one set");
            std::set<FacetSet> seen;
            for (auto & s : sets) {
                if (s.size() != sets.front().size())
                    throw InvalidArgument("template sets differ in size");
                if (! seen.insert(s).second)
                    throw InvalidArgument("template set repeated");
            }
        }
    }

    auto build_spindle_template(std::size_t d, std::size_t max_dimension) -> SpindleTemplate
    {
        if (d == 0)
            throw InvalidArgument("spindle dimension must be positive");
        if (d > max_dimension)
            throw InvalidArgument("spindle dimension " + std::to_string(d) + " exceeds the cap of " +
                    std::to_string(max_dimension));

        std::vector<FacetSet> order;
        std::vector<SymbolId> current(d);
        for (std::size_t i = 0; i < d; ++i)
            current[i] = SymbolId(i);
        do
            order.push_back(FacetSet{current});
        while (next_colex(current, 2 * d));

        auto apex1 = order.front();
        auto apex2 = order.back();
        auto spg = singleton_path(spindle_symbols(d), order);
        require_valid(spg);
        return SpindleTemplate{Spindle{std::move(spg), std::move(apex1), std::move(apex2)}, std::move(order)};
    }

    auto build_exponential_spindle(std::size_t d, const TransformConfig & config, std::size_t max_dimension)
        -> ExponentialSpindle
    {
        auto tmpl = build_spindle_template(d, max_dimension);
        auto & base = tmpl.spindle.spg();
        auto result = construct_with_resampling(base, config);

        auto n = base.symbols.size();
        auto apex1 = lift_set(tmpl.spindle.apex1(), config.r, n);
        auto apex2 = lift_set(tmpl.spindle.apex2(), config.r, n);
        Spindle spindle{result.spg, std::move(apex1), std::move(apex2)};
        if (! check_strong_adjacency(spindle.spg()).holds() || ! check_endpoint_count(spindle.spg()).holds())
            throw Error("constructed spindle failed verification");
        return ExponentialSpindle{std::move(result), std::move(spindle)};
    }

    auto build_path_template(const SymbolTable & symbols, std::span<const FacetSet> sets) -> Spg
    {
        require_distinct_uniform(sets);
        auto spg = singleton_path(symbols, sets);
        require_valid(spg);
        return spg;
    }

    auto build_star_template(const SymbolTable & symbols, const FacetSet & center, std::span<const FacetSet> leaves) -> Spg
    {
        std::vector<FacetSet> all{center};
        all.insert(all.end(), leaves.begin(), leaves.end());
        require_distinct_uniform(all);

        Spg spg;
        spg.symbols = symbols;
        spg.dimension = center.size();
        for (auto & s : all)
            spg.vertices.push_back({s});
        for (std::size_t i = 1; i < all.size(); ++i)
            spg.edges.push_back(Edge{0, i});
        require_valid(spg);
        return spg;
    }

    auto sliding_path_template(std::size_t d, std::size_t vertices) -> Spg
    {
        if (d == 0 || vertices == 0)
            throw InvalidArgument("sliding path needs positive dimension and length");
        std::vector<FacetSet> sets;
        for (std::size_t start = 0; start < vertices; ++start) {
            std::vector<SymbolId> window;
            for (std::size_t i = 0; i < d; ++i)
                window.push_back(SymbolId(start + i));
            sets.push_back(FacetSet{std::move(window)});
        }
        return build_path_template(SymbolTable::letters(d + vertices - 1), sets);
    }
}
