#pragma once

#include <spg/spg.hpp>
#include <spg/transform.hpp>

#include <optional>
#include <span>
#include <vector>

namespace spg
{
    /// Path through every d-subset of [d] x {1,2}, one set per vertex.
    struct SpindleTemplate
    {
        Spindle spindle;
        std::vector<FacetSet> order;
    };

    /// Symbols "1_1", ..., "d_1", "1_2", ..., "d_2"; (i, s) has id (s-1) d + (i-1).
    auto spindle_symbols(std::size_t d) -> SymbolTable;

    /// All C(2d, d) subsets in colexicographic order, which places
    /// [d] x {1} first and [d] x {2} last. Throws InvalidArgument for d = 0
    /// or d > max_dimension.
    auto build_spindle_template(std::size_t d, std::size_t max_dimension = 8) -> SpindleTemplate;

    /// The transformed spindle and its apices [d] x {1} x [r], [d] x {2} x [r].
    struct ExponentialSpindle
    {
        TransformResult transform;
        Spindle spindle;
    };

    /// Runs construct_with_resampling on the template; the result is checked
    /// to be a spindle with strong adjacency and end-point count.
    auto build_exponential_spindle(std::size_t d, const TransformConfig & config, std::size_t max_dimension = 8)
        -> ExponentialSpindle;

    /// Singleton path in the given order. Throws InvalidArgument on
    /// duplicate sets, mixed sizes, or an empty list.
    auto build_path_template(const SymbolTable & symbols, std::span<const FacetSet> sets) -> Spg;

    /// Centre joined to every leaf; vertex 0 is the centre.
    auto build_star_template(const SymbolTable & symbols, const FacetSet & center, std::span<const FacetSet> leaves) -> Spg;

    /// Path {0..d-1} - {1..d} - ... over `vertices` consecutive windows of
    /// d + vertices - 1 letters. Every symbol occupies a contiguous run of
    /// the path.
    auto sliding_path_template(std::size_t d, std::size_t vertices) -> Spg;
}
