#pragma once

#include <spg/spg.hpp>

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spg
{
    enum class Property
    {
        Adjacency,
        StrongAdjacency,
        EndPointCount,
        Singleton,
        DimensionReduction,
        Partition,
        Connectivity,
        Localization
    };

    /// "adjacency", "strong-adjacency", "endpoint-count", ...
    auto to_string(Property property) -> std::string_view;

    /// One violation: the sets and vertices involved, plus a readable line.
    struct Witness
    {
        Property kind;
        std::string description;
        std::vector<VertexId> vertices;
        std::vector<FacetSet> sets;

        auto operator<=>(const Witness &) const = default;
    };

    struct PropertyReport
    {
        Property property;
        std::vector<Witness> witnesses;

        auto holds() const -> bool { return witnesses.empty(); }
    };

    /// Thrown by verifiers given an input that fails validate().
    class InvalidSpg : public Error
    {
    public:
        explicit InvalidSpg(PropertyReport report);

        PropertyReport report;
    };

    /// Structural well-formedness: dimension in range, uniform set size,
    /// sets partitioned across non-empty vertices, simple graph, and
    /// connectivity (waived for restrictions). Violations are reported,
    /// never thrown.
    auto validate(const Spg & spg) -> PropertyReport;

    /// Throws InvalidSpg if validate() reports anything.
    auto require_valid(const Spg & spg) -> void;

    /// A (d-1)-subset shared by at least two members of the family.
    struct Ridge
    {
        FacetSet face;
        std::vector<std::size_t> members;   // indices into the family, ascending

        auto operator<=>(const Ridge &) const = default;
    };

    /// All ridges of a uniform family, found by hashing each member's
    /// (d-1)-subsets and confirming exact equality within hash buckets.
    /// Two members share a ridge iff they intersect in exactly d-1 symbols.
    /// Sorted by face.
    auto ridge_index(std::span<const FacetSet> family) -> std::vector<Ridge>;

    auto check_adjacency(const Spg & spg) -> PropertyReport;

    /// Adjacency plus a (d-1)-intersecting pair across every edge.
    auto check_strong_adjacency(const Spg & spg) -> PropertyReport;

    auto check_endpoint_count(const Spg & spg) -> PropertyReport;

    auto check_singleton(const Spg & spg) -> PropertyReport;

    /// G|F: sets containing F with F removed, over the symbols outside F.
    /// nullopt when no set contains F. Throws InvalidArgument if |F| > d or
    /// F names unknown symbols.
    auto restrict(const Spg & spg, const FacetSet & face) -> std::optional<Spg>;

    struct DimensionReductionOptions
    {
        unsigned long long budget = 10'000'000;
    };

    /// Number of restriction checks check_dimension_reduction would make.
    auto dimension_reduction_cost(const Spg & spg) -> unsigned long long;

    /// Checks every restriction by a subset of some member of the family.
    /// Throws BudgetExceeded before doing any work if the enumeration is
    /// larger than the budget.
    auto check_dimension_reduction(const Spg & spg, const DimensionReductionOptions & options = {}) -> PropertyReport;
}
