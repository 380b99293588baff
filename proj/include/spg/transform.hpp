#pragma once

#include <spg/random.hpp>
#include <spg/spg.hpp>
#include <spg/verify.hpp>

#include <compare>
#include <cstdint>
#include <vector>

namespace spg
{
    // Lifted symbol (x, row) of S x [r] has id row * |S| + x, rows 0-based.
    // Labels render rows 1-based: "a@1", ..., "a@r".

    auto lifted_symbol(SymbolId base, std::uint32_t row, std::size_t base_count) -> SymbolId;
    auto lift_symbols(const SymbolTable & base, std::uint32_t r) -> SymbolTable;

    /// A x [r].
    auto lift_set(const FacetSet & set, std::uint32_t r, std::size_t base_count) -> FacetSet;

    /// Base symbols present in one row of a lifted set.
    auto row_of(const FacetSet & lifted, std::uint32_t row, std::size_t base_count) -> FacetSet;

    /// Order in which the rows of an edge are rewritten: segment j rewrites
    /// row perm[j]. Rows and segments are 0-based.
    using RowPermutation = std::vector<std::uint32_t>;

    auto is_row_permutation(const RowPermutation & perm, std::uint32_t r) -> bool;

    /// Segment order read from the other endpoint of the edge.
    auto reversed(const RowPermutation & perm) -> RowPermutation;

    /// One row permutation per edge of the template, indexed by edge id and
    /// read from the lower-indexed endpoint of the edge.
    struct PermutationAssignment
    {
        std::vector<RowPermutation> per_edge;

        auto operator==(const PermutationAssignment &) const -> bool = default;
    };

    enum class Strategy
    {
        Resample,
        Reject
    };

    struct TransformConfig
    {
        std::uint32_t r = 2;
        std::uint64_t seed = 0;
        std::size_t max_rounds = 1000;
        Strategy strategy = Strategy::Resample;
    };

    /// Two edges meeting at `vertex` whose subdivisions hold sets sharing at
    /// least rd-1 symbols. The witnesses exclude the lifted `vertex` itself.
    struct BadEvent
    {
        VertexId vertex;
        EdgeId edge1, edge2;
        FacetSet witness1, witness2;

        auto operator<=>(const BadEvent &) const = default;
    };

    struct ResampleRound
    {
        std::size_t round;
        std::vector<BadEvent> events;
        /// Edges redrawn after this round.
        std::vector<EdgeId> resampled;

        auto operator==(const ResampleRound &) const -> bool = default;
    };

    struct TransformResult
    {
        Spg spg;
        std::uint32_t r = 0;
        /// Template vertex -> vertex of spg holding its lifted set.
        std::vector<VertexId> vertex_map;
        /// Template edge -> vertices of its subdivision path, from the lower
        /// endpoint to the higher, both endpoints included.
        std::vector<std::vector<VertexId>> edge_paths;
        std::size_t rounds_used = 0;
        std::vector<ResampleRound> resample_log;
        PermutationAssignment permutations;

        auto operator==(const TransformResult &) const -> bool = default;
    };

    /// The round budget ran out with bad events still present.
    class ResamplingExhausted : public Error
    {
    public:
        ResamplingExhausted(std::size_t rounds, std::vector<BadEvent> remaining);

        std::size_t rounds;
        std::vector<BadEvent> remaining;
    };

    /// ceil(16 e delta); 2 for a graph without edges.
    auto min_multiplier(std::size_t max_degree) -> std::uint32_t;

    /// Local lemma condition (4 delta - 5) (4 / r) e < 1.
    auto local_lemma_condition(std::size_t max_degree, std::uint32_t r) -> bool;

    /// Replaces every {A} by {A x [r]}. Requires a singleton template and r >= 2.
    auto lift_product(const Spg & spg, std::uint32_t r) -> Spg;

    /// Sets from A x [r] to B x [r], inclusive, rewriting one row per segment
    /// in the order given by `perm`. Within a row, elements of A \ B leave in
    /// ascending order and are replaced by elements of B \ A in ascending
    /// order. Length r (d - |A & B|) + 1.
    auto subdivision_path(const FacetSet & from, const FacetSet & to, std::uint32_t r, const RowPermutation & perm,
            std::size_t base_count) -> std::vector<FacetSet>;

    /// Deterministic assembly of the subdivided graph. The template's
    /// vertices keep their indices; interior vertices follow in edge order.
    auto build_subdivision(const Spg & spg, std::uint32_t r, const PermutationAssignment & perms) -> TransformResult;

    /// Every bad event of `result`, sorted by (vertex, edge1, edge2).
    auto find_bad_events(const TransformResult & result, const Spg & original) -> std::vector<BadEvent>;

    /// One uniformly random permutation per edge, drawn in edge order.
    auto random_assignment(std::size_t edge_count, std::uint32_t r, Rng & rng) -> PermutationAssignment;

    struct ConstructionAttempt
    {
        bool succeeded = false;
        TransformResult result;
        std::vector<BadEvent> remaining;
    };

    /// The resampling loop without throwing on exhaustion.
    auto attempt_construction(const Spg & spg, const TransformConfig & config) -> ConstructionAttempt;

    /// Draws a permutation per edge and redraws until no bad event remains
    /// (Resample: only edges in a bad event; Reject: every edge). The
    /// result is re-verified for adjacency, strong adjacency, end-point
    /// count, and singleton. Throws ResamplingExhausted after max_rounds.
    auto construct_with_resampling(const Spg & spg, const TransformConfig & config) -> TransformResult;

    struct BadEventEstimate
    {
        std::size_t trials = 0;
        std::size_t occurrences = 0;
        double frequency = 0.0;
        /// 4 / r
        double bound = 0.0;
    };

    /// Monte-Carlo frequency of the bad event at the centre of the star
    /// center - leaf1, center - leaf2.
    auto estimate_bad_event_probability(const FacetSet & center, const FacetSet & leaf1, const FacetSet & leaf2,
            std::uint32_t r, std::size_t trials, std::uint64_t seed) -> BadEventEstimate;

    /// Every pair of constructed sets sharing rd-1 symbols must lie on one
    /// subdivided edge or on two edges with a common endpoint. Requires r >= 4.
    auto check_localization(const TransformResult & result, const Spg & original) -> PropertyReport;
}
