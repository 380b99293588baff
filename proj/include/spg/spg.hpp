#pragma once

#include <spg/error.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace spg
{
    using SymbolId = std::uint32_t;
    using VertexId = std::size_t;
    using EdgeId = std::size_t;

    /// Distinct symbol labels, addressed by dense integer ids.
    class SymbolTable
    {
    public:
        SymbolTable() = default;

        /// Throws InvalidArgument on duplicate or empty labels.
        explicit SymbolTable(std::vector<std::string> names);

        /// Labels "a", "b", ..., "z", then "s26", "s27", ...
        static auto letters(std::size_t count) -> SymbolTable;

        auto size() const -> std::size_t { return _names.size(); }
        auto name(SymbolId id) const -> const std::string & { return _names.at(id); }
        auto names() const -> const std::vector<std::string> & { return _names; }
        auto find(std::string_view label) const -> std::optional<SymbolId>;

        /// Throws InvalidArgument for an unknown label.
        auto at(std::string_view label) const -> SymbolId;

        auto operator==(const SymbolTable & other) const -> bool { return _names == other._names; }

    private:
        std::vector<std::string> _names;
        std::unordered_map<std::string, SymbolId> _index;
    };

    /// A set of symbols, stored sorted and duplicate-free so that equality
    /// and ordering are structural.
    class FacetSet
    {
    public:
        FacetSet() = default;
        FacetSet(std::initializer_list<SymbolId> elements);

        /// Sorts; throws InvalidArgument on repeated elements.
        explicit FacetSet(std::vector<SymbolId> elements);

        auto size() const -> std::size_t { return _elements.size(); }
        auto empty() const -> bool { return _elements.empty(); }
        auto elements() const -> std::span<const SymbolId> { return _elements; }
        auto begin() const { return _elements.begin(); }
        auto end() const { return _elements.end(); }
        auto operator[](std::size_t i) const -> SymbolId { return _elements[i]; }

        auto contains(SymbolId symbol) const -> bool;
        auto includes(const FacetSet & subset) const -> bool;

        auto operator<=>(const FacetSet &) const = default;
        auto operator==(const FacetSet &) const -> bool = default;

    private:
        std::vector<SymbolId> _elements;
    };

    auto intersection_size(const FacetSet & a, const FacetSet & b) -> std::size_t;
    auto set_difference(const FacetSet & a, const FacetSet & b) -> FacetSet;
    auto set_union(const FacetSet & a, const FacetSet & b) -> FacetSet;

    /// "{a,b,c}"
    auto to_string(const FacetSet & set, const SymbolTable & symbols) -> std::string;

    /// Parses "a,b,c" (surrounding braces optional) against a symbol table.
    auto parse_facet(std::string_view text, const SymbolTable & symbols) -> FacetSet;

    /// Undirected edge, stored with u < v.
    struct Edge
    {
        VertexId u = 0;
        VertexId v = 0;

        static auto between(VertexId a, VertexId b) -> Edge { return a < b ? Edge{a, b} : Edge{b, a}; }
        auto other(VertexId w) const -> VertexId { return w == u ? v : u; }

        auto operator<=>(const Edge &) const = default;
    };

    using Vertex = std::vector<FacetSet>;

    /// Subset partition graph: a graph whose vertices partition a family of
    /// d-subsets of the symbol set. Construction does not validate; see
    /// validate() in verify.hpp.
    ///
    /// Restrictions carry is_restriction and are exempt from connectivity.
    struct Spg
    {
        SymbolTable symbols;
        std::size_t dimension = 0;
        std::vector<Vertex> vertices;
        std::vector<Edge> edges;
        bool is_restriction = false;

        auto operator==(const Spg &) const -> bool = default;
    };

    /// Spg whose vertices are all single sets, joined along `sets` in order.
    auto singleton_path(SymbolTable symbols, std::span<const FacetSet> sets) -> Spg;

    /// Every set of the family, in vertex order.
    auto family(const Spg & spg) -> std::vector<FacetSet>;

    auto adjacency_lists(const Spg & spg) -> std::vector<std::vector<VertexId>>;

    /// Breadth-first distances from `source`; unreachable vertices get nullopt.
    auto distances_from(const Spg & spg, VertexId source) -> std::vector<std::optional<std::size_t>>;

    /// Shortest path length. Throws InvalidArgument on bad indices or if
    /// the vertices lie in different components.
    auto graph_distance(const Spg & spg, VertexId from, VertexId to) -> std::size_t;

    auto max_degree(const Spg & spg) -> std::size_t;

    /// Component label per vertex, labels numbered in order of first vertex.
    auto connected_components(const Spg & spg) -> std::vector<std::size_t>;

    /// Largest eccentricity, or nullopt for a disconnected or empty graph.
    auto diameter(const Spg & spg) -> std::optional<std::size_t>;

    /// Index of the vertex holding `set`, if any.
    auto vertex_containing(const Spg & spg, const FacetSet & set) -> std::optional<VertexId>;

    /// Spg on 2d symbols with two apices whose union is every symbol.
    class Spindle
    {
    public:
        /// Throws InvalidArgument unless n = 2d, both apices are members of
        /// the family, and they cover the symbol set.
        Spindle(Spg spg, FacetSet apex1, FacetSet apex2);

        auto spg() const -> const Spg & { return _spg; }
        auto apex1() const -> const FacetSet & { return _apex1; }
        auto apex2() const -> const FacetSet & { return _apex2; }

        /// Graph distance between the vertices holding the two apices.
        auto length() const -> std::size_t;

    private:
        Spg _spg;
        FacetSet _apex1, _apex2;
    };
}
