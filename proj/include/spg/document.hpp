#pragma once

#include <spg/spg.hpp>
#include <spg/transform.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spg
{
    inline constexpr int format_version = 1;

    /// Versioned text form of an Spg with optional annotations. The text is
    /// JSON with a fixed key order and one vertex, edge, or path per line.
    struct SpgDocument
    {
        Spg spg;
        std::optional<std::pair<FacetSet, FacetSet>> apices;
        std::optional<std::vector<VertexId>> vertex_map;
        std::optional<std::vector<std::vector<VertexId>>> edge_paths;

        auto operator==(const SpgDocument &) const -> bool = default;
    };

    class ParseError : public Error
    {
    public:
        ParseError(std::size_t line, std::string field, const std::string & message);

        /// 1-based; 0 when the problem is not tied to a line.
        std::size_t line;
        std::string field;
    };

    auto to_document(const Spg & spg) -> SpgDocument;
    auto to_document(const Spindle & spindle) -> SpgDocument;
    auto to_document(const TransformResult & result) -> SpgDocument;

    /// Canonical text: sets sorted, vertex sets sorted within each vertex,
    /// newline-terminated.
    auto serialize(const SpgDocument & document) -> std::string;

    /// Throws ParseError on malformed text, an unsupported format_version,
    /// an invalid graph, or inconsistent annotations.
    auto parse_document(std::string_view text) -> SpgDocument;

    /// Throws InvalidArgument when the document has no apices.
    auto as_spindle(const SpgDocument & document) -> Spindle;
}
