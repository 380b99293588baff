#include <spg/document.hpp>
#include <spg/verify.hpp>

#include <json.hpp>

#include <algorithm>

using nlohmann::json;

namespace spg
{
    ParseError::ParseError(std::size_t line, std::string field, const std::string & message) :
        Error("parse error" + (line != 0 ? " at line " + std::to_string(line) : std::string{}) +
                (field.empty() ? std::string{} : " in '" + field + "'") + ": " + message),
        line(line),
        field(std::move(field))
    {
    }

    namespace
    {
        auto canonical(Spg spg) -> Spg
        {
            for (auto & v : spg.vertices)
                std::sort(v.begin(), v.end());
            for (auto & e : spg.edges)
                e = Edge::between(e.u, e.v);
            return spg;
        }

        auto write_set(std::string & out, const FacetSet & set) -> void
        {
            out += '[';
            for (std::size_t i = 0; i < set.size(); ++i) {
                if (i != 0)
                    out += ',';
                out += std::to_string(set[i]);
            }
            out += ']';
        }

        template <typename T>
        auto write_ids(std::string & out, const std::vector<T> & ids) -> void
        {
            out += '[';
            for (std::size_t i = 0; i < ids.size(); ++i) {
                if (i != 0)
                    out += ',';
                out += std::to_string(ids[i]);
            }
            out += ']';
        }

        // one item per line between the brackets
        template <typename Items, typename Write>
        auto write_block(std::string & out, std::string_view indent, const Items & items, Write write) -> void
        {
            if (items.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < items.size(); ++i) {
                out += indent;
                out += "  ";
                write(items[i]);
                if (i + 1 != items.size())
                    out += ',';
                out += '\n';
            }
            out += indent;
            out += ']';
        }

        auto line_of(std::string_view text, std::size_t byte) -> std::size_t
        {
            byte = std::min(byte, text.size());
            return std::size_t(std::count(text.begin(), text.begin() + std::ptrdiff_t(byte), '\n')) + 1;
        }

        struct Reader
        {
            auto fail(const std::string & field, const std::string & message) const -> ParseError
            {
                return ParseError(0, field, message);
            }

            auto member(const json & object, const std::string & field, const std::string & key) const -> const json &
            {
                if (! object.is_object())
                    throw fail(field, "expected an object");
                auto it = object.find(key);
                if (it == object.end())
                    throw fail(field.empty() ? key : field + "." + key, "missing field");
                return *it;
            }

            auto natural(const json & value, const std::string & field) const -> std::size_t
            {
                if (! value.is_number_unsigned())
                    throw fail(field, "expected a non-negative integer");
                return value.get<std::size_t>();
            }

            auto array(const json & value, const std::string & field) const -> const json::array_t &
            {
                if (! value.is_array())
                    throw fail(field, "expected an array");
                return value.get_ref<const json::array_t &>();
            }

            auto ids(const json & value, const std::string & field) const -> std::vector<std::size_t>
            {
                std::vector<std::size_t> out;
                auto & items = array(value, field);
                for (std::size_t i = 0; i < items.size(); ++i)
                    out.push_back(natural(items[i], field + "[" + std::to_string(i) + "]"));
                return out;
            }

            auto set(const json & value, const std::string & field) const -> FacetSet
            {
                std::vector<SymbolId> elements;
                for (auto x : ids(value, field))
                    elements.push_back(SymbolId(x));
                try {
                    return FacetSet{std::move(elements)};
                }
                catch (const InvalidArgument & e) {
                    throw fail(field, e.what());
                }
            }
        };
    }

    auto to_document(const Spg & spg) -> SpgDocument
    {
        return SpgDocument{canonical(spg), std::nullopt, std::nullopt, std::nullopt};
    }

    auto to_document(const Spindle & spindle) -> SpgDocument
    {
        auto doc = to_document(spindle.spg());
        doc.apices = std::pair{spindle.apex1(), spindle.apex2()};
        return doc;
    }

    auto to_document(const TransformResult & result) -> SpgDocument
    {
        auto doc = to_document(result.spg);
        doc.vertex_map = result.vertex_map;
        doc.edge_paths = result.edge_paths;
        return doc;
    }

    auto serialize(const SpgDocument & document) -> std::string
    {
        auto & spg = document.spg;
        std::string out = "{\n";
        out += "  \"format_version\": " + std::to_string(format_version) + ",\n";
        out += "  \"symbols\": [";
        for (std::size_t i = 0; i < spg.symbols.size(); ++i) {
            if (i != 0)
                out += ',';
            out += json(spg.symbols.name(SymbolId(i))).dump();
        }
        out += "],\n";
        out += "  \"dimension\": " + std::to_string(spg.dimension) + ",\n";
        out += "  \"flags\": {\"is_restriction\": " + std::string(spg.is_restriction ? "true" : "false") + "},\n";

        out += "  \"vertices\": ";
        write_block(out, "  ", spg.vertices, [&](const Vertex & v) {
            auto sets = v;
            std::sort(sets.begin(), sets.end());
            out += '[';
            for (std::size_t i = 0; i < sets.size(); ++i) {
                if (i != 0)
                    out += ',';
                write_set(out, sets[i]);
            }
            out += ']';
        });
        out += ",\n  \"edges\": ";
        write_block(out, "  ", spg.edges, [&](const Edge & e) {
            auto c = Edge::between(e.u, e.v);
            out += "[" + std::to_string(c.u) + "," + std::to_string(c.v) + "]";
        });

        bool annotated = document.apices || document.vertex_map || document.edge_paths;
        if (annotated) {
            out += ",\n  \"annotations\": {";
            bool first = true;
            auto key = [&](std::string_view name) {
                out += first ? "\n" : ",\n";
                first = false;
                out += "    \"";
                out += name;
                out += "\": ";
            };
            if (document.apices) {
                key("apices");
                out += '[';
                write_set(out, document.apices->first);
                out += ',';
                write_set(out, document.apices->second);
                out += ']';
            }
            if (document.vertex_map) {
                key("vertex_map");
                write_ids(out, *document.vertex_map);
            }
            if (document.edge_paths) {
                key("edge_paths");
                write_block(out, "    ", *document.edge_paths, [&](const std::vector<VertexId> & path) { write_ids(out, path); });
            }
            out += "\n  }";
        }
        out += "\n}\n";
        return out;
    }

    auto parse_document(std::string_view text) -> SpgDocument
    {
        json root;
        try {
            root = json::parse(text.begin(), text.end());
        }
        catch (const json::parse_error & e) {
            throw ParseError(line_of(text, e.byte == 0 ? 0 : e.byte - 1), "", e.what());
        }

        Reader in;
        if (! root.is_object())
            throw in.fail("", "document must be an object");

        auto version = in.natural(in.member(root, "", "format_version"), "format_version");
        if (version != std::size_t(format_version))
            throw in.fail("format_version", "unsupported format version " + std::to_string(version) + ", expected " +
                    std::to_string(format_version));

        SpgDocument doc;
        std::vector<std::string> names;
        auto & labels = in.array(in.member(root, "", "symbols"), "symbols");
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (! labels[i].is_string())
                throw in.fail("symbols[" + std::to_string(i) + "]", "expected a string");
            names.push_back(labels[i].get<std::string>());
        }
        try {
            doc.spg.symbols = SymbolTable{std::move(names)};
        }
        catch (const InvalidArgument & e) {
            throw in.fail("symbols", e.what());
        }

        doc.spg.dimension = in.natural(in.member(root, "", "dimension"), "dimension");

        if (auto it = root.find("flags"); it != root.end()) {
            if (auto r = it->find("is_restriction"); it->is_object() && r != it->end()) {
                if (! r->is_boolean())
                    throw in.fail("flags.is_restriction", "expected a boolean");
                doc.spg.is_restriction = r->get<bool>();
            }
        }

        auto & vertices = in.array(in.member(root, "", "vertices"), "vertices");
        for (std::size_t v = 0; v < vertices.size(); ++v) {
            auto field = "vertices[" + std::to_string(v) + "]";
            Vertex vertex;
            auto & sets = in.array(vertices[v], field);
            for (std::size_t k = 0; k < sets.size(); ++k)
                vertex.push_back(in.set(sets[k], field + "[" + std::to_string(k) + "]"));
            std::sort(vertex.begin(), vertex.end());
            doc.spg.vertices.push_back(std::move(vertex));
        }

        auto & edges = in.array(in.member(root, "", "edges"), "edges");
        for (std::size_t e = 0; e < edges.size(); ++e) {
            auto field = "edges[" + std::to_string(e) + "]";
            auto ends = in.ids(edges[e], field);
            if (ends.size() != 2)
                throw in.fail(field, "an edge has exactly two endpoints");
            doc.spg.edges.push_back(Edge::between(ends[0], ends[1]));
        }

        auto report = validate(doc.spg);
        if (! report.holds())
            throw in.fail(report.witnesses.front().kind == Property::Connectivity ? "edges" : "vertices",
                    std::string{to_string(report.witnesses.front().kind)} + " violation: " +
                        report.witnesses.front().description);

        if (auto it = root.find("annotations"); it != root.end()) {
            auto & notes = *it;
            if (! notes.is_object())
                throw in.fail("annotations", "expected an object");
            auto vertex_count = doc.spg.vertices.size();
            auto check_vertex = [&](std::size_t v, const std::string & field) {
                if (v >= vertex_count)
                    throw in.fail(field, "vertex index " + std::to_string(v) + " out of range");
            };

            if (auto a = notes.find("apices"); a != notes.end()) {
                auto & pair = in.array(*a, "annotations.apices");
                if (pair.size() != 2)
                    throw in.fail("annotations.apices", "expected two apices");
                doc.apices = std::pair{in.set(pair[0], "annotations.apices[0]"), in.set(pair[1], "annotations.apices[1]")};
                try {
                    Spindle{doc.spg, doc.apices->first, doc.apices->second};
                }
                catch (const InvalidArgument & e) {
                    throw in.fail("annotations.apices", e.what());
                }
            }
            if (auto m = notes.find("vertex_map"); m != notes.end()) {
                auto ids = in.ids(*m, "annotations.vertex_map");
                for (std::size_t i = 0; i < ids.size(); ++i)
                    check_vertex(ids[i], "annotations.vertex_map[" + std::to_string(i) + "]");
                doc.vertex_map = std::vector<VertexId>(ids.begin(), ids.end());
            }
            if (auto p = notes.find("edge_paths"); p != notes.end()) {
                std::vector<std::vector<VertexId>> paths;
                auto & items = in.array(*p, "annotations.edge_paths");
                for (std::size_t i = 0; i < items.size(); ++i) {
                    auto field = "annotations.edge_paths[" + std::to_string(i) + "]";
                    auto ids = in.ids(items[i], field);
                    for (auto v : ids)
                        check_vertex(v, field);
                    paths.emplace_back(ids.begin(), ids.end());
                }
                doc.edge_paths = std::move(paths);
            }
        }
        return doc;
    }

    auto as_spindle(const SpgDocument & document) -> Spindle
    {
        if (! document.apices)
            throw InvalidArgument("document has no apices annotation");
        return Spindle{document.spg, document.apices->first, document.apices->second};
    }
}
