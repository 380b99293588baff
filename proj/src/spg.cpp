#include <spg/spg.hpp>

#include <algorithm>
#include <deque>
#include <iterator>

namespace spg
{
    SymbolTable::SymbolTable(std::vector<std::string> names) :
        _names(std::move(names))
    {
        _index.reserve(_names.size());
        for (SymbolId i = 0; i < _names.size(); ++i) {
            if (_names[i].empty())
                throw InvalidArgument("empty symbol label at index " + std::to_string(i));
            if (! _index.emplace(_names[i], i).second)
                throw InvalidArgument("duplicate symbol label '" + _names[i] + "'");
        }
    }

    auto SymbolTable::letters(std::size_t count) -> SymbolTable
    {
        std::vector<std::string> names;
        names.reserve(count);
        for (std::size_t i = 0; i < count; ++i)
            names.push_back(i < 26 ? std::string(1, char('a' + i)) : "s" + std::to_string(i));
        return SymbolTable{std::move(names)};
    }

    auto SymbolTable::find(std::string_view label) const -> std::optional<SymbolId>
    {
        auto it = _index.find(std::string{label});
        if (it == _index.end())
            return std::nullopt;
        return it->second;
    }

    auto SymbolTable::at(std::string_view label) const -> SymbolId
    {
        if (auto id = find(label))
            return *id;
        throw InvalidArgument("unknown symbol '" + std::string{label} + "'");
    }

    FacetSet::FacetSet(std::initializer_list<SymbolId> elements) :
        FacetSet(std::vector<SymbolId>(elements))
    {
    }

    FacetSet::FacetSet(std::vector<SymbolId> elements) :
        _elements(std::move(elements))
    {
        std::sort(_elements.begin(), _elements.end());
        if (std::adjacent_find(_elements.begin(), _elements.end()) != _elements.end())
            throw InvalidArgument("repeated symbol in set");
    }

    auto FacetSet::contains(SymbolId symbol) const -> bool
    {
        return std::binary_search(_elements.begin(), _elements.end(), symbol);
    }

    auto FacetSet::includes(const FacetSet & subset) const -> bool
    {
        return std::includes(_elements.begin(), _elements.end(), subset.begin(), subset.end());
    }

    auto intersection_size(const FacetSet & a, const FacetSet & b) -> std::size_t
    {
        std::size_t count = 0;
        auto i = a.begin(), j = b.begin();
        while (i != a.end() && j != b.end()) {
            if (*i < *j)
                ++i;
            else if (*j < *i)
                ++j;
            else {
                ++count;
                ++i;
                ++j;
            }
        }
        return count;
    }

    auto set_difference(const FacetSet & a, const FacetSet & b) -> FacetSet
    {
        std::vector<SymbolId> out;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return FacetSet{std::move(out)};
    }

    auto set_union(const FacetSet & a, const FacetSet & b) -> FacetSet
    {
        std::vector<SymbolId> out;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return FacetSet{std::move(out)};
    }

    auto to_string(const FacetSet & set, const SymbolTable & symbols) -> std::string
    {
        std::string out = "{";
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (i != 0)
                out += ',';
            out += set[i] < symbols.size() ? symbols.name(set[i]) : "#" + std::to_string(set[i]);
        }
        return out + "}";
    }

    auto parse_facet(std::string_view text, const SymbolTable & symbols) -> FacetSet
    {
        if (text.size() >= 2 && text.front() == '{' && text.back() == '}')
            text = text.substr(1, text.size() - 2);

        std::vector<SymbolId> ids;
        while (! text.empty()) {
            auto comma = text.find(',');
            auto label = text.substr(0, comma);
            while (! label.empty() && label.front() == ' ')
                label.remove_prefix(1);
            while (! label.empty() && label.back() == ' ')
                label.remove_suffix(1);
            ids.push_back(symbols.at(label));
            if (comma == std::string_view::npos)
                break;
            text.remove_prefix(comma + 1);
        }
        return FacetSet{std::move(ids)};
    }

    auto singleton_path(SymbolTable symbols, std::span<const FacetSet> sets) -> Spg
    {
        Spg result;
        result.symbols = std::move(symbols);
        result.dimension = sets.empty() ? 0 : sets.front().size();
        for (std::size_t i = 0; i < sets.size(); ++i) {
            result.vertices.push_back({sets[i]});
            if (i > 0)
                result.edges.push_back(Edge{i - 1, i});
        }
        return result;
    }

    auto family(const Spg & spg) -> std::vector<FacetSet>
    {
        std::vector<FacetSet> result;
        for (auto & v : spg.vertices)
            result.insert(result.end(), v.begin(), v.end());
        return result;
    }

    auto adjacency_lists(const Spg & spg) -> std::vector<std::vector<VertexId>>
    {
        std::vector<std::vector<VertexId>> result(spg.vertices.size());
        for (auto & e : spg.edges) {
            if (e.u >= result.size() || e.v >= result.size())
                throw InvalidArgument("edge endpoint out of range");
            result[e.u].push_back(e.v);
            if (e.u != e.v)
                result[e.v].push_back(e.u);
        }
        return result;
    }

    namespace
    {
        auto bfs(const std::vector<std::vector<VertexId>> & adjacent, VertexId source)
            -> std::vector<std::optional<std::size_t>>
        {
            std::vector<std::optional<std::size_t>> dist(adjacent.size());
            std::deque<VertexId> queue{source};
            dist[source] = 0;
            while (! queue.empty()) {
                auto v = queue.front();
                queue.pop_front();
                for (auto w : adjacent[v])
                    if (! dist[w]) {
                        dist[w] = *dist[v] + 1;
                        queue.push_back(w);
                    }
            }
            return dist;
        }
    }

    auto distances_from(const Spg & spg, VertexId source) -> std::vector<std::optional<std::size_t>>
    {
        if (source >= spg.vertices.size())
            throw InvalidArgument("vertex index " + std::to_string(source) + " out of range");
        return bfs(adjacency_lists(spg), source);
    }

    auto graph_distance(const Spg & spg, VertexId from, VertexId to) -> std::size_t
    {
        if (to >= spg.vertices.size())
            throw InvalidArgument("vertex index " + std::to_string(to) + " out of range");
        auto dist = distances_from(spg, from);
        if (! dist[to])
            throw InvalidArgument("vertices " + std::to_string(from) + " and " + std::to_string(to) + " are not connected");
        return *dist[to];
    }

    auto max_degree(const Spg & spg) -> std::size_t
    {
        std::size_t best = 0;
        for (auto & list : adjacency_lists(spg))
            best = std::max(best, list.size());
        return best;
    }

    auto connected_components(const Spg & spg) -> std::vector<std::size_t>
    {
        auto adjacent = adjacency_lists(spg);
        constexpr auto unset = std::size_t(-1);
        std::vector<std::size_t> label(adjacent.size(), unset);
        std::size_t next = 0;
        for (VertexId s = 0; s < adjacent.size(); ++s) {
            if (label[s] != unset)
                continue;
            std::vector<VertexId> stack{s};
            label[s] = next;
            while (! stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                for (auto w : adjacent[v])
                    if (label[w] == unset) {
                        label[w] = next;
                        stack.push_back(w);
                    }
            }
            ++next;
        }
        return label;
    }

    auto diameter(const Spg & spg) -> std::optional<std::size_t>
    {
        if (spg.vertices.empty())
            return std::nullopt;
        auto adjacent = adjacency_lists(spg);
        std::size_t best = 0;
        for (VertexId s = 0; s < adjacent.size(); ++s)
            for (auto & d : bfs(adjacent, s)) {
                if (! d)
                    return std::nullopt;
                best = std::max(best, *d);
            }
        return best;
    }

    auto vertex_containing(const Spg & spg, const FacetSet & set) -> std::optional<VertexId>
    {
        for (VertexId v = 0; v < spg.vertices.size(); ++v)
            if (std::find(spg.vertices[v].begin(), spg.vertices[v].end(), set) != spg.vertices[v].end())
                return v;
        return std::nullopt;
    }

    Spindle::Spindle(Spg spg, FacetSet apex1, FacetSet apex2) :
        _spg(std::move(spg)),
        _apex1(std::move(apex1)),
        _apex2(std::move(apex2))
    {
        if (_spg.symbols.size() != 2 * _spg.dimension)
            throw InvalidArgument("a spindle needs exactly 2d symbols");
        if (! vertex_containing(_spg, _apex1) || ! vertex_containing(_spg, _apex2))
            throw InvalidArgument("spindle apices must be members of the family");
        if (set_union(_apex1, _apex2).size() != _spg.symbols.size())
            throw InvalidArgument("spindle apices must cover the symbol set");
    }

    auto Spindle::length() const -> std::size_t
    {
        return graph_distance(_spg, *vertex_containing(_spg, _apex1), *vertex_containing(_spg, _apex2));
    }
}
