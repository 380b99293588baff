#include <spg/verify.hpp>
#include <spg/random.hpp>

#include "bits.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace spg
{
    auto to_string(Property property) -> std::string_view
    {
        switch (property) {
        case Property::Adjacency: return "adjacency";
        case Property::StrongAdjacency: return "strong-adjacency";
        case Property::EndPointCount: return "endpoint-count";
        case Property::Singleton: return "singleton";
        case Property::DimensionReduction: return "dimension-reduction";
        case Property::Partition: return "partition";
        case Property::Connectivity: return "connectivity";
        case Property::Localization: return "localization";
        }
        return "unknown";
    }

    InvalidSpg::InvalidSpg(PropertyReport r) :
        Error("invalid subset partition graph: " +
                (r.witnesses.empty() ? std::string{"unspecified"} : r.witnesses.front().description)),
        report(std::move(r))
    {
    }

    namespace
    {
        auto vertex_of_sets(const Spg & spg) -> std::vector<VertexId>
        {
            std::vector<VertexId> result;
            for (VertexId v = 0; v < spg.vertices.size(); ++v)
                result.insert(result.end(), spg.vertices[v].size(), v);
            return result;
        }

        auto edge_lookup(const Spg & spg) -> std::set<Edge>
        {
            std::set<Edge> result;
            for (auto & e : spg.edges)
                result.insert(Edge::between(e.u, e.v));
            return result;
        }

        auto label(const Spg & spg, const FacetSet & set) -> std::string
        {
            return to_string(set, spg.symbols);
        }

        auto sorted(std::vector<Witness> witnesses) -> std::vector<Witness>
        {
            std::sort(witnesses.begin(), witnesses.end());
            return witnesses;
        }

        // A without its p-th element equals B without its q-th element.
        auto equal_without(const FacetSet & a, std::size_t p, const FacetSet & b, std::size_t q) -> bool
        {
            if (a.size() != b.size())
                return false;
            std::size_t i = 0, j = 0;
            while (i < a.size() || j < b.size()) {
                if (i == p) {
                    ++i;
                    continue;
                }
                if (j == q) {
                    ++j;
                    continue;
                }
                if (i >= a.size() || j >= b.size() || a[i] != b[j])
                    return false;
                ++i;
                ++j;
            }
            return true;
        }
    }

    auto validate(const Spg & spg) -> PropertyReport
    {
        PropertyReport report{Property::Partition, {}};
        auto fail = [&](Property kind, std::string text, std::vector<VertexId> vertices = {}, std::vector<FacetSet> sets = {}) {
            report.witnesses.push_back(Witness{kind, std::move(text), std::move(vertices), std::move(sets)});
        };

        const auto n = spg.symbols.size();
        const auto d = spg.dimension;
        if ((d < 1 && ! spg.is_restriction) || d > n)
            fail(Property::Partition, "dimension " + std::to_string(d) + " outside [1, " + std::to_string(n) + "]");

        std::vector<std::pair<FacetSet, VertexId>> all;
        for (VertexId v = 0; v < spg.vertices.size(); ++v) {
            if (spg.vertices[v].empty())
                fail(Property::Partition, "vertex " + std::to_string(v) + " is empty", {v});
            for (auto & set : spg.vertices[v]) {
                if (set.size() != d)
                    fail(Property::Partition, "set " + label(spg, set) + " in vertex " + std::to_string(v) +
                            " has size " + std::to_string(set.size()) + ", expected " + std::to_string(d), {v}, {set});
                if (! set.empty() && set.elements().back() >= n)
                    fail(Property::Partition, "set in vertex " + std::to_string(v) + " uses an unknown symbol", {v}, {set});
                all.emplace_back(set, v);
            }
        }

        std::sort(all.begin(), all.end());
        for (std::size_t i = 0; i < all.size();) {
            auto j = i + 1;
            while (j < all.size() && all[j].first == all[i].first)
                ++j;
            if (j - i > 1) {
                std::vector<VertexId> where;
                for (auto k = i; k < j; ++k)
                    where.push_back(all[k].second);
                std::string text = "duplicate set " + label(spg, all[i].first) + " in vertices";
                for (auto w : where)
                    text += " " + std::to_string(w);
                fail(Property::Partition, std::move(text), std::move(where), {all[i].first});
            }
            i = j;
        }

        bool edges_ok = true;
        std::set<Edge> seen;
        for (auto & e : spg.edges) {
            auto tag = "edge " + std::to_string(e.u) + "-" + std::to_string(e.v);
            if (e.u >= spg.vertices.size() || e.v >= spg.vertices.size()) {
                fail(Property::Partition, tag + " has an endpoint out of range");
                edges_ok = false;
            }
            else if (e.u == e.v)
                fail(Property::Partition, tag + " is a self-loop", {e.u});
            else if (! seen.insert(Edge::between(e.u, e.v)).second)
                fail(Property::Partition, tag + " is a parallel edge", {e.u, e.v});
        }

        if (! spg.is_restriction) {
            if (spg.vertices.empty())
                fail(Property::Connectivity, "graph has no vertices");
            else if (edges_ok) {
                auto component = connected_components(spg);
                auto count = *std::max_element(component.begin(), component.end()) + 1;
                if (count > 1) {
                    std::vector<VertexId> representatives;
                    for (std::size_t c = 0; c < count; ++c)
                        representatives.push_back(std::size_t(std::find(component.begin(), component.end(), c) - component.begin()));
                    fail(Property::Connectivity, "graph is disconnected: " + std::to_string(count) + " components",
                            std::move(representatives));
                }
            }
        }

        report.witnesses = sorted(std::move(report.witnesses));
        return report;
    }

    auto require_valid(const Spg & spg) -> void
    {
        auto report = validate(spg);
        if (! report.holds())
            throw InvalidSpg(std::move(report));
    }

    auto ridge_index(std::span<const FacetSet> family) -> std::vector<Ridge>
    {
        struct Entry
        {
            std::uint64_t key;
            std::size_t member;
            std::size_t removed;
        };

        std::vector<Entry> entries;
        for (std::size_t i = 0; i < family.size(); ++i) {
            std::uint64_t total = 0;
            for (auto x : family[i])
                total += splitmix64(x);
            for (std::size_t p = 0; p < family[i].size(); ++p)
                entries.push_back(Entry{total - splitmix64(family[i][p]), i, p});
        }
        std::sort(entries.begin(), entries.end(), [](const Entry & a, const Entry & b) {
            return std::tie(a.key, a.member, a.removed) < std::tie(b.key, b.member, b.removed);
        });

        std::vector<Ridge> result;
        for (std::size_t i = 0; i < entries.size();) {
            auto j = i + 1;
            while (j < entries.size() && entries[j].key == entries[i].key)
                ++j;
            if (j - i > 1) {
                // split the bucket into exact classes; hash collisions land in separate classes
                std::vector<std::vector<const Entry *>> classes;
                for (auto k = i; k < j; ++k) {
                    auto & e = entries[k];
                    auto it = std::find_if(classes.begin(), classes.end(), [&](auto & c) {
                        return equal_without(family[c.front()->member], c.front()->removed, family[e.member], e.removed);
                    });
                    if (it == classes.end())
                        classes.push_back({&e});
                    else
                        it->push_back(&e);
                }
                for (auto & c : classes) {
                    if (c.size() < 2)
                        continue;
                    Ridge ridge;
                    auto & first = family[c.front()->member];
                    std::vector<SymbolId> face;
                    for (std::size_t p = 0; p < first.size(); ++p)
                        if (p != c.front()->removed)
                            face.push_back(first[p]);
                    ridge.face = FacetSet{std::move(face)};
                    for (auto * e : c)
                        ridge.members.push_back(e->member);
                    std::sort(ridge.members.begin(), ridge.members.end());
                    result.push_back(std::move(ridge));
                }
            }
            i = j;
        }
        std::sort(result.begin(), result.end());
        return result;
    }

    namespace
    {
        struct AdjacencyScan
        {
            std::vector<Witness> violations;
            std::set<Edge> witnessed_edges;
        };

        auto scan_adjacency(const Spg & spg) -> AdjacencyScan
        {
            AdjacencyScan scan;
            auto sets = family(spg);
            auto owner = vertex_of_sets(spg);
            auto edges = edge_lookup(spg);
            for (auto & ridge : ridge_index(sets))
                for (std::size_t x = 0; x < ridge.members.size(); ++x)
                    for (std::size_t y = x + 1; y < ridge.members.size(); ++y) {
                        auto i = ridge.members[x], j = ridge.members[y];
                        auto u = owner[i], v = owner[j];
                        if (u == v)
                            continue;
                        auto e = Edge::between(u, v);
                        if (edges.contains(e))
                            scan.witnessed_edges.insert(e);
                        else
                            scan.violations.push_back(Witness{Property::Adjacency,
                                    label(spg, sets[i]) + " and " + label(spg, sets[j]) + " share " +
                                        std::to_string(spg.dimension - 1) + " symbols but vertices " + std::to_string(u) +
                                        " and " + std::to_string(v) + " are not adjacent",
                                    {u, v}, {sets[i], sets[j]}});
                    }
            return scan;
        }
    }

    auto check_adjacency(const Spg & spg) -> PropertyReport
    {
        require_valid(spg);
        return PropertyReport{Property::Adjacency, sorted(scan_adjacency(spg).violations)};
    }

    auto check_strong_adjacency(const Spg & spg) -> PropertyReport
    {
        require_valid(spg);
        auto scan = scan_adjacency(spg);
        auto witnesses = std::move(scan.violations);
        for (auto & e : spg.edges)
            if (! scan.witnessed_edges.contains(Edge::between(e.u, e.v)))
                witnesses.push_back(Witness{Property::StrongAdjacency,
                        "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " has no pair of sets sharing " +
                            std::to_string(spg.dimension - 1) + " symbols",
                        {e.u, e.v}, {}});
        return PropertyReport{Property::StrongAdjacency, sorted(std::move(witnesses))};
    }

    auto check_endpoint_count(const Spg & spg) -> PropertyReport
    {
        require_valid(spg);
        auto sets = family(spg);
        auto owner = vertex_of_sets(spg);
        PropertyReport report{Property::EndPointCount, {}};
        for (auto & ridge : ridge_index(sets)) {
            if (ridge.members.size() <= 2)
                continue;
            Witness w{Property::EndPointCount,
                to_string(ridge.face, spg.symbols) + " is contained in " + std::to_string(ridge.members.size()) + " sets",
                {}, {ridge.face}};
            for (auto m : ridge.members) {
                w.sets.push_back(sets[m]);
                w.vertices.push_back(owner[m]);
            }
            report.witnesses.push_back(std::move(w));
        }
        report.witnesses = sorted(std::move(report.witnesses));
        return report;
    }

    auto check_singleton(const Spg & spg) -> PropertyReport
    {
        require_valid(spg);
        PropertyReport report{Property::Singleton, {}};
        for (VertexId v = 0; v < spg.vertices.size(); ++v)
            if (spg.vertices[v].size() != 1)
                report.witnesses.push_back(Witness{Property::Singleton,
                        "vertex " + std::to_string(v) + " holds " + std::to_string(spg.vertices[v].size()) + " sets",
                        {v}, spg.vertices[v]});
        return report;
    }

    auto restrict(const Spg & spg, const FacetSet & face) -> std::optional<Spg>
    {
        if (face.size() > spg.dimension)
            throw InvalidArgument("restriction face has " + std::to_string(face.size()) + " symbols, dimension is " +
                    std::to_string(spg.dimension));
        if (! face.empty() && face.elements().back() >= spg.symbols.size())
            throw InvalidArgument("restriction face uses an unknown symbol");

        constexpr auto dropped = SymbolId(-1);
        std::vector<SymbolId> renumber(spg.symbols.size(), dropped);
        std::vector<std::string> names;
        for (SymbolId x = 0; x < spg.symbols.size(); ++x)
            if (! face.contains(x)) {
                renumber[x] = SymbolId(names.size());
                names.push_back(spg.symbols.name(x));
            }

        Spg result;
        result.symbols = SymbolTable{std::move(names)};
        result.dimension = spg.dimension - face.size();
        result.is_restriction = true;

        constexpr auto absent = VertexId(-1);
        std::vector<VertexId> new_index(spg.vertices.size(), absent);
        for (VertexId v = 0; v < spg.vertices.size(); ++v) {
            Vertex restricted;
            for (auto & set : spg.vertices[v])
                if (set.includes(face)) {
                    std::vector<SymbolId> rest;
                    for (auto x : set)
                        if (! face.contains(x))
                            rest.push_back(renumber[x]);
                    restricted.push_back(FacetSet{std::move(rest)});
                }
            if (! restricted.empty()) {
                new_index[v] = result.vertices.size();
                std::sort(restricted.begin(), restricted.end());
                result.vertices.push_back(std::move(restricted));
            }
        }
        if (result.vertices.empty())
            return std::nullopt;

        for (auto & e : spg.edges)
            if (new_index[e.u] != absent && new_index[e.v] != absent)
                result.edges.push_back(Edge::between(new_index[e.u], new_index[e.v]));
        return result;
    }

    auto dimension_reduction_cost(const Spg & spg) -> unsigned long long
    {
        constexpr auto cap = std::numeric_limits<unsigned long long>::max();
        auto members = static_cast<unsigned long long>(family(spg).size());
        if (spg.dimension >= 63)
            return members == 0 ? 0 : cap;
        auto per_set = 1ULL << spg.dimension;
        if (members != 0 && per_set > cap / members)
            return cap;
        return members * per_set;
    }

    auto check_dimension_reduction(const Spg & spg, const DimensionReductionOptions & options) -> PropertyReport
    {
        require_valid(spg);
        auto cost = dimension_reduction_cost(spg);
        if (cost > options.budget)
            throw BudgetExceeded("dimension reduction enumeration refused", cost, options.budget);

        auto sets = family(spg);
        auto owner = vertex_of_sets(spg);
        auto adjacent = adjacency_lists(spg);

        std::vector<detail::Bits> holders(spg.symbols.size(), detail::Bits(sets.size()));
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (auto x : sets[i])
                holders[x].set(i);

        std::vector<char> active(spg.vertices.size(), 0);
        std::vector<char> reached(spg.vertices.size(), 0);
        auto connected = [&](const detail::Bits & containing) {
            std::vector<VertexId> vs;
            containing.for_each([&](std::size_t i) {
                if (! active[owner[i]]) {
                    active[owner[i]] = 1;
                    vs.push_back(owner[i]);
                }
            });
            std::size_t count = 0;
            if (! vs.empty()) {
                std::vector<VertexId> stack{vs.front()};
                reached[vs.front()] = 1;
                while (! stack.empty()) {
                    auto v = stack.back();
                    stack.pop_back();
                    ++count;
                    for (auto w : adjacent[v])
                        if (active[w] && ! reached[w]) {
                            reached[w] = 1;
                            stack.push_back(w);
                        }
                }
            }
            for (auto v : vs)
                active[v] = reached[v] = 0;
            return count == vs.size();
        };

        std::set<FacetSet> disconnecting;
        std::vector<SymbolId> face;
        detail::Bits everything(sets.size());
        for (std::size_t i = 0; i < sets.size(); ++i)
            everything.set(i);

        // depth-first over subsets of each member; a face is judged only from
        // the lowest-indexed member containing it
        auto visit = [&](auto & self, std::size_t member, std::size_t next, const detail::Bits & containing) -> void {
            if (containing.first() == member && ! connected(containing))
                disconnecting.insert(FacetSet{face});
            for (auto p = next; p < sets[member].size(); ++p) {
                auto x = sets[member][p];
                auto narrowed = containing;
                narrowed &= holders[x];
                face.push_back(x);
                self(self, member, p + 1, narrowed);
                face.pop_back();
            }
        };
        for (std::size_t i = 0; i < sets.size(); ++i)
            visit(visit, i, 0, everything);

        PropertyReport report{Property::DimensionReduction, {}};
        for (auto & f : disconnecting) {
            auto r = restrict(spg, f);
            std::size_t components = 0;
            if (r) {
                auto label = connected_components(*r);
                components = *std::max_element(label.begin(), label.end()) + 1;
            }
            report.witnesses.push_back(Witness{Property::DimensionReduction,
                    "restriction to " + to_string(f, spg.symbols) + " has " + std::to_string(components) + " components",
                    {}, {f}});
        }
        return report;
    }
}
