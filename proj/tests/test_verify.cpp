#include "doctest.h"
#include "oracles.hpp"

#include <spg/verify.hpp>

using namespace spg;

namespace
{
    // a=0 b=1 c=2 d=3 e=4
    auto path_of(std::vector<FacetSet> sets, std::size_t n = 4) -> Spg
    {
        return singleton_path(SymbolTable::letters(n), sets);
    }

    auto ordered_path() -> Spg { return path_of({{0, 1}, {1, 2}, {2, 3}}); }
    auto scrambled_path() -> Spg { return path_of({{0, 1}, {2, 3}, {1, 2}}); }
}

TEST_CASE("validate")
{
    SUBCASE("single vertex is valid")
    {
        CHECK(validate(path_of({{0, 1}})).holds());
    }
    SUBCASE("duplicate set across vertices")
    {
        auto g = path_of({{0, 1}, {0, 1}});
        auto report = validate(g);
        REQUIRE_FALSE(report.holds());
        CHECK(report.witnesses.front().kind == Property::Partition);
        CHECK(report.witnesses.front().sets == std::vector<FacetSet>{{0, 1}});
        CHECK(report.witnesses.front().description.find("{a,b}") != std::string::npos);
    }
    SUBCASE("disconnected")
    {
        auto g = path_of({{0, 1}, {2, 3}});
        g.edges.clear();
        auto report = validate(g);
        REQUIRE(report.witnesses.size() == 1);
        CHECK(report.witnesses.front().kind == Property::Connectivity);
        CHECK(report.witnesses.front().vertices == std::vector<VertexId>{0, 1});
    }
    SUBCASE("shape violations")
    {
        auto g = ordered_path();
        g.vertices[1].push_back(FacetSet{3});
        CHECK_FALSE(validate(g).holds());

        g = ordered_path();
        g.edges.push_back(Edge{1, 1});
        CHECK_FALSE(validate(g).holds());

        g = ordered_path();
        g.edges.push_back(Edge{1, 0});
        CHECK_FALSE(validate(g).holds());

        g = ordered_path();
        g.vertices.push_back({});
        g.edges.push_back(Edge{2, 3});
        CHECK_FALSE(validate(g).holds());

        g = ordered_path();
        g.dimension = 5;
        CHECK_FALSE(validate(g).holds());
    }
    SUBCASE("degenerate d = n")
    {
        CHECK(validate(path_of({{0, 1, 2, 3}})).holds());
    }
    SUBCASE("restrictions are exempt from connectivity")
    {
        auto g = path_of({{0, 1}, {2, 3}});
        g.edges.clear();
        g.is_restriction = true;
        CHECK(validate(g).holds());
    }
}

TEST_CASE("adjacency")
{
    CHECK(check_adjacency(ordered_path()).holds());

    auto report = check_adjacency(scrambled_path());
    REQUIRE(report.witnesses.size() == 1);
    CHECK(report.witnesses.front().sets == std::vector<FacetSet>{{0, 1}, {1, 2}});

    auto bad = ordered_path();
    bad.edges.clear();
    CHECK_THROWS_AS(check_adjacency(bad), InvalidSpg);
}

TEST_CASE("strong adjacency")
{
    CHECK(check_strong_adjacency(path_of({{0, 1}, {1, 2}})).holds());

    auto report = check_strong_adjacency(path_of({{0, 1}, {2, 3}}));
    REQUIRE(report.witnesses.size() == 1);
    CHECK(report.witnesses.front().kind == Property::StrongAdjacency);
    CHECK(report.witnesses.front().vertices == std::vector<VertexId>{0, 1});
}

TEST_CASE("end-point count")
{
    CHECK(check_endpoint_count(path_of({{0, 1}, {1, 2}, {2, 3}})).holds());

    auto report = check_endpoint_count(path_of({{0, 1}, {1, 2}, {1, 3}}));
    REQUIRE(report.witnesses.size() == 1);
    CHECK(report.witnesses.front().sets.front() == FacetSet{1});
    CHECK(report.witnesses.front().vertices.size() == 3);

    // d = 1: the empty face lies in every set
    CHECK(check_endpoint_count(path_of({{0}, {1}})).holds());
    CHECK_FALSE(check_endpoint_count(path_of({{0}, {1}, {2}})).holds());
}

TEST_CASE("singleton")
{
    CHECK(check_singleton(ordered_path()).holds());

    auto g = ordered_path();
    g.vertices[1].push_back(FacetSet{0, 3});
    auto report = check_singleton(g);
    REQUIRE(report.witnesses.size() == 1);
    CHECK(report.witnesses.front().vertices == std::vector<VertexId>{1});
}

TEST_CASE("restriction")
{
    SUBCASE("empty face changes nothing but the flag")
    {
        auto g = ordered_path();
        auto r = restrict(g, FacetSet{});
        REQUIRE(r);
        CHECK(r->is_restriction);
        r->is_restriction = false;
        CHECK(*r == g);
    }
    SUBCASE("ordered path by {b}")
    {
        auto r = restrict(ordered_path(), FacetSet{1});
        REQUIRE(r);
        CHECK(r->dimension == 1);
        CHECK(r->symbols.names() == std::vector<std::string>{"a", "c", "d"});
        REQUIRE(r->vertices.size() == 2);
        CHECK(to_string(r->vertices[0].front(), r->symbols) == "{a}");
        CHECK(to_string(r->vertices[1].front(), r->symbols) == "{c}");
        CHECK(r->edges == std::vector<Edge>{{0, 1}});
    }
    SUBCASE("scrambled path by {b} loses its middle vertex")
    {
        auto r = restrict(scrambled_path(), FacetSet{1});
        REQUIRE(r);
        CHECK(r->vertices.size() == 2);
        CHECK(r->edges.empty());
        CHECK(validate(*r).holds());
    }
    SUBCASE("empty and oversized faces")
    {
        CHECK_FALSE(restrict(path_of({{0, 1}}, 5), FacetSet{4}));
        CHECK_THROWS_AS(restrict(ordered_path(), FacetSet{0, 1, 2}), InvalidArgument);
        CHECK_THROWS_AS(restrict(ordered_path(), FacetSet{9}), InvalidArgument);
    }
}

TEST_CASE("restriction replays its definition on random instances")
{
    Rng rng(5);
    for (int round = 0; round < 40; ++round) {
        auto g = gen::partitioned_spg(rng, 7, 3, 2 + rng.below(20), 1 + rng.below(8), rng.below(4));
        auto sets = family(g);
        for (int k = 0; k < 5; ++k) {
            auto face = gen::distinct_sets(rng, 7, rng.below(4), 1).front();
            std::multiset<std::vector<std::string>> expected;
            for (auto & a : sets)
                if (a.includes(face)) {
                    std::vector<std::string> labels;
                    for (auto x : set_difference(a, face))
                        labels.push_back(g.symbols.name(x));
                    expected.insert(labels);
                }
            auto r = restrict(g, face);
            CHECK(bool(r) == ! expected.empty());
            if (! r)
                continue;
            std::multiset<std::vector<std::string>> actual;
            for (auto & a : family(*r)) {
                std::vector<std::string> labels;
                for (auto x : a)
                    labels.push_back(r->symbols.name(x));
                actual.insert(labels);
            }
            CHECK(actual == expected);
        }
    }
}

TEST_CASE("dimension reduction")
{
    CHECK(check_dimension_reduction(path_of({{0, 1}})).holds());
    CHECK(check_dimension_reduction(ordered_path()).holds());

    auto report = check_dimension_reduction(scrambled_path());
    REQUIRE(report.witnesses.size() == 1);
    CHECK(report.witnesses.front().sets.front() == FacetSet{1});

    CHECK(dimension_reduction_cost(ordered_path()) == 12);
    CHECK_THROWS_AS(check_dimension_reduction(ordered_path(), {11}), BudgetExceeded);
}

TEST_CASE("dimension reduction agrees with restrict on random instances")
{
    Rng rng(8);
    for (int round = 0; round < 30; ++round) {
        auto g = gen::partitioned_spg(rng, 6, 2 + rng.below(2), 2 + rng.below(10), 1 + rng.below(6), rng.below(3));
        std::set<FacetSet> expected;
        for (auto & a : family(g))
            for (std::uint64_t mask = 0; mask < (1u << a.size()); ++mask) {
                std::vector<SymbolId> f;
                for (std::size_t i = 0; i < a.size(); ++i)
                    if (mask >> i & 1)
                        f.push_back(a[i]);
                FacetSet face{f};
                auto r = restrict(g, face);
                REQUIRE(r);
                auto label = connected_components(*r);
                if (*std::max_element(label.begin(), label.end()) > 0)
                    expected.insert(face);
            }
        std::set<FacetSet> actual;
        for (auto & w : check_dimension_reduction(g).witnesses)
            actual.insert(w.sets.front());
        CHECK(actual == expected);
    }
}

TEST_CASE("verifier properties on random instances")
{
    Rng rng(17);
    for (int round = 0; round < 100; ++round) {
        auto n = 4 + rng.below(5);
        auto d = 1 + rng.below(std::min<std::size_t>(n - 1, 4));
        auto count = std::min<std::size_t>(1 + rng.below(30), oracle::binomial(n, d));
        auto g = gen::partitioned_spg(rng, n, d, count, 1 + rng.below(10), rng.below(5));
        auto sets = family(g);

        // partition: every member occurs in exactly one vertex
        std::map<FacetSet, int> occurrences;
        for (auto & v : g.vertices)
            for (auto & s : v)
                ++occurrences[s];
        for (auto & [s, k] : occurrences)
            CHECK(k == 1);

        if (check_strong_adjacency(g).holds())
            CHECK(check_adjacency(g).holds());

        std::set<std::pair<std::size_t, std::size_t>> pairs;
        for (auto & ridge : ridge_index(sets))
            for (std::size_t x = 0; x < ridge.members.size(); ++x)
                for (std::size_t y = x + 1; y < ridge.members.size(); ++y)
                    pairs.emplace(ridge.members[x], ridge.members[y]);
        CHECK(pairs == oracle::ridge_pairs(sets, d));
    }
}

TEST_CASE("end-point count matches the brute-force oracle")
{
    Rng rng(23);
    for (int round = 0; round < 60; ++round) {
        auto n = 5 + rng.below(5);
        auto d = 1 + rng.below(4);
        auto count = std::min<std::size_t>(1 + rng.below(120), oracle::binomial(n, d));
        auto g = gen::partitioned_spg(rng, n, d, count, 1 + rng.below(count), rng.below(4));

        std::map<std::vector<SymbolId>, std::size_t> hashed;
        for (auto & w : check_endpoint_count(g).witnesses)
            hashed[std::vector<SymbolId>(w.sets.front().begin(), w.sets.front().end())] = w.sets.size() - 1;
        CHECK(hashed == oracle::overfull_ridges(family(g), d));
    }
}
