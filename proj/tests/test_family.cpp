#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prlab/family.hpp"
#include "prlab/iso.hpp"
#include "support/oracles.hpp"

using namespace prlab;

TEST_CASE("matching counts for the small patterns") {
    CHECK(enumerate_matchings(SimpleGraph::path(4)).size() == 5);
    CHECK(enumerate_matchings(SimpleGraph::cycle(3)).size() == 4);
    CHECK(enumerate_matchings(SimpleGraph::cycle(4)).size() == 7);
}

TEST_CASE("matchings: the empty matching comes first, edges stay disjoint") {
    auto ms = enumerate_matchings(pattern_from_catalog("bull"));
    REQUIRE(!ms.empty());
    CHECK(ms[0].edges.empty());
    for (const auto& m : ms) {
        for (size_t s = 0; s < m.edges.size(); ++s)
            for (size_t t = s + 1; t < m.edges.size(); ++t) {
                auto [a, b] = m.edges[s];
                auto [c, d] = m.edges[t];
                CHECK(a != c);
                CHECK(a != d);
                CHECK(b != c);
                CHECK(b != d);
            }
    }
}

TEST_CASE("matching enumeration agrees with the subset filter") {
    for (const char* tok : {"P2", "P3", "P4", "P5", "P6", "C3", "C4", "C5", "C6", "C7", "C8",
                            "K4", "K4-", "K2,3", "bull", "C3+", "C5+", "C7+", "K1,8"}) {
        auto g = pattern_from_catalog(tok);
        if (g.edge_count() > 8) continue;
        CAPTURE(tok);
        CHECK(static_cast<long long>(enumerate_matchings(g).size()) ==
              oracle::subset_matching_count(g));
    }
}

TEST_CASE("matchings are pairwise distinct") {
    auto g = pattern_from_catalog("K4");
    auto ms = enumerate_matchings(g);
    CHECK(ms.size() == 10); // empty + 6 single edges + 3 perfect matchings
    for (size_t s = 0; s < ms.size(); ++s)
        for (size_t t = s + 1; t < ms.size(); ++t)
            CHECK(ms[s].edges != ms[t].edges);
}

TEST_CASE("reduced family of C4") {
    auto full = reduced_family(SimpleGraph::cycle(4), false);
    REQUIRE(full.size() == 3);
    // {C4, P4, 2K2} in some canonical order
    bool saw_c4 = false, saw_p4 = false, saw_2k2 = false;
    for (const auto& g : full.members) {
        if (isomorphic(g, SimpleGraph::cycle(4))) saw_c4 = true;
        if (isomorphic(g, SimpleGraph::path(4))) saw_p4 = true;
        if (isomorphic(g, SimpleGraph::from_edges(4, {{0, 1}, {2, 3}}))) saw_2k2 = true;
    }
    CHECK(saw_c4);
    CHECK(saw_p4);
    CHECK(saw_2k2);

    auto minimal = reduced_family(SimpleGraph::cycle(4), true);
    REQUIRE(minimal.size() == 1);
    CHECK(isomorphic(minimal.members[0], SimpleGraph::from_edges(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("reduced family of K2 keeps only K2") {
    for (bool minimal : {false, true}) {
        auto fam = reduced_family(SimpleGraph::path(2), minimal);
        REQUIRE(fam.size() == 1);
        CHECK(fam.members[0].edge_count() == 1);
        CHECK(fam.members[0].vertex_count == 2);
    }
    CHECK_THROWS_AS(reduced_family(SimpleGraph{3, {}}, false), std::invalid_argument);
}

TEST_CASE("family members: no isolated vertices, pairwise non-isomorphic") {
    for (const char* tok : {"P5", "C5", "K4", "K4-", "K2,3", "bull", "C4+"}) {
        auto fam = reduced_family(pattern_from_catalog(tok), false);
        CAPTURE(tok);
        for (const auto& g : fam.members) {
            CHECK(!g.edges.empty());
            for (int d : g.degrees()) CHECK(d >= 1);
        }
        for (size_t s = 0; s < fam.size(); ++s)
            for (size_t t = s + 1; t < fam.size(); ++t)
                CHECK(canonical_form(fam.members[s]) != canonical_form(fam.members[t]));
    }
}
