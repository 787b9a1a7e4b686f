#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prlab/errors.hpp"
#include "prlab/iso.hpp"
#include "prlab/turan.hpp"
#include "support/oracles.hpp"

using namespace prlab;

namespace {
GraphFamily family_of(std::initializer_list<const char*> tokens) {
    GraphFamily fam;
    for (const char* tok : tokens) fam.members.push_back(pattern_from_catalog(tok));
    return fam;
}
} // namespace

TEST_CASE("ex(5,{2K2}) = 4 with a star witness") {
    auto two_k2 = SimpleGraph::from_edges(4, {{0, 1}, {2, 3}});
    auto r = ex_exact(5, GraphFamily{{two_k2}});
    CHECK(r.value == 4);
    auto deg = r.witness.degrees();
    std::sort(deg.begin(), deg.end());
    CHECK(deg == std::vector<int>{1, 1, 1, 1, 4});
}

TEST_CASE("ex(4,{P3}) = 2 with a perfect matching witness") {
    auto r = ex_exact(4, family_of({"P3"}));
    CHECK(r.value == 2);
    CHECK(r.witness.edges == std::vector<VertexPair>{{0, 1}, {2, 3}});
}

TEST_CASE("ex(5,{C4}) = 6") {
    CHECK(ex_exact(5, family_of({"C4"})).value == 6);
}

TEST_CASE("witnesses avoid every family member") {
    for (auto tokens : {std::vector<const char*>{"C4"}, {"P4"}, {"C3", "C4"}, {"K4-"}}) {
        GraphFamily fam;
        for (auto t : tokens) fam.members.push_back(pattern_from_catalog(t));
        for (int n = 3; n <= 7; ++n) {
            auto r = ex_exact(n, fam);
            for (const auto& f : fam.members) CHECK(!is_subgraph(f, r.witness));
            CHECK(r.witness.edge_count() == r.value);
        }
    }
}

TEST_CASE("exhaustive agreement with the all-subsets oracle at n <= 5") {
    for (auto tokens : {std::vector<const char*>{"P3"}, {"P4"}, {"C3"}, {"C4"}, {"K4-"},
                        {"C3", "C4", "C5"}, {"K3"}}) {
        std::vector<SimpleGraph> members;
        GraphFamily fam;
        for (auto t : tokens) {
            members.push_back(pattern_from_catalog(t));
            fam.members.push_back(pattern_from_catalog(t));
        }
        for (int n = 2; n <= 5; ++n) {
            CAPTURE(tokens[0]);
            CAPTURE(n);
            CHECK(ex_exact(n, fam).value == oracle::brute_force_ex(n, members));
        }
    }
}

TEST_CASE("lex-smallest witness matches the oracle's first maximizer") {
    for (int n = 3; n <= 5; ++n) {
        GraphFamily fam = family_of({"C4"});
        SimpleGraph oracle_witness;
        oracle::brute_force_ex(n, fam.members, &oracle_witness);
        CHECK(ex_exact(n, fam).witness.edges == oracle_witness.edges);
    }
}

TEST_CASE("subchromatic numbers") {
    CHECK(subchromatic(reduced_family(SimpleGraph::cycle(4), false)) == 1);
    CHECK(subchromatic(reduced_family(SimpleGraph::complete(4), false)) == 1);
    CHECK(subchromatic(family_of({"C3"})) == 2);
    CHECK_THROWS_AS(subchromatic(GraphFamily{}), std::invalid_argument);
    // consistent with b = floor((t-1)/2) for cliques
    for (int t = 3; t <= 5; ++t) {
        auto fam = reduced_family(SimpleGraph::complete(t), false);
        CHECK(subchromatic(fam) == (t - 1) / 2);
    }
}

TEST_CASE("erdos-gallai inequalities at the spec examples") {
    auto a = erdos_gallai_check(6, 4);
    CHECK(a.path_holds);
    CHECK(a.path_bound == doctest::Approx(6.0));
    auto b = erdos_gallai_check(6, 3);
    CHECK(b.cycle_holds);
    CHECK(b.long_cycle_ex <= 7); // 7.5 rounds down
    auto c = erdos_gallai_check(5, 3);
    CHECK(c.path_holds);
    CHECK(c.path_ex == 2);
}

TEST_CASE("erdos-gallai inequalities hold for 3 <= r <= n <= 7") {
    for (int n = 3; n <= 7; ++n) {
        for (int r = 3; r <= n; ++r) {
            auto rep = erdos_gallai_check(n, r);
            CAPTURE(n);
            CAPTURE(r);
            CHECK(rep.path_holds);
            CHECK(rep.cycle_holds);
            CHECK(rep.path_slack >= 0);
            CHECK(rep.cycle_slack >= 0);
        }
    }
}

TEST_CASE("ex is monotone in n and antitone in the family") {
    GraphFamily small = family_of({"C4"});
    GraphFamily bigger = family_of({"C4", "P4"});
    for (int n = 3; n <= 6; ++n) {
        CHECK(ex_exact(n, small).value <= ex_exact(n + 1, small).value);
        CHECK(ex_exact(n, bigger).value <= ex_exact(n, small).value);
    }
}

TEST_CASE("minimal and full reduced families give the same ex") {
    for (const char* tok : {"P3", "P4", "P5", "C3", "C4", "C5", "K4", "K4-", "C3+"}) {
        auto g = pattern_from_catalog(tok);
        auto full = reduced_family(g, false);
        auto minimal = reduced_family(g, true);
        for (int n = 2; n <= 7; ++n) {
            CAPTURE(tok);
            CAPTURE(n);
            CHECK(ex_exact(n, full).value == ex_exact(n, minimal).value);
        }
    }
}

TEST_CASE("empty family means the complete graph wins") {
    auto r = ex_exact(4, GraphFamily{});
    CHECK(r.value == 6);
    CHECK(r.witness == SimpleGraph::complete(4));
}

TEST_CASE("the cap fails loudly") {
    CHECK_THROWS_AS(ex_exact(10, family_of({"C4"})), ResourceLimitError);
}
