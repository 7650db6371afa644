#include <doctest.h>

#include "helpers.hpp"
#include "interdict/flow.hpp"
#include "interdict/matching.hpp"
#include "interdict/oracle.hpp"
#include "interdict/shortest_path.hpp"

using namespace interdict;
using namespace testutil;

TEST_CASE("matching solver agrees with subset enumeration") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 120; ++trial) {
        WeightedGraph g = random_graph(rng, 7, 12, 9, 3, /*simple=*/false);
        CHECK(nu(g) == *brute_matching(g, false, false));
        CHECK(mu(g) == brute_matching(g, true, true));
        CHECK(gamma_perfect(g) == brute_matching(g, true, false));
    }
}

TEST_CASE("matching: known values") {
    CHECK(nu(two_edge_path()) == 5);

    // weighted 4-cycle 0-1-2-3-0 with weights 4,1,2,7
    WeightedGraph c4;
    for (int v = 0; v < 4; ++v) c4.add_vertex(v);
    c4.add_edge(0, 1, 4, 0);
    c4.add_edge(1, 2, 1, 0);
    c4.add_edge(2, 3, 2, 0);
    c4.add_edge(3, 0, 7, 0);
    CHECK(nu(c4) == 8);  // {1-2, 3-0}
    CHECK(*mu(c4) == 6);
    CHECK(*gamma_perfect(c4) == 8);

    // odd component: no perfect matching
    CHECK(mu(complete_graph(3)) == std::nullopt);
}

TEST_CASE("max flow: small networks") {
    WeightedGraph g;
    g.directed = true;
    for (int v = 0; v < 4; ++v) g.add_vertex(v);
    g.add_edge(0, 1, 3, 0);
    g.add_edge(0, 2, 2, 0);
    g.add_edge(1, 3, 2, 0);
    g.add_edge(2, 3, 3, 0);
    g.add_edge(1, 2, 1, 0);
    CHECK(max_flow_value(g, 0, 3) == 5);
    auto cut = min_cut_edges(g, 0, 3);
    Weight cut_w = 0;
    for (EdgeId e : cut) cut_w += g.edge(e).w;
    CHECK(cut_w == 5);
}

TEST_CASE("shortest path: distances, determinism, zero weights") {
    WeightedGraph g;
    g.directed = true;
    for (int v = 0; v < 5; ++v) g.add_vertex(v);
    g.add_edge(0, 1, 2, 0);
    g.add_edge(1, 4, 2, 0);
    g.add_edge(0, 2, 1, 0);
    g.add_edge(2, 3, 0, 0);
    g.add_edge(3, 4, 3, 0);
    CHECK(rho(g, 0, 4) == 4);
    CHECK(rho(g, 4, 0) == kInfWeight);  // directed

    // zero-weight cycles must not break path reconstruction
    WeightedGraph z;
    z.directed = true;
    for (int v = 0; v < 4; ++v) z.add_vertex(v);
    z.add_edge(0, 1, 0, 0);
    z.add_edge(1, 2, 0, 0);
    z.add_edge(2, 1, 0, 0);
    z.add_edge(2, 3, 0, 0);
    z.add_edge(1, 3, 0, 0);
    auto p = shortest_path(z, 0, 3);
    REQUIRE(p.has_value());
    CHECK(p->distance == 0);
    // the witness is a real path
    VertexId at = 0;
    for (EdgeId e : p->edges) {
        CHECK(z.edge(e).tail == at);
        at = z.edge(e).head;
    }
    CHECK(at == 3);
}

TEST_CASE("interdiction oracle: folding, witnesses, caps") {
    WeightedGraph g = two_edge_path();
    InterdictionResult r = oracle_interdict({g, 1, ProblemKind::kMMEIP, -1, -1});
    CHECK(r.objective == 3);
    CHECK(r.chosen == std::vector<EdgeId>{0});
    CHECK(r.spent == 1);

    // budget 0 still deletes free edges under matching interdiction
    WeightedGraph h = g;
    h.edges[0].c = 0;
    InterdictionResult r0 = oracle_interdict({h, 0, ProblemKind::kMMEIP, -1, -1});
    CHECK(r0.objective == 3);
    CHECK(r0.spent == 0);
    CHECK(r0.chosen == std::vector<EdgeId>{0});

    // ground-set guard
    WeightedGraph big;
    for (int v = 0; v < 30; ++v) big.add_vertex(v);
    for (int i = 0; i + 1 < 30; ++i) big.add_edge(i, i + 1, 1, 1);
    CHECK_THROWS_AS(oracle_interdict({big, 1, ProblemKind::kMMEIP, -1, -1}), TooLargeForOracle);
}

TEST_CASE("oracle respects the budget on random instances") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        WeightedGraph g = random_graph(rng, 6, 9, 6, 3);
        Weight B = trial % 5;
        InterdictionResult r = oracle_interdict({g, B, ProblemKind::kMMEIP, -1, -1});
        Weight spent = 0;
        for (EdgeId e : r.chosen) spent += g.edge(e).c;
        CHECK(spent == r.spent);
        CHECK(r.spent <= B);
        CHECK(nu(g.without_edges(r.chosen)) == r.objective);
    }
}

TEST_CASE("maximum independent set: exact and lexicographically smallest") {
    CHECK(max_independent_set(complete_graph(4)).size() == 1);
    WeightedGraph c5;
    for (int v = 0; v < 5; ++v) c5.add_vertex(v);
    for (int v = 0; v < 5; ++v) c5.add_edge(v, (v + 1) % 5, 0, 0);
    auto is5 = max_independent_set(c5);
    CHECK(is5.size() == 2);
    CHECK(is5 == std::vector<VertexId>{0, 2});

    auto ref = max_independent_set(reference_source());
    CHECK(ref.size() == 2);
    CHECK(ref == std::vector<VertexId>{0, 3});

    // brute-force cross-check on random graphs
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        WeightedGraph g = random_graph(rng, 8, 14, 0, 0);
        int n = static_cast<int>(g.vertices.size());
        int best = 0;
        for (int mask = 0; mask < (1 << n); ++mask) {
            bool ok = true;
            for (const Edge& e : g.edges) {
                int a = g.vertex_index(e.tail), b = g.vertex_index(e.head);
                if ((mask >> a & 1) && (mask >> b & 1)) ok = false;
            }
            if (ok) best = std::max(best, __builtin_popcount(mask));
        }
        CHECK(static_cast<int>(max_independent_set(g).size()) == best);
    }
}
