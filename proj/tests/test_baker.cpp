#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "interdict/baker.hpp"
#include "interdict/matching.hpp"
#include "interdict/oracle.hpp"

using namespace interdict;
using namespace testutil;

TEST_CASE("slice: the bands partition the inter-level edges") {
    WeightedGraph g = grid_graph(4, 4);
    Layering lay = bfs_layers_all_components(g);
    for (int k = 2; k <= 4; ++k) {
        std::set<EdgeId> chosen_union;
        for (int i = 0; i < k; ++i) {
            auto [gi, hi] = slice(g, lay, k, i);
            CHECK(gi.num_vertices() == g.num_vertices());
            CHECK(gi.num_edges() + hi.num_edges() == g.num_edges());
            for (const Edge& e : hi.edges) {
                CHECK(chosen_union.insert(e.id).second);  // bands are disjoint
                int lt = lay.level.at(e.tail), lh = lay.level.at(e.head);
                int lo = std::min(lt, lh);
                CHECK(std::abs(lt - lh) == 1);
                CHECK(lo % k == i);
            }
        }
        // same-level edges never leave the complement side
        for (EdgeId e : lay.intra_level_edges) CHECK(!chosen_union.count(e));
    }
}

TEST_CASE("matching band bound: sum over bands at most twice the total") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 120; ++trial) {
        WeightedGraph g = random_planar(rng, 2 + trial % 3, 2 + (trial / 3) % 3, 6, 3);
        Layering lay = bfs_layers_all_components(g);
        for (int k = 2; k <= 4; ++k) {
            Weight sum = 0;
            for (int i = 0; i < k; ++i) {
                auto [gi, hi] = slice(g, lay, k, i);
                sum += nu(hi);
            }
            CHECK(sum <= 2 * nu(g));
        }
    }
}

TEST_CASE("subgraph and partition bounds for matchings") {
    std::mt19937 rng(18);
    for (int trial = 0; trial < 120; ++trial) {
        WeightedGraph g = random_graph(rng, 8, 12, 6, 3, /*simple=*/false);
        // subgraph: nu of a random edge subset never exceeds nu(G)
        std::vector<EdgeId> keep;
        for (const Edge& e : g.edges)
            if (rng() % 2) keep.push_back(e.id);
        WeightedGraph h = g.edge_subgraph(keep, true);
        CHECK(nu(h) <= nu(g));
        // partition: nu(G) <= nu(G[F]) + nu(G[E\F])
        std::vector<EdgeId> rest;
        for (const Edge& e : g.edges)
            if (std::find(keep.begin(), keep.end(), e.id) == keep.end()) rest.push_back(e.id);
        CHECK(nu(g) <= nu(h) + nu(g.edge_subgraph(rest, true)));
    }
}

TEST_CASE("deterministic instance: approximation picks the smaller loss") {
    PtasRun run = ptas_mmeip(two_edge_path(), 1, 0.5);
    CHECK(run.k == 4);
    CHECK(run.nu_after == 3);
    CHECK(run.spent <= 1);
    CHECK(run.chosen == std::vector<EdgeId>{0});
}

TEST_CASE("budget zero keeps the graph intact") {
    WeightedGraph g = grid_graph(3, 3, 2, 1);
    PtasRun run = ptas_mmeip(g, 0, 0.5);
    CHECK(run.nu_after == nu(g));
    CHECK(run.chosen.empty());
}

TEST_CASE("eps handling: clamp above one, reject non-positive") {
    WeightedGraph g = two_edge_path();
    PtasRun run = ptas_mmeip(g, 1, 9.0);
    CHECK(run.eps == 1.0);
    CHECK(run.k == 2);
    CHECK_THROWS_AS(ptas_mmeip(g, 1, 0.0), Error);
}

TEST_CASE("runs are deterministic") {
    std::mt19937 rng(23);
    WeightedGraph g = random_planar(rng, 3, 4, 6, 3);
    PtasRun a = ptas_mmeip(g, 3, 0.5);
    PtasRun b = ptas_mmeip(g, 3, 0.5);
    CHECK(a.chosen == b.chosen);
    CHECK(a.chosen_i == b.chosen_i);
    CHECK(a.chosen_b == b.chosen_b);
    CHECK(a.nu_after == b.nu_after);
}

TEST_CASE("guarantee on a few random instances") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 25; ++trial) {
        WeightedGraph g = random_planar(rng, 2 + trial % 3, 2 + (trial / 2) % 3, 6, 3);
        Weight B = trial % 4;
        for (double eps : {0.5, 1.0}) {
            PtasRun run = ptas_mmeip(g, B, eps);
            CHECK(run.spent <= B);
            InterdictionResult opt = oracle_interdict({g, B, ProblemKind::kMMEIP, -1, -1});
            CHECK(static_cast<double>(run.nu_after) <=
                  (1.0 + eps) * static_cast<double>(opt.objective) + 1e-9);
        }
    }
}
