#include <algorithm>
#include <random>
#include <set>

#include "interdict/flow.hpp"
#include "interdict/matching.hpp"
#include "interdict/reductions.hpp"
#include "interdict/shortest_path.hpp"

namespace interdict {

namespace {

// all k-subsets of vs, capped; enough for desk-scale sources
std::vector<std::vector<VertexId>> k_subsets(const std::vector<VertexId>& vs, int k, int cap) {
    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> cur;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (static_cast<int>(out.size()) >= cap) return;
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        if (i >= vs.size() || vs.size() - i < k - cur.size()) return;
        cur.push_back(vs[i]);
        self(self, i + 1);
        cur.pop_back();
        self(self, i + 1);
    };
    rec(rec, 0);
    return out;
}

Weight cost_of(const WeightedGraph& g, const std::vector<EdgeId>& es) {
    Weight c = 0;
    for (EdgeId e : es) c += g.edge(e).c;
    return c;
}

}  // namespace

ChainReport verify_chain(const WeightedGraph& g, int k, const OracleOptions& opt) {
    ChainReport rep;
    auto fail = [&](const std::string& what) {
        rep.failure = what;
        rep.ok = false;
        return rep;
    };
    auto pass = [&](const std::string& what) { rep.checks.push_back(what); };

    if (k < 1) return fail("target size must be positive");
    if (g.edges.empty()) {
        // nothing to carry through the chain: every stage is degenerate
        pass("vacuous: source graph has no edges");
        rep.source_has_is = static_cast<int>(g.vertices.size()) >= k;
        rep.ok = true;
        return rep;
    }

    std::vector<VertexId> best_is = max_independent_set(g, opt.max_is_vertices);
    rep.source_has_is = static_cast<int>(best_is.size()) >= k;
    pass("source: maximum independent set computed exhaustively");

    // ---- stage 1: independent set -> flow improvement ----
    FlowGadget a = is_to_bcfip(g, k);
    Weight n = static_cast<Weight>(g.vertices.size());
    Weight target1 = static_cast<Weight>(k) * a.d;

    InterdictionResult r1 = oracle_interdict(
        {a.graph, a.budget, ProblemKind::kBCFIP, a.s, a.t}, opt);
    if ((r1.objective >= target1) != rep.source_has_is)
        return fail("stage 1: flow decision disagrees with the independent set decision");
    pass("stage 1: purchase oracle matches the independent-set decision");

    if (rep.source_has_is) {
        std::vector<VertexId> head(best_is.begin(), best_is.begin() + k);
        std::vector<EdgeId> kept = a.kept_edges_for(head);
        if (max_flow_value(a.graph.edge_subgraph(kept, true), a.s, a.t) != target1)
            return fail("stage 1: lifted independent set does not reach full flow");
        pass("stage 1: lifted independent set reaches full flow");
    }

    // ---- stage 2: crossing removal ----
    PlanarFlowGadget b = planarize_bcfip(a);
    b.embedding();  // throws unless the rotation system is a planar embedding
    pass("stage 2: planarized network carries a planar embedding");

    Weight m2 = static_cast<Weight>(g.edges.size()) * static_cast<Weight>(g.edges.size());
    Weight target2 = static_cast<Weight>(k) * m2;
    std::vector<std::vector<EdgeId>> lifted_sets;
    bool planar_yes = false;
    for (const auto& sub : k_subsets(g.vertices, k, 64)) {
        std::vector<EdgeId> kept = b.kept_edges_for(sub);
        if (cost_of(b.graph, kept) > b.budget)
            return fail("stage 2: a lifted purchase set overshoots the budget");
        if (max_flow_value(b.graph.edge_subgraph(kept, true), b.s, b.t) >= target2) {
            planar_yes = true;
            lifted_sets.push_back(kept);
        }
    }
    if (planar_yes != rep.source_has_is)
        return fail("stage 2: planar flow decision disagrees with the independent set decision");
    pass("stage 2: lifted purchase sets match the independent-set decision");

    // ---- sample purchase sets for the value-preservation checks ----
    std::vector<std::vector<EdgeId>> samples;
    std::vector<EdgeId> free2, paid2;
    for (const Edge& e : b.graph.edges) (e.c == 0 ? free2 : paid2).push_back(e.id);
    samples.push_back(free2);  // buy nothing
    for (std::size_t i = 0; i < lifted_sets.size() && i < 4; ++i) samples.push_back(lifted_sets[i]);
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<EdgeId> pool = paid2;
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<EdgeId> kept = free2;
        Weight spent = 0;
        for (EdgeId e : pool)
            if (spent + b.graph.edge(e).c <= b.budget) {
                spent += b.graph.edge(e).c;
                kept.push_back(e);
            }
        std::sort(kept.begin(), kept.end());
        samples.push_back(kept);
    }

    // ---- stage 3: dual split, min cut becomes shortest path ----
    PathGadget c3 = bcfip_to_dspeip(b.embedding(), b.s, b.t, b.budget);
    for (const auto& kept : samples) {
        Weight alpha = max_flow_value(b.graph.edge_subgraph(kept, true), b.s, b.t);
        Weight dist = rho(c3.graph.without_edges(c3.translate(kept)), c3.u, c3.v);
        if (dist != alpha)
            return fail("stage 3: dual path length differs from the primal cut value");
    }
    pass("stage 3: shortest dual path equals min cut on every sampled purchase set");

    // ---- stage 4: path instance -> perfect matching instance ----
    MatchingGadget d4 = dspeip_to_mpmeip(c3.graph, c3.rotation, c3.u, c3.v, c3.budget);
    std::vector<std::vector<EdgeId>> deletions;
    deletions.push_back({});
    for (const auto& kept : samples) deletions.push_back(c3.translate(kept));
    {
        std::vector<EdgeId> pool;
        for (const Edge& e : c3.graph.edges)
            if (e.c <= c3.budget) pool.push_back(e.id);
        for (int trial = 0; trial < 5; ++trial) {
            std::shuffle(pool.begin(), pool.end(), rng);
            std::vector<EdgeId> del;
            Weight spent = 0;
            for (EdgeId e : pool)
                if (spent + c3.graph.edge(e).c <= c3.budget) {
                    spent += c3.graph.edge(e).c;
                    del.push_back(e);
                }
            std::sort(del.begin(), del.end());
            deletions.push_back(del);
        }
    }
    for (const auto& del : deletions) {
        Weight dist = rho(c3.graph.without_edges(del), c3.u, c3.v);
        auto matched = mu(d4.graph.without_edges(d4.translate(del)));
        if (!matched || *matched != dist)
            return fail("stage 4: min perfect matching differs from the path length");
    }
    pass("stage 4: min perfect matching equals shortest path on every sampled deletion set");

    // ---- stage 5: weight shifts ----
    ShiftGadget e5 = mpmeip_to_mmeip(d4.graph, d4.budget);
    for (const auto& del : deletions) {
        std::vector<EdgeId> mids = d4.translate(del);
        auto before = mu(d4.graph.without_edges(mids));
        if (!before) return fail("stage 5: sampled deletion destroyed all perfect matchings");
        if (nu(e5.graph.without_edges(mids)) != e5.expected_nu(*before))
            return fail("stage 5: shifted max matching misses the predicted value");
    }
    pass("stage 5: shifted max matching hits the predicted value on every sample");
    (void)n;

    rep.ok = true;
    return rep;
}

}  // namespace interdict
