#include "interdict/baker.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "interdict/matching.hpp"
#include "interdict/treewidth.hpp"

namespace interdict {

std::pair<WeightedGraph, WeightedGraph> slice(const WeightedGraph& g, const Layering& lay, int k,
                                              int i) {
    if (k < 1 || i < 0 || i >= k) throw Error("slice index out of range");
    std::set<EdgeId> fi;
    for (int l = i; l < static_cast<int>(lay.level_edges.size()); l += k)
        fi.insert(lay.level_edges[l].begin(), lay.level_edges[l].end());

    std::vector<EdgeId> complement, chosen(fi.begin(), fi.end());
    for (const Edge& e : g.edges)
        if (!fi.count(e.id)) complement.push_back(e.id);
    WeightedGraph gi = g.edge_subgraph(complement, /*keep_all_vertices=*/true);
    WeightedGraph hi = g.edge_subgraph(chosen, /*keep_all_vertices=*/false);
    return {gi, hi};
}

namespace {

BudgetTable solve_side(const WeightedGraph& part, const Layering& lay, Weight B, int k,
                       const PtasOptions& opt, bool is_complement_side) {
    TreeDecomposition td = decompose(part, &lay.level);
    auto rep = validate_decomposition(td, part);
    if (!rep.valid) throw InvalidDecomposition(rep.violation);
    if (opt.strict_width && is_complement_side && td.width() > 3 * k - 1)
        throw InvalidDecomposition("slice decomposition exceeds the layered width target");
    return solve_tw_mmeip(part, make_nice(td, part), B, opt.tw);
}

}  // namespace

PtasRun ptas_mmeip(const WeightedGraph& g, Weight B, double eps, const PtasOptions& opt) {
    g.validate();
    if (B < 0) throw Error("negative budget");
    if (!(eps > 0)) throw Error("eps must be positive");
    eps = std::min(eps, 1.0);

    PtasRun run;
    run.eps = eps;
    run.k = static_cast<int>(std::ceil(2.0 / eps));

    Layering lay = bfs_layers_all_components(g);
    bool have_best = false;

    for (int i = 0; i < run.k; ++i) {
        auto [gi, hi] = slice(g, lay, run.k, i);
        BudgetTable tg = solve_side(gi, lay, B, run.k, opt, true);
        BudgetTable th = solve_side(hi, lay, B, run.k, opt, false);
        for (Weight b = 0; b <= B; ++b) {
            // budget b on the complement side, B-b on the sliced-out side;
            // the two witnesses live on disjoint edges so costs just add
            std::vector<EdgeId> cand;
            std::merge(tg.witness[b].begin(), tg.witness[b].end(), th.witness[B - b].begin(),
                       th.witness[B - b].end(), std::back_inserter(cand));
            Weight val = nu(g.without_edges(cand));
            run.table.push_back({i, b, val});
            if (!have_best || val < run.nu_after) {
                have_best = true;
                run.chosen_i = i;
                run.chosen_b = b;
                run.chosen = cand;
                run.nu_after = val;
            }
        }
    }

    for (EdgeId e : run.chosen) run.spent += g.edge(e).c;
    if (run.spent > B) throw Error("sweep produced an overspending deletion set");
    return run;
}

}  // namespace interdict
