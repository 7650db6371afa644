#include "interdict/tw_interdict.hpp"

#include <algorithm>
#include <map>

#include "interdict/matching.hpp"

namespace interdict {

namespace {

constexpr Weight kNegInf = -kInfWeight;

struct Strategy {
    Weight spent = 0;
    std::vector<Weight> profile;  // indexed by bag-subset mask
    std::vector<EdgeId> deleted;  // kept sorted
};

bool profile_leq(const std::vector<Weight>& a, const std::vector<Weight>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Keep only non-dominated strategies; deterministic order and witnesses.
void prune(std::vector<Strategy>& v) {
    std::sort(v.begin(), v.end(), [](const Strategy& x, const Strategy& y) {
        if (x.spent != y.spent) return x.spent < y.spent;
        if (x.profile != y.profile) return x.profile < y.profile;
        return x.deleted < y.deleted;
    });
    std::vector<Strategy> out;
    for (auto& s : v) {
        bool dominated = false;
        for (const auto& o : out)
            if (o.spent <= s.spent && profile_leq(o.profile, s.profile)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(std::move(s));
    }
    v = std::move(out);
}

struct Solver {
    const WeightedGraph& g;
    const TreeDecomposition& td;
    Weight budget_cap;
    const TwOptions& opt;
    long long states = 0;
    std::vector<std::vector<EdgeId>> edges_at;  // edge ids handled per node

    void charge(long long amount) {
        states += amount;
        if (states > opt.state_cap) throw StateExplosion("interdiction DP state cap exceeded");
    }

    static int bit_of(const std::vector<VertexId>& bag, VertexId v) {
        auto it = std::lower_bound(bag.begin(), bag.end(), v);
        return static_cast<int>(it - bag.begin());
    }

    void apply_edge(std::vector<Strategy>& strategies, const std::vector<VertexId>& bag, EdgeId eid) {
        const Edge& e = g.edge(eid);
        int bx = bit_of(bag, e.tail), by = bit_of(bag, e.head);
        int pair_mask = (1 << bx) | (1 << by);
        std::vector<Strategy> next;
        for (auto& s : strategies) {
            if (s.spent + e.c <= budget_cap) {
                Strategy del = s;  // pay, profile untouched
                del.spent += e.c;
                del.deleted.insert(std::upper_bound(del.deleted.begin(), del.deleted.end(), eid), eid);
                next.push_back(std::move(del));
            }
            Strategy keep = std::move(s);  // follower may now use the edge
            for (int m = static_cast<int>(keep.profile.size()) - 1; m >= 0; --m)
                if ((m & pair_mask) == pair_mask && keep.profile[m ^ pair_mask] != kNegInf)
                    keep.profile[m] = std::max(keep.profile[m], keep.profile[m ^ pair_mask] + e.w);
            next.push_back(std::move(keep));
        }
        charge(static_cast<long long>(next.size()) * static_cast<long long>(next.empty() ? 1 : next[0].profile.size()));
        prune(next);
        strategies = std::move(next);
    }

    std::vector<Strategy> run(int node) {
        const std::vector<VertexId>& bag = td.bags[node];
        int nbits = static_cast<int>(bag.size());
        std::vector<Strategy> out;
        switch (td.kind[node]) {
            case NiceKind::kLeaf: {
                Strategy s;
                s.profile.assign(1u << nbits, kNegInf);
                s.profile[0] = 0;
                out.push_back(std::move(s));
                break;
            }
            case NiceKind::kIntroduce: {
                auto child = run(td.children[node][0]);
                int p = bit_of(bag, td.pivot[node]);
                int low = (1 << p) - 1;
                for (auto& s : child) {
                    Strategy t;
                    t.spent = s.spent;
                    t.deleted = std::move(s.deleted);
                    t.profile.assign(1u << nbits, kNegInf);
                    for (int m = 0; m < (1 << (nbits - 1)); ++m)
                        t.profile[((m & ~low) << 1) | (m & low)] = s.profile[m];
                    out.push_back(std::move(t));
                }
                break;
            }
            case NiceKind::kForget: {
                int child_id = td.children[node][0];
                auto child = run(child_id);
                int p = bit_of(td.bags[child_id], td.pivot[node]);
                int low = (1 << p) - 1;
                for (auto& s : child) {
                    Strategy t;
                    t.spent = s.spent;
                    t.deleted = std::move(s.deleted);
                    t.profile.assign(1u << nbits, kNegInf);
                    for (int m = 0; m < (1 << nbits); ++m) {
                        int wide = ((m & ~low) << 1) | (m & low);
                        t.profile[m] = std::max(s.profile[wide], s.profile[wide | (1 << p)]);
                    }
                    out.push_back(std::move(t));
                }
                break;
            }
            case NiceKind::kJoin: {
                auto left = run(td.children[node][0]);
                auto right = run(td.children[node][1]);
                charge(static_cast<long long>(left.size()) * right.size() * (1LL << nbits));
                for (const auto& a : left)
                    for (const auto& b : right) {
                        if (a.spent + b.spent > budget_cap) continue;
                        Strategy t;
                        t.spent = a.spent + b.spent;
                        std::merge(a.deleted.begin(), a.deleted.end(), b.deleted.begin(), b.deleted.end(),
                                   std::back_inserter(t.deleted));
                        t.profile.assign(1u << nbits, kNegInf);
                        // bag vertices matched on at most one side
                        for (int m = 0; m < (1 << nbits); ++m)
                            for (int s1 = m;; s1 = (s1 - 1) & m) {
                                Weight va = a.profile[s1], vb = b.profile[m ^ s1];
                                if (va != kNegInf && vb != kNegInf)
                                    t.profile[m] = std::max(t.profile[m], va + vb);
                                if (s1 == 0) break;
                            }
                        out.push_back(std::move(t));
                    }
                break;
            }
            case NiceKind::kNone:
                throw InvalidDecomposition("node without a nice-form label");
        }
        charge(static_cast<long long>(out.size()) * (1LL << nbits));
        prune(out);
        for (EdgeId eid : edges_at[node]) apply_edge(out, bag, eid);
        return out;
    }
};

}  // namespace

BudgetTable solve_tw_mmeip(const WeightedGraph& g, const TreeDecomposition& td, Weight B,
                           const TwOptions& opt) {
    if (!td.nice || td.root < 0) throw InvalidDecomposition("solver needs the nice form");
    if (B < 0) throw Error("negative budget");
    auto rep = validate_decomposition(td, g);
    if (!rep.valid) throw InvalidDecomposition(rep.violation);
    if (B > opt.table_cap) throw StateExplosion("budget axis exceeds the table cap");

    Solver sv{g, td, std::min(B, g.total_cost()), opt, 0, {}};

    // Each edge is handled at one designated node whose bag has both ends.
    sv.edges_at.assign(td.bags.size(), {});
    for (const Edge& e : g.edges) {
        if (e.tail == e.head) continue;  // never matchable, never worth buying
        int home = -1;
        for (std::size_t i = 0; i < td.bags.size() && home < 0; ++i) {
            const auto& bag = td.bags[i];
            if (std::binary_search(bag.begin(), bag.end(), e.tail) &&
                std::binary_search(bag.begin(), bag.end(), e.head))
                home = static_cast<int>(i);
        }
        if (home < 0) throw InvalidDecomposition("edge fits in no bag");
        sv.edges_at[home].push_back(e.id);
    }
    for (auto& v : sv.edges_at) std::sort(v.begin(), v.end());

    std::vector<Strategy> roots = sv.run(td.root);
    // root bag is empty: profile[0] is the follower's best answer

    BudgetTable table;
    table.budget = B;
    table.value.assign(B + 1, kInfWeight);
    table.witness.assign(B + 1, {});
    for (Weight b = 0; b <= B; ++b) {
        for (const auto& s : roots) {
            if (s.spent > b) continue;
            Weight v = s.profile[0];
            if (v < table.value[b] || (v == table.value[b] && s.deleted < table.witness[b])) {
                table.value[b] = v;
                table.witness[b] = s.deleted;
            }
        }
    }

    for (Weight b = 0; b <= B; ++b) {
        if (b > 0 && table.value[b] > table.value[b - 1])
            throw Error("budget table lost monotonicity");
        Weight check = nu(g.without_edges(table.witness[b]));
        if (check != table.value[b]) throw Error("budget table witness does not reproduce its value");
        Weight spent = 0;
        for (EdgeId e : table.witness[b]) spent += g.edge(e).c;
        if (spent > b) throw Error("budget table witness overspends");
    }
    return table;
}

}  // namespace interdict
