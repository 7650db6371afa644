// Command-line workbench: solve matching interdiction instances, run the
// hardness reduction chain, verify it end to end, and benchmark.
#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "interdict/baker.hpp"
#include "interdict/flow.hpp"
#include "interdict/json_io.hpp"
#include "interdict/matching.hpp"
#include "interdict/oracle.hpp"
#include "interdict/reductions.hpp"
#include "interdict/shortest_path.hpp"
#include "interdict/tw_interdict.hpp"

using nlohmann::json;
using namespace interdict;

namespace {

constexpr int kExitVerifyFail = 2;
constexpr int kExitRejected = 3;
constexpr int kExitResourceCap = 4;

void emit(const json& j, const std::string& output) {
    if (output.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(output);
        if (!out) throw Error("cannot write " + output);
        out << j.dump(2) << "\n";
    }
}

template <typename K, typename V>
json map_json(const std::map<K, V>& m) {
    json j = json::object();
    for (const auto& [k, v] : m) j[std::to_string(k)] = v;
    return j;
}

int cmd_solve(const std::string& input, const std::string& output, const std::string& method,
              double eps, Weight budget, bool strict_width, int oracle_cap) {
    InstanceFile inst = read_instance(input);
    if (inst.graph.directed) throw UndirectedInput("matching interdiction needs an undirected graph");
    json res;
    res["method"] = method;
    res["budget"] = budget;
    if (method == "ptas") {
        PtasOptions opt;
        opt.strict_width = strict_width;
        PtasRun run = ptas_mmeip(inst.graph, budget, eps, opt);
        res["objective"] = run.nu_after;
        res["interdiction"] = run.chosen;
        res["spent"] = run.spent;
        res["diagnostics"] = {{"eps", run.eps},
                              {"k", run.k},
                              {"chosen_i", run.chosen_i},
                              {"chosen_b", run.chosen_b}};
        json table = json::array();
        for (const auto& cell : run.table)
            table.push_back({{"i", cell.i}, {"b", cell.b}, {"value", cell.value}});
        res["diagnostics"]["table"] = table;
    } else if (method == "tw") {
        TreeDecomposition td = decompose(inst.graph);
        auto rep = validate_decomposition(td, inst.graph);
        if (!rep.valid) throw InvalidDecomposition(rep.violation);
        BudgetTable bt = solve_tw_mmeip(inst.graph, make_nice(td, inst.graph), budget);
        res["objective"] = bt.value[budget];
        res["interdiction"] = bt.witness[budget];
        Weight spent = 0;
        for (EdgeId e : bt.witness[budget]) spent += inst.graph.edge(e).c;
        res["spent"] = spent;
        res["diagnostics"] = {{"width", td.width()}, {"value_table", bt.value}};
    } else if (method == "oracle") {
        OracleOptions opt;
        opt.max_ground_edges = oracle_cap;
        InterdictionResult r =
            oracle_interdict({inst.graph, budget, ProblemKind::kMMEIP, -1, -1}, opt);
        res["objective"] = r.objective;
        res["interdiction"] = r.chosen;
        res["spent"] = r.spent;
    } else {
        throw Error("unknown method " + method);
    }
    emit(res, output);
    return 0;
}

void write_stage(const std::string& base, const std::string& tag, const InstanceFile& inst) {
    if (base.empty()) return;
    std::string path = base;
    auto dot = path.rfind(".json");
    std::string stem = dot == std::string::npos ? path : path.substr(0, dot);
    write_instance(stem + "." + tag + ".json", inst);
}

int cmd_reduce(const std::string& input, const std::string& output, const std::string& from,
               const std::string& to, int k, Weight budget) {
    static const std::map<std::string, int> stage = {
        {"is", 0}, {"bcfip", 1}, {"planar-bcfip", 2}, {"dspeip", 3}, {"mpmeip", 4}, {"mmeip", 5}};
    if (!stage.count(from)) throw Error("unknown --from " + from);
    if (!stage.count(to) || stage.at(to) == 0) throw Error("unknown --to " + to);
    int lo = stage.at(from), hi = stage.at(to);
    if (lo >= hi) throw Error("--to must lie past --from in the chain");

    InstanceFile inst = read_instance(input);
    json side;
    InstanceFile cur = inst;
    Weight cur_budget = budget;
    VertexId cur_u = inst.s.value_or(-1), cur_v = inst.t.value_or(-1);

    if (lo == 0) {
        if (k < 1) throw Error("--k is required when reducing from an independent-set instance");
        FlowGadget a = is_to_bcfip(inst.graph, k);
        side["bcfip"] = {{"budget", a.budget},
                         {"d", a.d},
                         {"pay_edge", map_json(a.pay_edge)},
                         {"terminals", {{"s", a.s}, {"t", a.t}}}};
        cur = {a.graph, std::nullopt, a.s, a.t};
        cur_budget = a.budget;
        write_stage(output, "bcfip", cur);
        if (hi >= 2) {
            PlanarFlowGadget b = planarize_bcfip(a);
            side["planar-bcfip"] = {{"budget", b.budget},
                                    {"r", b.r},
                                    {"label", map_json(b.label)},
                                    {"child", map_json(b.child)},
                                    {"crossings", b.crossings},
                                    {"terminals", {{"s", b.s}, {"t", b.t}}}};
            cur = {b.graph, b.rotation, b.s, b.t};
            cur_budget = b.budget;
            write_stage(output, "planar-bcfip", cur);
        }
        lo = std::min(hi, 2);
    } else if (lo == 1 || lo == 2) {
        if (!cur.rotation) throw EmbeddingMissing("planarization metadata is construction-bound; "
                                                  "reduce from the independent-set source, or "
                                                  "supply an embedded flow instance for --from "
                                                  "planar-bcfip");
        lo = 2;
    }

    if (lo == 2 && hi >= 3) {
        if (!cur.rotation) throw EmbeddingMissing("flow instance lacks a rotation system");
        if (!cur.s || !cur.t) throw TerminalMissing("flow instance lacks terminals");
        PlanarEmbedding emb = PlanarEmbedding::build(cur.graph, *cur.rotation);
        PathGadget c3 = bcfip_to_dspeip(emb, *cur.s, *cur.t, cur_budget);
        side["dspeip"] = {{"budget", c3.budget},
                          {"copy_toll", map_json(c3.copy_toll)},
                          {"copy_free", map_json(c3.copy_free)},
                          {"copy_reverse", map_json(c3.copy_reverse)},
                          {"terminals", {{"u", c3.u}, {"v", c3.v}}}};
        cur = {c3.graph, c3.rotation, c3.u, c3.v};
        cur_budget = c3.budget;
        cur_u = c3.u;
        cur_v = c3.v;
        write_stage(output, "dspeip", cur);
        lo = 3;
    }
    if (lo == 3 && hi >= 4) {
        if (!cur.rotation) throw EmbeddingMissing("path instance lacks a rotation system");
        if (cur_u < 0 && cur.s) cur_u = *cur.s;
        if (cur_v < 0 && cur.t) cur_v = *cur.t;
        MatchingGadget d4 = dspeip_to_mpmeip(cur.graph, *cur.rotation, cur_u, cur_v, cur_budget);
        json chains = json::object();
        for (const auto& [e, ch] : d4.chain)
            chains[std::to_string(e)] = std::vector<VertexId>(ch.begin(), ch.end());
        side["mpmeip"] = {{"budget", d4.budget}, {"mid", map_json(d4.mid)}, {"chain", chains}};
        cur = {d4.graph, d4.rotation, std::nullopt, std::nullopt};
        cur_budget = d4.budget;
        write_stage(output, "mpmeip", cur);
        lo = 4;
    }
    if (lo == 4 && hi >= 5) {
        ShiftGadget e5 = mpmeip_to_mmeip(cur.graph, cur_budget);
        side["mmeip"] = {{"budget", e5.budget}, {"W", e5.W}, {"nu_prime", e5.nu_prime}};
        cur.graph = e5.graph;
        cur_budget = e5.budget;
    }

    side["budget"] = cur_budget;
    if (output.empty()) {
        std::cout << instance_to_json(cur);
    } else {
        write_instance(output, cur);
        auto dot = output.rfind(".json");
        std::string stem = dot == std::string::npos ? output : output.substr(0, dot);
        std::ofstream ms(stem + ".map.json");
        ms << side.dump(2) << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& input, int k, int oracle_cap) {
    InstanceFile inst = read_instance(input);
    OracleOptions opt;
    opt.max_ground_edges = oracle_cap;
    opt.max_is_vertices = oracle_cap;
    ChainReport rep = verify_chain(inst.graph, k, opt);
    for (const auto& line : rep.checks) std::cout << "ok: " << line << "\n";
    if (!rep.ok) {
        std::cout << "FAIL: " << rep.failure << "\n";
        return kExitVerifyFail;
    }
    std::cout << (rep.source_has_is ? "decision: independent set of the target size exists\n"
                                    : "decision: no independent set of the target size\n");
    return 0;
}

int cmd_oracle(const std::string& input, const std::string& output, const std::string& problem,
               Weight budget, int oracle_cap) {
    InstanceFile inst = read_instance(input);
    static const std::map<std::string, ProblemKind> kinds = {
        {"mmeip", ProblemKind::kMMEIP},
        {"mpmeip", ProblemKind::kMPMEIP},
        {"dspeip", ProblemKind::kDSPEIP},
        {"bcfip", ProblemKind::kBCFIP}};
    if (!kinds.count(problem)) throw Error("unknown --problem " + problem);
    OracleOptions opt;
    opt.max_ground_edges = oracle_cap;
    InterdictionResult r = oracle_interdict(
        {inst.graph, budget, kinds.at(problem), inst.s.value_or(-1), inst.t.value_or(-1)}, opt);
    json res = {{"problem", problem},
                {"budget", budget},
                {"objective", r.objective},
                {"chosen", r.chosen},
                {"spent", r.spent}};
    emit(res, output);
    return 0;
}

// connected random grid subgraph: spanning tree plus extra edges
WeightedGraph random_grid_graph(std::mt19937& rng, int rows, int cols) {
    WeightedGraph g;
    for (int i = 0; i < rows * cols; ++i) g.add_vertex(i);
    std::vector<std::pair<int, int>> grid_edges;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) grid_edges.push_back({r * cols + c, r * cols + c + 1});
            if (r + 1 < rows) grid_edges.push_back({r * cols + c, (r + 1) * cols + c});
        }
    std::shuffle(grid_edges.begin(), grid_edges.end(), rng);
    std::vector<int> parent(rows * cols);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::uniform_int_distribution<int> wd(0, 6), cd(0, 3), keep(0, 99);
    for (const auto& [a, b] : grid_edges) {
        bool tree = find(a) != find(b);
        if (tree) parent[find(a)] = find(b);
        if (tree || keep(rng) < 35) g.add_edge(a, b, wd(rng), cd(rng));
    }
    return g;
}

int cmd_bench(const std::string& output, int trials, unsigned seed, double eps, Weight budget,
              int oracle_cap, bool timing) {
    std::mt19937 rng(seed);
    std::ostringstream csv;
    csv << "n,m,eps,B,ptas,oracle,ratio,wall_ms\n";
    std::uniform_int_distribution<int> dim(2, 4), bd(0, 5);
    for (int t = 0; t < trials; ++t) {
        WeightedGraph g = random_grid_graph(rng, dim(rng), dim(rng));
        Weight B = budget >= 0 ? budget : bd(rng);
        auto start = std::chrono::steady_clock::now();
        PtasRun run = ptas_mmeip(g, B, eps);
        double ms = timing ? std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - start)
                                 .count()
                           : 0.0;
        csv << g.num_vertices() << "," << g.num_edges() << "," << eps << "," << B << ","
            << run.nu_after << ",";
        std::string ratio = "";
        OracleOptions opt;
        opt.max_ground_edges = oracle_cap;
        try {
            InterdictionResult r = oracle_interdict({g, B, ProblemKind::kMMEIP, -1, -1}, opt);
            csv << r.objective;
            if (r.objective == 0)
                ratio = run.nu_after == 0 ? "1.000" : "inf";
            else {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.3f",
                              static_cast<double>(run.nu_after) / r.objective);
                ratio = buf;
            }
        } catch (const TooLargeForOracle&) {
        }
        csv << "," << ratio << ",";
        char tb[32];
        std::snprintf(tb, sizeof tb, "%.0f", ms);
        csv << tb << "\n";
    }
    if (output.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(output);
        if (!out) throw Error("cannot write " + output);
        out << csv.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar matching interdiction workbench"};
    app.require_subcommand(1);

    std::string input, output, method = "ptas", from = "is", to = "mmeip", problem = "mmeip";
    double eps = 0.5;
    Weight budget = 0;
    long long bench_budget = -1;
    int k = 0, oracle_cap = 22, trials = 5;
    unsigned seed = 1;
    bool strict_width = false, timing = false;

    CLI::App* solve = app.add_subcommand("solve", "solve a matching interdiction instance");
    solve->add_option("--input", input)->required();
    solve->add_option("--output", output);
    solve->add_option("--method", method)->check(CLI::IsMember({"ptas", "tw", "oracle"}));
    solve->add_option("--eps", eps);
    solve->add_option("--budget", budget);
    solve->add_flag("--strict-width", strict_width);
    solve->add_option("--oracle-cap", oracle_cap);

    CLI::App* reduce = app.add_subcommand("reduce", "run the hardness reduction chain");
    reduce->add_option("--input", input)->required();
    reduce->add_option("--output", output);
    reduce->add_option("--from", from);
    reduce->add_option("--to", to)
        ->check(CLI::IsMember({"bcfip", "planar-bcfip", "dspeip", "mpmeip", "mmeip"}));
    reduce->add_option("--k", k);
    reduce->add_option("--budget", budget);

    CLI::App* verify = app.add_subcommand("verify", "verify the chain on a small instance");
    verify->add_option("--input", input)->required();
    verify->add_option("--k", k)->required();
    verify->add_option("--oracle-cap", oracle_cap);

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive reference solver");
    oracle->add_option("--input", input)->required();
    oracle->add_option("--output", output);
    oracle->add_option("--problem", problem);
    oracle->add_option("--budget", budget);
    oracle->add_option("--oracle-cap", oracle_cap);

    CLI::App* bench = app.add_subcommand("bench", "seeded benchmark table");
    bench->add_option("--output", output);
    bench->add_option("--trials", trials);
    bench->add_option("--seed", seed);
    bench->add_option("--eps", eps);
    bench->add_option("--budget", bench_budget);
    bench->add_option("--oracle-cap", oracle_cap);
    bench->add_flag("--timing", timing);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed())
            return cmd_solve(input, output, method, eps, budget, strict_width, oracle_cap);
        if (reduce->parsed()) return cmd_reduce(input, output, from, to, k, budget);
        if (verify->parsed()) return cmd_verify(input, k, oracle_cap);
        if (oracle->parsed()) return cmd_oracle(input, output, problem, budget, oracle_cap);
        if (bench->parsed())
            return cmd_bench(output, trials, seed, eps, bench_budget, oracle_cap, timing);
    } catch (const TooLargeForOracle& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return kExitResourceCap;
    } catch (const StateExplosion& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return kExitResourceCap;
    } catch (const Error& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return kExitRejected;
    } catch (const std::exception& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return kExitRejected;
    }
    return 0;
}
