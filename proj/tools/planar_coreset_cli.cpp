// Command-line front end: generators, coreset constructors, validators and
// sweep experiments over instance JSON files.
//
// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 cap exceeded.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "planar_coreset/planar_coreset.hpp"

namespace pc = planar_coreset;
using pc::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;

struct Options {
    std::string format = "json";
};

void emit_report(const Options& opts, const json& report) {
    if (opts.format == "csv") {
        for (const auto& [key, value] : report.items()) {
            if (value.is_structured())
                std::cout << key << "," << value.dump() << "\n";
            else
                std::cout << key << "," << (value.is_string() ? value.get<std::string>()
                                                              : value.dump())
                          << "\n";
        }
    } else {
        std::cout << report.dump(2) << "\n";
    }
}

pc::Instance load_instance(const std::string& path) {
    return pc::instance_from_json(pc::load_json_file(path));
}

pc::WeightDist parse_weights(const std::string& name, double lo, double hi) {
    if (name == "unit") return pc::WeightDist::unit();
    if (name == "uniform") return pc::WeightDist::uniform_real(lo, hi);
    if (name == "int")
        return pc::WeightDist::uniform_int(static_cast<long>(lo), static_cast<long>(hi));
    throw pc::InputError("unknown weight distribution: " + name);
}

json entries_to_meta(const std::vector<pc::KTupleFamily::Entry>& entries) {
    json out = json::array();
    for (const auto& e : entries) out.push_back({e.p, e.points});
    return out;
}

std::vector<pc::KTupleFamily::Entry> entries_from_meta(const json& meta) {
    std::vector<pc::KTupleFamily::Entry> entries;
    if (meta.contains("entries")) {
        for (const auto& item : meta.at("entries")) {
            pc::KTupleFamily::Entry e;
            e.p = item[0].get<pc::VertexId>();
            for (const auto& x : item[1]) e.points.push_back(x.get<pc::VertexId>());
            entries.push_back(std::move(e));
        }
    } else if (meta.contains("pairs")) {
        for (const auto& item : meta.at("pairs"))
            entries.push_back({item[0].get<pc::VertexId>(), {item[1].get<pc::VertexId>()}});
    } else {
        throw pc::InputError("instance meta carries neither pairs nor entries");
    }
    return entries;
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    if (out.empty()) throw pc::InputError("empty list: " + csv);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> parse_sizes(const std::string& csv) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto x = item.find('x');
        if (x == std::string::npos) throw pc::InputError("size must look like 5x5: " + item);
        out.push_back({std::stoul(item.substr(0, x)), std::stoul(item.substr(x + 1))});
    }
    if (out.empty()) throw pc::InputError("empty size list");
    return out;
}

std::size_t thread_budget() {
    std::size_t n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("PLANAR_CORESET_THREADS")) {
        long parsed = std::strtol(env, nullptr, 10);
        if (parsed >= 1) n = std::min<std::size_t>(n, static_cast<std::size_t>(parsed));
    }
    return n;
}

struct SweepRow {
    std::size_t w = 0, h = 0, n = 0;
    std::uint64_t seed = 0;
    std::size_t trial = 0;
    std::string method;
    double eps = 0.0;
    std::size_t coreset_size = 0;
    double tau_star_sum = 0.0;
    double wall_ms = 0.0;
    bool verified = false;
};

int run_sweep(const std::string& eps_csv, const std::string& sizes_csv, std::size_t trials,
              std::uint64_t seed, const std::string& weights_name, const std::string& csv_out) {
    auto eps_list = parse_double_list(eps_csv);
    auto sizes = parse_sizes(sizes_csv);
    if (trials == 0) throw pc::InputError("sweep: trials must be positive");

    struct Task {
        std::size_t size_idx, trial;
    };
    std::vector<Task> tasks;
    for (std::size_t s = 0; s < sizes.size(); ++s)
        for (std::size_t t = 0; t < trials; ++t) tasks.push_back({s, t});

    std::vector<std::vector<SweepRow>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    auto worker = [&]() {
        while (true) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= tasks.size() || failed.load()) return;
            const auto [size_idx, trial] = tasks[idx];
            const auto [w, h] = sizes[size_idx];
            std::uint64_t inst_seed = pc::derive_seed(seed, size_idx * 10007 + trial);
            auto g = pc::grid(w, h, parse_weights(weights_name, 1, 10), inst_seed);
            pc::DistanceOracle oracle(g);
            std::vector<pc::VertexId> ids(g.vertex_count());
            for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<pc::VertexId>(i);
            pc::PointSet points(ids);
            for (double eps : eps_list) {
                for (std::string method : {"greedy", "lp"}) {
                    SweepRow row;
                    row.w = w;
                    row.h = h;
                    row.n = g.vertex_count();
                    row.seed = inst_seed;
                    row.trial = trial;
                    row.method = method;
                    row.eps = eps;
                    auto start = std::chrono::steady_clock::now();
                    pc::PointSet coreset;
                    if (method == "greedy") {
                        coreset = pc::greedy_coreset(oracle, points, eps).coreset;
                    } else {
                        auto r = pc::lp_coreset(oracle, points, eps, inst_seed);
                        coreset = r.coreset;
                        for (const auto& b : r.buckets) row.tau_star_sum += b.tau_star;
                    }
                    row.wall_ms = std::chrono::duration<double, std::milli>(
                                      std::chrono::steady_clock::now() - start)
                                      .count();
                    row.coreset_size = coreset.size();
                    row.verified = pc::verify_coreset(oracle, points, coreset, eps).ok;
                    if (!row.verified) failed.store(true);
                    results[idx].push_back(row);
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < std::min(thread_budget(), tasks.size()); ++t)
        pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::ofstream out(csv_out);
    if (!out) throw pc::InputError("cannot write csv: " + csv_out);
    out << "w,h,n,weights,seed,trial,method,eps,coreset_size,tau_star_sum,wall_ms,verified\n";
    for (const auto& group : results) {
        for (const auto& row : group) {
            out << row.w << "," << row.h << "," << row.n << "," << weights_name << ","
                << row.seed << "," << row.trial << "," << row.method << "," << row.eps << ","
                << row.coreset_size << "," << row.tau_star_sum << "," << row.wall_ms << ","
                << (row.verified ? 1 : 0) << "\n";
        }
    }
    return failed.load() ? kExitVerifyFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"furthest-neighbor and k-center coreset toolkit for graph metrics"};
    app.require_subcommand(1);
    Options opts;
    app.add_option("--format", opts.format, "report format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // ---- gen ------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate instances");
    gen->require_subcommand(1);
    struct {
        std::size_t w = 5, h = 5, points = 0, rounds = 10;
        long k = 3, d = 1;
        std::uint64_t seed = 0;
        double lo = 1, hi = 10;
        std::string weights = "unit", in, out;
    } g;

    auto* gen_grid = gen->add_subcommand("grid", "w x h grid instance");
    gen_grid->add_option("--width", g.w);
    gen_grid->add_option("--height", g.h);
    gen_grid->add_option("--weights", g.weights)->check(CLI::IsMember({"unit", "uniform", "int"}));
    gen_grid->add_option("--lo", g.lo);
    gen_grid->add_option("--hi", g.hi);
    gen_grid->add_option("--seed", g.seed);
    gen_grid->add_option("--points", g.points, "random point subset size (0 = all vertices)");
    gen_grid->add_option("--out", g.out)->required();

    auto* gen_subdiv = gen->add_subcommand("subdiv", "subdivide random edges of an instance");
    gen_subdiv->add_option("--in", g.in)->required();
    gen_subdiv->add_option("--rounds", g.rounds);
    gen_subdiv->add_option("--seed", g.seed);
    gen_subdiv->add_option("--out", g.out)->required();

    auto* gen_soko_cmd = gen->add_subcommand("soko", "mirrored-tree comatching family");
    gen_soko_cmd->add_option("--k", g.k)->required();
    gen_soko_cmd->add_option("--out", g.out)->required();

    auto* gen_treek = gen->add_subcommand("treek", "binary tree (k,k)-comatching family");
    gen_treek->add_option("--k", g.k)->required();
    gen_treek->add_option("--out", g.out)->required();

    auto* gen_planarkd = gen->add_subcommand("planarkd", "nested cycle (k,d)-comatching family");
    gen_planarkd->add_option("--k", g.k)->required();
    gen_planarkd->add_option("--d", g.d)->required();
    gen_planarkd->add_option("--out", g.out)->required();

    // ---- coreset ---------------------------------------------------------
    auto* coreset = app.add_subcommand("coreset", "construct furthest-neighbor coresets");
    coreset->require_subcommand(1);
    struct {
        double eps = 0.25, gamma = 0.05, c = 8.0;
        std::uint64_t seed = 0;
        std::string in, out;
    } cs;
    auto* cs_greedy = coreset->add_subcommand("greedy", "greedy witness loop");
    auto* cs_lp = coreset->add_subcommand("lp", "LP + rounding pipeline");
    for (auto* cmd : {cs_greedy, cs_lp}) {
        cmd->add_option("--eps", cs.eps)->required();
        cmd->add_option("--seed", cs.seed);
        cmd->add_option("--in", cs.in)->required();
        cmd->add_option("--out", cs.out)->required();
    }
    cs_lp->add_option("--gamma", cs.gamma);
    cs_lp->add_option("--c", cs.c);

    // ---- kcoreset ----------------------------------------------------------
    auto* kcoreset = app.add_subcommand("kcoreset", "k-center coreset (desk-scale caps)");
    struct {
        int k = 2;
        double eps = 0.25;
        std::uint64_t seed = 0;
        std::size_t max_n = 40;
        int max_k = 2;
        std::string in, out;
    } kc;
    kcoreset->add_option("--k", kc.k)->required();
    kcoreset->add_option("--eps", kc.eps)->required();
    kcoreset->add_option("--seed", kc.seed);
    kcoreset->add_option("--max-n", kc.max_n);
    kcoreset->add_option("--max-k", kc.max_k);
    kcoreset->add_option("--in", kc.in)->required();
    kcoreset->add_option("--out", kc.out)->required();

    // ---- verify ------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "certify results and families");
    verify->require_subcommand(1);
    struct {
        std::string in, result, family;
        double eps = -1.0;
        int k = -1;
        long d = 0;
    } vf;
    auto* v_coreset = verify->add_subcommand("coreset", "brute-force coreset check");
    auto* v_kcoreset = verify->add_subcommand("kcoreset", "brute-force k-center check");
    for (auto* cmd : {v_coreset, v_kcoreset}) {
        cmd->add_option("--in", vf.in)->required();
        cmd->add_option("--result", vf.result)->required();
        cmd->add_option("--eps", vf.eps, "override the eps recorded in the result");
    }
    auto* v_com = verify->add_subcommand("comatching", "pair family, all-cross pattern");
    auto* v_lad = verify->add_subcommand("ladder", "pair family, strict order pattern");
    auto* v_semi = verify->add_subcommand("semiladder", "pair family, prefix pattern");
    auto* v_dl = verify->add_subcommand("doubleladder", "triple family");
    auto* v_kcom = verify->add_subcommand("kcomatching", "(k,eps) family");
    for (auto* cmd : {v_com, v_lad, v_semi, v_dl, v_kcom}) {
        cmd->add_option("--in", vf.in)->required();
        cmd->add_option("--family", vf.family)->required();
    }
    auto* v_lb = verify->add_subcommand("lowerbound", "generated family distance identities");
    v_lb->add_option("--in", vf.in)->required();
    v_lb->add_option("--d", vf.d)->required();
    v_lb->add_option("--k", vf.k, "override the k recorded in instance meta");

    // ---- comatching max -----------------------------------------------------
    auto* com = app.add_subcommand("comatching", "comatching search");
    auto* com_max = com->add_subcommand("max", "exact maximum comatching");
    struct {
        std::string in, out;
        double eps = 0.2;
        std::size_t cap = 2000;
    } cm;
    com_max->add_option("--in", cm.in)->required();
    com_max->add_option("--eps", cm.eps)->required();
    com_max->add_option("--cap", cm.cap);
    com_max->add_option("--out", cm.out)->required();

    // ---- extract ramsey ------------------------------------------------------
    auto* extract = app.add_subcommand("extract", "structure extraction");
    auto* ex_ramsey = extract->add_subcommand(
        "ramsey", "comatching or double ladder from a (k,eps)-comatching");
    struct {
        std::string in, graph, out;
    } ex;
    ex_ramsey->add_option("--in", ex.in, "k-comatching family JSON")->required();
    ex_ramsey->add_option("--graph", ex.graph, "instance JSON")->required();
    ex_ramsey->add_option("--out", ex.out)->required();

    // ---- vc check --------------------------------------------------------------
    auto* vc = app.add_subcommand("vc", "VC dimension tools");
    auto* vc_check = vc->add_subcommand("check", "ball-system VC dimension bound");
    struct {
        std::string in;
        int d = 4;
        std::size_t cap = 30;
    } vcc;
    vc_check->add_option("--in", vcc.in)->required();
    vc_check->add_option("--d", vcc.d);
    vc_check->add_option("--cap", vcc.cap);

    // ---- sweep ----------------------------------------------------------------
    auto* sweep = app.add_subcommand("sweep", "grid benchmark sweep to CSV");
    struct {
        std::string eps_list, sizes, csv, weights = "int";
        std::size_t trials = 1;
        std::uint64_t seed = 0;
    } sw;
    sweep->add_option("--eps-list", sw.eps_list)->required();
    sweep->add_option("--sizes", sw.sizes)->required();
    sweep->add_option("--trials", sw.trials);
    sweep->add_option("--seed", sw.seed);
    sweep->add_option("--weights", sw.weights)->check(CLI::IsMember({"unit", "uniform", "int"}));
    sweep->add_option("--csv", sw.csv)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        // gen
        if (gen_grid->parsed()) {
            pc::Instance inst;
            inst.graph = pc::grid(g.w, g.h, parse_weights(g.weights, g.lo, g.hi), g.seed);
            if (g.points > 0) {
                inst.points = pc::random_point_subset(inst.graph, g.points,
                                                      pc::derive_seed(g.seed, 0xbeef));
            } else {
                std::vector<pc::VertexId> all(inst.graph.vertex_count());
                for (std::size_t i = 0; i < all.size(); ++i)
                    all[i] = static_cast<pc::VertexId>(i);
                inst.points = pc::PointSet(all);
            }
            inst.meta = {{"family", "grid"}, {"w", g.w}, {"h", g.h},
                         {"weights", g.weights}, {"seed", g.seed}};
            pc::save_json_file(g.out, pc::to_json(inst));
            return kExitOk;
        }
        if (gen_subdiv->parsed()) {
            auto inst = load_instance(g.in);
            inst.graph = pc::random_subdivision(inst.graph, g.rounds, g.seed);
            inst.meta["subdivided_rounds"] = g.rounds;
            inst.meta["subdivision_seed"] = g.seed;
            pc::save_json_file(g.out, pc::to_json(inst));
            return kExitOk;
        }
        if (gen_soko_cmd->parsed()) {
            auto fam = pc::gen_soko(g.k);
            pc::Instance inst;
            std::vector<pc::VertexId> points;
            json pairs = json::array();
            for (auto [l, m] : fam.pairs) {
                points.push_back(l);
                pairs.push_back({l, m});
            }
            inst.graph = std::move(fam.graph);
            inst.points = pc::PointSet(points);
            inst.meta = {{"family", "soko"}, {"k", g.k}, {"pairs", pairs}};
            pc::save_json_file(g.out, pc::to_json(inst));
            return kExitOk;
        }
        if (gen_treek->parsed()) {
            auto fam = pc::gen_tree_k(g.k);
            pc::Instance inst;
            std::vector<pc::VertexId> points;
            for (const auto& e : fam.entries) points.push_back(e.p);
            inst.meta = {{"family", "treek"}, {"k", g.k}, {"entries", entries_to_meta(fam.entries)}};
            inst.graph = std::move(fam.graph);
            inst.points = pc::PointSet(points);
            pc::save_json_file(g.out, pc::to_json(inst));
            return kExitOk;
        }
        if (gen_planarkd->parsed()) {
            auto fam = pc::gen_planar_kd(g.k, g.d);
            pc::Instance inst;
            std::vector<pc::VertexId> points;
            for (const auto& e : fam.entries) points.push_back(e.p);
            inst.meta = {{"family", "planarkd"}, {"k", g.k}, {"d", g.d},
                         {"entries", entries_to_meta(fam.entries)},
                         {"cycle_lengths", fam.cycle_lengths}};
            inst.graph = std::move(fam.graph);
            inst.points = pc::PointSet(points);
            pc::save_json_file(g.out, pc::to_json(inst));
            return kExitOk;
        }

        // coreset constructors: verify before declaring success
        if (cs_greedy->parsed() || cs_lp->parsed()) {
            auto inst = load_instance(cs.in);
            pc::DistanceOracle oracle(inst.graph);
            pc::CoresetResult result;
            if (cs_greedy->parsed()) {
                result = pc::greedy_coreset(oracle, inst.points, cs.eps);
            } else {
                pc::CoresetParams params;
                params.gamma = cs.gamma;
                params.c = cs.c;
                result = pc::lp_coreset(oracle, inst.points, cs.eps, cs.seed, params);
            }
            auto check = pc::verify_coreset(oracle, inst.points, result.coreset, cs.eps);
            pc::save_json_file(cs.out, pc::to_json(result));
            emit_report(opts, {{"ok", check.ok},
                               {"coreset_size", result.coreset.size()},
                               {"worst_query", check.worst_query},
                               {"worst_ratio", check.worst_ratio}});
            return check.ok ? kExitOk : kExitVerifyFailed;
        }
        if (kcoreset->parsed()) {
            auto inst = load_instance(kc.in);
            pc::DistanceOracle oracle(inst.graph);
            auto result = pc::kcenter_coreset(oracle, inst.points, kc.k, kc.eps, kc.seed,
                                              {kc.max_n, kc.max_k});
            auto check = pc::verify_kcenter(oracle, inst.points, result.coreset, kc.k, kc.eps);
            pc::save_json_file(kc.out, pc::to_json(result));
            emit_report(opts, {{"ok", check.ok},
                               {"coreset_size", result.coreset.size()},
                               {"worst_ratio", check.worst_ratio}});
            return check.ok ? kExitOk : kExitVerifyFailed;
        }

        // verify
        if (v_coreset->parsed() || v_kcoreset->parsed()) {
            auto inst = load_instance(vf.in);
            auto result_json = pc::load_json_file(vf.result);
            pc::DistanceOracle oracle(inst.graph);
            std::vector<pc::VertexId> q;
            for (const auto& v : result_json.at("coreset")) q.push_back(v.get<pc::VertexId>());
            pc::PointSet coreset(q);
            double eps = vf.eps > 0 ? vf.eps : result_json.at("eps").get<double>();
            if (v_coreset->parsed()) {
                auto check = pc::verify_coreset(oracle, inst.points, coreset, eps);
                emit_report(opts, {{"ok", check.ok},
                                   {"worst_query", check.worst_query},
                                   {"worst_ratio", check.worst_ratio}});
                return check.ok ? kExitOk : kExitVerifyFailed;
            }
            int k = result_json.at("k").get<int>();
            auto check = pc::verify_kcenter(oracle, inst.points, coreset, k, eps);
            emit_report(opts, {{"ok", check.ok},
                               {"worst_tuple", check.worst_tuple},
                               {"worst_ratio", check.worst_ratio}});
            return check.ok ? kExitOk : kExitVerifyFailed;
        }
        if (v_com->parsed() || v_lad->parsed() || v_semi->parsed()) {
            auto inst = load_instance(vf.in);
            pc::DistanceOracle oracle(inst.graph);
            auto fam = pc::pair_family_from_json(pc::load_json_file(vf.family));
            pc::ValidationResult res;
            if (v_com->parsed()) res = pc::validate_comatching(oracle, fam);
            if (v_lad->parsed()) res = pc::validate_ladder(oracle, fam);
            if (v_semi->parsed()) res = pc::validate_semi_ladder(oracle, fam);
            emit_report(opts, pc::to_json(res));
            return res.ok ? kExitOk : kExitVerifyFailed;
        }
        if (v_dl->parsed()) {
            auto inst = load_instance(vf.in);
            pc::DistanceOracle oracle(inst.graph);
            auto res = pc::validate_double_ladder(
                oracle, pc::triple_family_from_json(pc::load_json_file(vf.family)));
            emit_report(opts, pc::to_json(res));
            return res.ok ? kExitOk : kExitVerifyFailed;
        }
        if (v_kcom->parsed()) {
            auto inst = load_instance(vf.in);
            pc::DistanceOracle oracle(inst.graph);
            auto res = pc::validate_k_comatching(
                oracle, pc::k_family_from_json(pc::load_json_file(vf.family)));
            emit_report(opts, pc::to_json(res));
            return res.ok ? kExitOk : kExitVerifyFailed;
        }
        if (v_lb->parsed()) {
            auto inst = load_instance(vf.in);
            auto entries = entries_from_meta(inst.meta);
            long k = vf.k;
            if (k <= 0)  // arity of the comatching = largest entry set
                for (const auto& e : entries)
                    k = std::max(k, static_cast<long>(e.points.size()));
            auto report = pc::verify_lower_bound(inst.graph, entries, k, vf.d);
            emit_report(opts, {{"ok", report.ok},
                               {"rule", report.rule},
                               {"entry_i", report.entry_i},
                               {"entry_j", report.entry_j},
                               {"observed", report.observed},
                               {"k", k},
                               {"d", vf.d},
                               {"entries", entries.size()}});
            return report.ok ? kExitOk : kExitVerifyFailed;
        }

        if (com_max->parsed()) {
            auto inst = load_instance(cm.in);
            pc::DistanceOracle oracle(inst.graph);
            auto best = pc::max_comatching(oracle, cm.eps, {}, cm.cap);
            pc::save_json_file(cm.out, pc::to_json(best));
            emit_report(opts, {{"size", best.pairs.size()}, {"R", best.radius}});
            return kExitOk;
        }

        if (ex_ramsey->parsed()) {
            auto inst = load_instance(ex.graph);
            pc::DistanceOracle oracle(inst.graph);
            auto fam = pc::k_family_from_json(pc::load_json_file(ex.in));
            try {
                auto out = pc::ramsey_extract(oracle, fam);
                json doc;
                doc["index_set"] = out.index_set;
                if (out.comatching) {
                    doc["structure"] = "comatching";
                    doc["family"] = pc::to_json(*out.comatching);
                } else {
                    doc["structure"] = "double-ladder";
                    doc["family"] = pc::to_json(*out.double_ladder);
                }
                pc::save_json_file(ex.out, doc);
                emit_report(opts, {{"ok", true},
                                   {"structure", doc["structure"]},
                                   {"size", out.index_set.size()}});
                return kExitOk;
            } catch (const pc::RamseyCollapseError& e) {
                json trace = json::array();
                for (const auto& step : e.trace)
                    trace.push_back({{"coordinate", step.coordinate},
                                     {"graph", step.graph},
                                     {"clique", step.clique},
                                     {"before", step.size_before},
                                     {"after", step.size_after}});
                emit_report(opts, {{"ok", false}, {"error", e.what()}, {"trace", trace}});
                return kExitVerifyFailed;
            }
        }

        if (vc_check->parsed()) {
            auto inst = load_instance(vcc.in);
            pc::DistanceOracle oracle(inst.graph);
            auto sys = pc::ball_system(oracle, inst.points);
            bool ok = pc::vc_dim_at_most(sys, vcc.d, vcc.cap);
            emit_report(opts, {{"vc_at_most", ok},
                               {"d", vcc.d},
                               {"universe", sys.universe_size()},
                               {"distinct_sets", sys.set_count()}});
            return ok ? kExitOk : kExitVerifyFailed;
        }

        if (sweep->parsed())
            return run_sweep(sw.eps_list, sw.sizes, sw.trials, sw.seed, sw.weights, sw.csv);

        std::cerr << "no command selected\n";
        return kExitInputError;
    } catch (const pc::CapExceededError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const pc::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
