#ifndef PLANAR_CORESET_IO_HPP_
#define PLANAR_CORESET_IO_HPP_

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "planar_coreset/coreset.hpp"
#include "planar_coreset/graph.hpp"
#include "planar_coreset/kcenter.hpp"
#include "planar_coreset/structures.hpp"

namespace planar_coreset {

using nlohmann::json;

/// On-disk instance: graph, designated point set (defaults to all vertices)
/// and free-form metadata that generators use to carry family structure.
struct Instance {
    WeightedGraph graph;
    PointSet points;
    json meta = json::object();
};

inline json to_json(const WeightedGraph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, e.w});
    json labels = json::object();
    for (const auto& [v, tag] : g.labels()) labels[std::to_string(v)] = tag;
    return json{{"n", g.vertex_count()}, {"edges", edges}, {"labels", labels}};
}

inline json to_json(const Instance& inst) {
    json j = to_json(inst.graph);
    j["points"] = inst.points.members();
    j["meta"] = inst.meta;
    return j;
}

inline Instance instance_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("edges"))
        throw InputError("instance: missing required fields n/edges");
    std::size_t n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 3) throw InputError("instance: edge must be [u,v,w]");
        edges.push_back({e[0].get<VertexId>(), e[1].get<VertexId>(), e[2].get<double>()});
    }
    std::map<VertexId, std::string> labels;
    if (j.contains("labels")) {
        for (const auto& [key, value] : j.at("labels").items())
            labels[static_cast<VertexId>(std::stoul(key))] = value.get<std::string>();
    }
    Instance inst{WeightedGraph(n, std::move(edges), std::move(labels)), PointSet{}, json::object()};
    if (j.contains("points") && !j.at("points").empty()) {
        std::vector<VertexId> pts;
        for (const auto& p : j.at("points")) {
            auto id = p.get<VertexId>();
            if (id >= n) throw InputError("instance: point id out of range");
            pts.push_back(id);
        }
        inst.points = PointSet(std::move(pts));
    } else {
        std::vector<VertexId> all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<VertexId>(i);
        inst.points = PointSet(std::move(all));
    }
    if (j.contains("meta")) inst.meta = j.at("meta");
    return inst;
}

inline json to_json(const PairFamily& fam) {
    json items = json::array();
    for (auto [p, q] : fam.pairs) items.push_back({p, q});
    return json{{"kind", to_string(fam.kind)},
                {"R", fam.radius},
                {"eps", fam.epsilon},
                {"items", items}};
}

inline json to_json(const TripleFamily& fam) {
    json items = json::array();
    for (const auto& t : fam.triples) items.push_back({t[0], t[1], t[2]});
    return json{{"kind", "double-ladder"}, {"R", fam.radius}, {"eps", fam.epsilon}, {"items", items}};
}

inline json to_json(const KTupleFamily& fam) {
    json items = json::array();
    for (const auto& e : fam.entries) items.push_back({e.p, e.points});
    return json{{"kind", "k-comatching"},
                {"k", fam.k},
                {"R", fam.radius},
                {"eps", fam.epsilon},
                {"items", items}};
}

inline LadderKind ladder_kind_from_string(const std::string& s) {
    if (s == "semi-ladder") return LadderKind::SemiLadder;
    if (s == "ladder") return LadderKind::Ladder;
    if (s == "comatching") return LadderKind::Comatching;
    throw InputError("unknown family kind: " + s);
}

inline PairFamily pair_family_from_json(const json& j) {
    PairFamily fam;
    fam.kind = ladder_kind_from_string(j.at("kind").get<std::string>());
    fam.radius = j.at("R").get<double>();
    fam.epsilon = j.at("eps").get<double>();
    for (const auto& item : j.at("items")) {
        if (!item.is_array() || item.size() != 2) throw InputError("pair family: item must be [p,q]");
        fam.pairs.push_back({item[0].get<VertexId>(), item[1].get<VertexId>()});
    }
    return fam;
}

inline TripleFamily triple_family_from_json(const json& j) {
    TripleFamily fam;
    fam.radius = j.at("R").get<double>();
    fam.epsilon = j.at("eps").get<double>();
    for (const auto& item : j.at("items")) {
        if (!item.is_array() || item.size() != 3)
            throw InputError("triple family: item must be [p,t,b]");
        fam.triples.push_back({item[0].get<VertexId>(), item[1].get<VertexId>(),
                               item[2].get<VertexId>()});
    }
    return fam;
}

inline KTupleFamily k_family_from_json(const json& j) {
    KTupleFamily fam;
    fam.k = j.at("k").get<int>();
    fam.radius = j.at("R").get<double>();
    fam.epsilon = j.at("eps").get<double>();
    for (const auto& item : j.at("items")) {
        if (!item.is_array() || item.size() != 2)
            throw InputError("k family: item must be [p,[x...]]");
        KTupleFamily::Entry e;
        e.p = item[0].get<VertexId>();
        for (const auto& x : item[1]) e.points.push_back(x.get<VertexId>());
        fam.entries.push_back(std::move(e));
    }
    return fam;
}

/// Debug dump: one 0/1 row per set over the universe.
inline json to_json(const SetSystem& sys) {
    json rows = json::array();
    for (const Bitset& s : sys.sets()) {
        json row = json::array();
        for (std::size_t u = 0; u < sys.universe_size(); ++u)
            row.push_back(s.test(u) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    return json{{"universe", sys.universe_size()}, {"sets", rows}};
}

inline json to_json(const ValidationResult& res) {
    json j{{"ok", res.ok}};
    if (res.violation) {
        j["violation"] = {{"i", res.violation->i},
                          {"j", res.violation->j},
                          {"observed", res.violation->observed},
                          {"bound", res.violation->bound},
                          {"rule", res.violation->rule}};
    }
    return j;
}

inline json to_json(const BucketInfo& b) {
    return json{{"i", b.index},
                {"tau_star", b.tau_star},
                {"lp_lower", b.lp_lower},
                {"lp_converged", b.lp_converged},
                {"set_count", b.set_count},
                {"sample_size", b.sample_size},
                {"fallback", b.fallback},
                {"seed", b.seed},
                {"hit_set", b.hit_set.members()}};
}

inline json to_json(const CoresetResult& r) {
    json buckets = json::array();
    for (const auto& b : r.buckets) buckets.push_back(to_json(b));
    json j{{"method", r.method},
           {"eps", r.epsilon},
           {"seed", r.seed},
           {"Delta", r.Delta},
           {"delta", r.delta},
           {"coreset", r.coreset.members()},
           {"buckets", buckets},
           {"params", {{"c", r.params.c}, {"d", r.params.d}, {"gamma", r.params.gamma}}}};
    if (r.far_point) j["far_point"] = *r.far_point;
    return j;
}

inline json to_json(const KCoresetResult& r) {
    json buckets = json::array();
    for (const auto& b : r.buckets) buckets.push_back(to_json(b));
    return json{{"k", r.k},
                {"eps", r.epsilon},
                {"seed", r.seed},
                {"Delta", r.Delta},
                {"delta", r.delta},
                {"alpha0", r.alpha0},
                {"coreset", r.coreset.members()},
                {"buckets", buckets},
                {"params", {{"c", r.params.c}, {"d", r.params.d}, {"gamma", r.params.gamma}}}};
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

inline void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace planar_coreset

#endif  // PLANAR_CORESET_IO_HPP_
