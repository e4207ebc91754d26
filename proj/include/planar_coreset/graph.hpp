#ifndef PLANAR_CORESET_GRAPH_HPP_
#define PLANAR_CORESET_GRAPH_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "planar_coreset/errors.hpp"

namespace planar_coreset {

using VertexId = std::uint32_t;

/// Marker for "unreachable" in distance arrays.
inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    double w = 0.0;
};

/// Undirected graph with strictly positive edge weights, immutable after
/// construction. Parallel edges are collapsed to the minimum weight;
/// self-loops are rejected. Vertices may carry optional string labels
/// (generators use them to mark terminals and gadget structure).
class WeightedGraph {
public:
    WeightedGraph() = default;

    WeightedGraph(std::size_t vertex_count, std::vector<Edge> edges,
                  std::map<VertexId, std::string> labels = {})
        : n_(vertex_count), labels_(std::move(labels)) {
        std::map<std::pair<VertexId, VertexId>, double> collapsed;
        for (const Edge& e : edges) {
            if (e.u >= n_ || e.v >= n_)
                throw InputError("edge endpoint out of range");
            if (e.u == e.v) throw InputError("self-loops are not allowed");
            if (!(e.w > 0.0)) throw InputError("edge weights must be strictly positive");
            auto key = std::minmax(e.u, e.v);
            auto [it, inserted] = collapsed.try_emplace({key.first, key.second}, e.w);
            if (!inserted) it->second = std::min(it->second, e.w);
        }
        for (const auto& [id, tag] : labels_) {
            (void)tag;
            if (id >= n_) throw InputError("label vertex id out of range");
        }
        adj_.resize(n_);
        edges_.reserve(collapsed.size());
        for (const auto& [key, w] : collapsed) {
            edges_.push_back({key.first, key.second, w});
            adj_[key.first].emplace_back(key.second, w);
            adj_[key.second].emplace_back(key.first, w);
        }
    }

    std::size_t vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::pair<VertexId, double>>& neighbors(VertexId v) const {
        return adj_.at(v);
    }
    const std::map<VertexId, std::string>& labels() const { return labels_; }

private:
    std::size_t n_ = 0;
    std::vector<std::vector<std::pair<VertexId, double>>> adj_;
    std::vector<Edge> edges_;
    std::map<VertexId, std::string> labels_;
};

/// Exact single-source shortest paths (Dijkstra). Unreachable vertices get
/// kUnreachable.
inline std::vector<double> sssp(const WeightedGraph& g, VertexId source) {
    if (source >= g.vertex_count()) throw InputError("sssp: invalid source id");
    std::vector<double> dist(g.vertex_count(), kUnreachable);
    using Item = std::pair<double, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist[source] = 0.0;
    queue.push({0.0, source});
    while (!queue.empty()) {
        auto [d, u] = queue.top();
        queue.pop();
        if (d > dist[u]) continue;
        for (auto [v, w] : g.neighbors(u)) {
            double nd = d + w;
            if (nd < dist[v]) {
                dist[v] = nd;
                queue.push({nd, v});
            }
        }
    }
    return dist;
}

/// Nonempty sorted set of vertex ids.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<VertexId> members) : members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    const std::vector<VertexId>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(VertexId v) const {
        return std::binary_search(members_.begin(), members_.end(), v);
    }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }
    bool operator==(const PointSet& other) const = default;

private:
    std::vector<VertexId> members_;
};

/// Caches per-source distance arrays over an immutable graph. Rows are filled
/// lazily on first request; concurrent fills of distinct sources are safe and
/// already-filled rows are served read-only without locking writers out.
class DistanceOracle {
public:
    explicit DistanceOracle(const WeightedGraph& g)
        : graph_(&g), rows_(g.vertex_count()) {}

    const WeightedGraph& graph() const { return *graph_; }

    const std::vector<double>& from(VertexId source) const {
        if (source >= graph_->vertex_count())
            throw InputError("DistanceOracle: invalid source id");
        {
            std::lock_guard<std::mutex> lock(mu_);
            if (rows_[source]) return *rows_[source];
        }
        auto row = std::make_shared<const std::vector<double>>(sssp(*graph_, source));
        std::lock_guard<std::mutex> lock(mu_);
        if (!rows_[source]) rows_[source] = std::move(row);
        return *rows_[source];
    }

    double dist(VertexId u, VertexId v) const { return from(u)[v]; }

private:
    const WeightedGraph* graph_;
    mutable std::mutex mu_;
    mutable std::vector<std::shared_ptr<const std::vector<double>>> rows_;
};

/// Furthest point of P from v together with its distance; ties broken toward
/// the smallest vertex id. All of P must be reachable from v.
inline std::pair<VertexId, double> furthest_neighbor(const DistanceOracle& oracle,
                                                     VertexId v, const PointSet& points) {
    if (points.empty()) throw InputError("furthest_neighbor: empty point set");
    const auto& row = oracle.from(v);
    VertexId best = 0;
    double best_d = -1.0;
    for (VertexId p : points) {
        if (p >= row.size()) throw InputError("furthest_neighbor: invalid point id");
        double d = row[p];
        if (d == kUnreachable)
            throw InputError("furthest_neighbor: point unreachable from query vertex");
        if (d > best_d) {
            best_d = d;
            best = p;
        }
    }
    return {best, best_d};
}

/// max_{u,v in P} dist(u,v); P must be mutually reachable.
inline double diameter(const DistanceOracle& oracle, const PointSet& points) {
    if (points.empty()) throw InputError("diameter: empty point set");
    double best = 0.0;
    for (VertexId u : points) {
        const auto& row = oracle.from(u);
        for (VertexId v : points) {
            if (row[v] == kUnreachable) throw InputError("diameter: disconnected point set");
            best = std::max(best, row[v]);
        }
    }
    return best;
}

/// min_{x in X} dist(v,x).
inline double dist_to_set(const DistanceOracle& oracle, VertexId v, const PointSet& x) {
    if (x.empty()) throw InputError("dist_to_set: empty set");
    double best = kUnreachable;
    const auto& row = oracle.from(v);
    for (VertexId p : x) best = std::min(best, row[p]);
    return best;
}

/// True iff every vertex of the graph is reachable from `source`.
inline bool is_connected_from(const DistanceOracle& oracle, VertexId source) {
    for (double d : oracle.from(source))
        if (d == kUnreachable) return false;
    return true;
}

}  // namespace planar_coreset

#endif  // PLANAR_CORESET_GRAPH_HPP_
