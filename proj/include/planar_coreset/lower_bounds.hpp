#ifndef PLANAR_CORESET_LOWER_BOUNDS_HPP_
#define PLANAR_CORESET_LOWER_BOUNDS_HPP_

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "planar_coreset/graph.hpp"
#include "planar_coreset/structures.hpp"

namespace planar_coreset {

namespace detail {

// Heap indexing for complete binary trees: children of i are 2i+1, 2i+2.
inline VertexId heap_parent(VertexId v) { return (v - 1) / 2; }
inline VertexId heap_sibling(VertexId v) { return (v % 2 == 1) ? v + 1 : v - 1; }
inline long heap_depth(VertexId v) {
    long d = 0;
    while (v != 0) {
        v = heap_parent(v);
        ++d;
    }
    return d;
}

}  // namespace detail

/// Mirrored pair of complete binary trees of height k whose matching edges
/// join every non-root vertex v to the mirror of its sibling with weight
/// 2*depth(v)-1. The leaf/mirror-leaf pairs form a (2k-1)-comatching of size
/// 2^k. Vertices 0..2^{k+1}-2 are the top tree in heap order, the bottom tree
/// follows at offset 2^{k+1}-1 with mirror(v) = v + offset.
struct SokoFamily {
    WeightedGraph graph;
    std::vector<std::pair<VertexId, VertexId>> pairs;  // (leaf, mirror leaf)
    long k = 0;
};

inline SokoFamily gen_soko(long k) {
    if (k < 3) throw InputError("gen_soko: k must be at least 3");
    const std::size_t per_tree = (std::size_t{1} << (k + 1)) - 1;
    const auto offset = static_cast<VertexId>(per_tree);
    std::vector<Edge> edges;
    for (VertexId v = 1; v < per_tree; ++v) {
        edges.push_back({detail::heap_parent(v), v, 1.0});
        edges.push_back({detail::heap_parent(v) + offset, v + offset, 1.0});
        double w = 2.0 * static_cast<double>(detail::heap_depth(v)) - 1.0;
        edges.push_back({v, detail::heap_sibling(v) + offset, w});
    }
    const auto first_leaf = static_cast<VertexId>((std::size_t{1} << k) - 1);
    std::map<VertexId, std::string> labels;
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId l = first_leaf; l < per_tree; ++l) {
        auto idx = std::to_string(l - first_leaf);
        labels[l] = "leaf-" + idx;
        labels[l + offset] = "mirror-" + idx;
        pairs.push_back({l, l + offset});
    }
    return {WeightedGraph(2 * per_tree, std::move(edges), std::move(labels)),
            std::move(pairs), k};
}

/// Full binary tree of depth k with a pendant path of length depth(v) hung
/// off every non-root vertex v, ending in hat(v). Each leaf v is matched with
/// the hats of the siblings along its root path: dist(v, X_v) = k+2 while
/// any other leaf reaches some member at distance k.
struct TreeFamily {
    WeightedGraph graph;
    std::vector<KTupleFamily::Entry> entries;  // (leaf, its k hat vertices)
    long k = 0;
    std::vector<VertexId> hat;  // hat[v] for v != 0; hat[0] unused
};

inline TreeFamily gen_tree_k(long k) {
    if (k < 1) throw InputError("gen_tree_k: k must be at least 1");
    const std::size_t tree_size = (std::size_t{1} << (k + 1)) - 1;
    std::vector<Edge> edges;
    std::size_t next = tree_size;
    std::vector<VertexId> hat(tree_size, 0);
    for (VertexId v = 1; v < tree_size; ++v) {
        edges.push_back({detail::heap_parent(v), v, 1.0});
        long h = detail::heap_depth(v);
        VertexId tail = v;
        for (long step = 0; step < h; ++step) {
            auto fresh = static_cast<VertexId>(next++);
            edges.push_back({tail, fresh, 1.0});
            tail = fresh;
        }
        hat[v] = tail;
    }
    const auto first_leaf = static_cast<VertexId>((std::size_t{1} << k) - 1);
    std::map<VertexId, std::string> labels;
    std::vector<KTupleFamily::Entry> entries;
    for (VertexId leaf = first_leaf; leaf < tree_size; ++leaf) {
        labels[leaf] = "leaf-" + std::to_string(leaf - first_leaf);
        KTupleFamily::Entry entry;
        entry.p = leaf;
        for (VertexId u = leaf; u != 0; u = detail::heap_parent(u))
            entry.points.push_back(hat[detail::heap_sibling(u)]);
        entries.push_back(std::move(entry));
    }
    for (VertexId v = 1; v < tree_size; ++v)
        labels.try_emplace(hat[v], "hat-" + std::to_string(v));
    return {WeightedGraph(next, std::move(edges), std::move(labels)), std::move(entries), k,
            std::move(hat)};
}

/// Nested cycle gadgets realizing a (k,d)-comatching of size
/// prod_i (1 + k_i(2 d_i + 1)) in a planar unit-weight graph. Level i
/// consists of a cycle of that length, spokes of length d_i from the gadget
/// root to every cycle vertex, and pendant paths of length d_1+...+d_{i-1}
/// ending in the hat vertices that the comatching sets use.
struct PlanarFamily {
    WeightedGraph graph;
    std::vector<KTupleFamily::Entry> entries;
    long k = 0, d = 0, h = 0;
    std::vector<long> k_parts, d_parts;
    std::vector<long> cycle_lengths;    // per level
    std::vector<long> pendant_lengths;  // per level
};

namespace detail {

struct PlanarGadget {
    long level = 0;  // 0-based
    std::vector<VertexId> cycle;
    std::vector<VertexId> hats;       // hat per cycle position
    std::vector<std::size_t> child;   // child gadget index per cycle position
    std::size_t parent = 0;           // parent gadget index (self for level 0)
    std::size_t parent_pos = 0;       // cycle position of our root in the parent
};

}  // namespace detail

inline PlanarFamily gen_planar_kd(long k, long d) {
    if (k < 1 || d < 1) throw InputError("gen_planar_kd: k and d must be positive");
    const long h = std::min(k, d);
    PlanarFamily fam;
    fam.k = k;
    fam.d = d;
    fam.h = h;
    // Split as evenly as possible, larger parts at smaller indices.
    for (long i = 0; i < h; ++i) {
        fam.k_parts.push_back(k / h + (i < k % h ? 1 : 0));
        fam.d_parts.push_back(d / h + (i < d % h ? 1 : 0));
    }
    long pendant = 0;
    for (long i = 0; i < h; ++i) {
        fam.cycle_lengths.push_back(1 + fam.k_parts[i] * (2 * fam.d_parts[i] + 1));
        fam.pendant_lengths.push_back(pendant);
        pendant += fam.d_parts[i];
    }

    std::vector<Edge> edges;
    std::size_t next = 0;
    auto fresh = [&]() { return static_cast<VertexId>(next++); };
    auto path_from = [&](VertexId from, long length) {
        VertexId tail = from;
        for (long s = 0; s < length; ++s) {
            VertexId nv = fresh();
            edges.push_back({tail, nv, 1.0});
            tail = nv;
        }
        return tail;
    };

    std::vector<detail::PlanarGadget> gadgets;
    VertexId global_root = fresh();
    // Breadth-first construction of the gadget tree.
    auto build = [&](std::size_t parent_idx, std::size_t parent_pos, long level,
                     VertexId root) {
        detail::PlanarGadget g;
        g.level = level;
        g.parent = parent_idx;
        g.parent_pos = parent_pos;
        const long len = fam.cycle_lengths[level];
        for (long c = 0; c < len; ++c) g.cycle.push_back(fresh());
        for (long c = 0; c < len; ++c)
            edges.push_back({g.cycle[c], g.cycle[(c + 1) % len], 1.0});
        for (long c = 0; c < len; ++c) {
            // spoke of length d_i from the root to each cycle vertex
            VertexId tail = path_from(root, fam.d_parts[level] - 1);
            edges.push_back({tail, g.cycle[c], 1.0});
            g.hats.push_back(path_from(g.cycle[c], fam.pendant_lengths[level]));
        }
        g.child.assign(len, SIZE_MAX);
        gadgets.push_back(std::move(g));
        return gadgets.size() - 1;
    };
    std::size_t root_gadget = build(0, 0, 0, global_root);
    std::vector<std::size_t> frontier{root_gadget};
    for (long level = 1; level < h; ++level) {
        std::vector<std::size_t> next_frontier;
        for (std::size_t gi : frontier) {
            for (std::size_t pos = 0; pos < gadgets[gi].cycle.size(); ++pos) {
                std::size_t ci = build(gi, pos, level, gadgets[gi].cycle[pos]);
                gadgets[gi].child[pos] = ci;
                next_frontier.push_back(ci);
            }
        }
        frontier = std::move(next_frontier);
    }

    // Members of the comatching: all cycle vertices of the deepest level.
    // X_v collects, level by level along the upward chain, the hats of the
    // middle vertices of the k_i arcs of the cycle with v's chain vertex
    // removed.
    std::map<VertexId, std::string> labels;
    for (std::size_t gi : frontier) {
        for (std::size_t pos = 0; pos < gadgets[gi].cycle.size(); ++pos) {
            KTupleFamily::Entry entry;
            entry.p = gadgets[gi].cycle[pos];
            labels[entry.p] = "member-" + std::to_string(fam.entries.size());
            std::size_t cg = gi;
            std::size_t cp = pos;
            for (long level = h - 1; level >= 0; --level) {
                const auto& g = gadgets[cg];
                const long len = fam.cycle_lengths[level];
                const long ki = fam.k_parts[level];
                const long di = fam.d_parts[level];
                for (long j = 0; j < ki; ++j) {
                    long mid = (static_cast<long>(cp) + 1 + j * (2 * di + 1) + di) % len;
                    entry.points.push_back(g.hats[mid]);
                }
                cp = g.parent_pos;
                cg = g.parent;
            }
            fam.entries.push_back(std::move(entry));
        }
    }
    fam.graph = WeightedGraph(next, std::move(edges), std::move(labels));
    return fam;
}

struct LowerBoundReport {
    bool ok = true;
    std::size_t entry_i = 0;
    std::size_t entry_j = 0;
    double observed = 0.0;
    std::string rule;
};

/// Exhaustive verification of the (k,d)-comatching conditions by fresh
/// shortest-path runs: dist(v, X_v) > d for every entry and
/// dist(v, X_w) <= d for every ordered pair of distinct entries.
inline LowerBoundReport verify_lower_bound(const WeightedGraph& graph,
                                           const std::vector<KTupleFamily::Entry>& entries,
                                           long k, long d) {
    if (k < 1 || d < 1) throw InputError("verify_lower_bound: k and d must be positive");
    for (const auto& e : entries) {
        if (e.p >= graph.vertex_count()) throw InputError("verify_lower_bound: bad member id");
        if (e.points.empty() || e.points.size() > static_cast<std::size_t>(k))
            throw InputError("verify_lower_bound: entry set size out of range");
        for (VertexId x : e.points)
            if (x >= graph.vertex_count()) throw InputError("verify_lower_bound: bad set id");
    }
    const auto threshold = static_cast<double>(d);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        auto row = sssp(graph, entries[i].p);
        auto dist_to = [&](const std::vector<VertexId>& xs) {
            double best = kUnreachable;
            for (VertexId x : xs) best = std::min(best, row[x]);
            return best;
        };
        double own = dist_to(entries[i].points);
        if (!(own > threshold)) return {false, i, i, own, "diagonal"};
        for (std::size_t j = 0; j < entries.size(); ++j) {
            if (i == j) continue;
            double cross = dist_to(entries[j].points);
            if (!(cross <= threshold)) return {false, i, j, cross, "cross"};
        }
    }
    return {};
}

/// True when every edge of the graph lies on a shortest path between p_i and
/// q_j for some pair of distinct indices; comatchings on such instances have
/// graph diameter at most 3R.
inline bool marks_cross_path_coverage(const DistanceOracle& oracle,
                                      const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    const WeightedGraph& g = oracle.graph();
    for (const Edge& e : g.edges()) {
        bool covered = false;
        for (std::size_t i = 0; i < pairs.size() && !covered; ++i) {
            const auto& from_p = oracle.from(pairs[i].first);
            for (std::size_t j = 0; j < pairs.size() && !covered; ++j) {
                if (i == j) continue;
                const auto& from_q = oracle.from(pairs[j].second);
                double target = oracle.dist(pairs[i].first, pairs[j].second);
                double tol = 1e-9 * std::max(1.0, target);
                if (std::abs(from_p[e.u] + e.w + from_q[e.v] - target) <= tol ||
                    std::abs(from_p[e.v] + e.w + from_q[e.u] - target) <= tol)
                    covered = true;
            }
        }
        if (!covered) return false;
    }
    return true;
}

}  // namespace planar_coreset

#endif  // PLANAR_CORESET_LOWER_BOUNDS_HPP_
