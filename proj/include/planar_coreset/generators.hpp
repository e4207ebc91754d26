#ifndef PLANAR_CORESET_GENERATORS_HPP_
#define PLANAR_CORESET_GENERATORS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "planar_coreset/graph.hpp"
#include "planar_coreset/random.hpp"

namespace planar_coreset {

struct WeightDist {
    enum class Kind { Unit, UniformReal, UniformInt };
    Kind kind = Kind::Unit;
    double lo = 1.0;
    double hi = 1.0;

    static WeightDist unit() { return {}; }
    static WeightDist uniform_real(double lo, double hi) {
        return {Kind::UniformReal, lo, hi};
    }
    static WeightDist uniform_int(long lo, long hi) {
        return {Kind::UniformInt, static_cast<double>(lo), static_cast<double>(hi)};
    }
};

/// w x h grid with vertex (r,c) -> r*w + c; planar by construction and
/// deterministic per seed.
inline WeightedGraph grid(std::size_t w, std::size_t h, const WeightDist& dist,
                          std::uint64_t seed) {
    if (w == 0 || h == 0) throw InputError("grid: dimensions must be positive");
    if (dist.kind != WeightDist::Kind::Unit && !(dist.lo <= dist.hi && dist.lo > 0))
        throw InputError("grid: weight range must satisfy 0 < lo <= hi");
    std::mt19937_64 rng(seed);
    auto draw = [&]() -> double {
        switch (dist.kind) {
            case WeightDist::Kind::Unit:
                return 1.0;
            case WeightDist::Kind::UniformReal:
                return dist.lo + uniform_unit(rng) * (dist.hi - dist.lo);
            case WeightDist::Kind::UniformInt: {
                auto span = static_cast<std::uint64_t>(dist.hi - dist.lo) + 1;
                return dist.lo + static_cast<double>(uniform_below(rng, span));
            }
        }
        return 1.0;
    };
    std::vector<Edge> edges;
    auto id = [&](std::size_t r, std::size_t c) {
        return static_cast<VertexId>(r * w + c);
    };
    for (std::size_t r = 0; r < h; ++r) {
        for (std::size_t c = 0; c < w; ++c) {
            if (c + 1 < w) edges.push_back({id(r, c), id(r, c + 1), draw()});
            if (r + 1 < h) edges.push_back({id(r, c), id(r + 1, c), draw()});
        }
    }
    return WeightedGraph(w * h, std::move(edges));
}

/// Replaces `rounds` random edges by two-edge paths of half weight each.
/// Distances among the original vertices are preserved exactly (halving is
/// exact in binary floating point).
inline WeightedGraph random_subdivision(const WeightedGraph& g, std::size_t rounds,
                                        std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::size_t n = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    for (std::size_t round = 0; round < rounds; ++round) {
        if (edges.empty()) break;
        std::size_t pick = static_cast<std::size_t>(uniform_below(rng, edges.size()));
        Edge e = edges[pick];
        auto mid = static_cast<VertexId>(n++);
        edges[pick] = {e.u, mid, e.w / 2.0};
        edges.push_back({mid, e.v, e.w / 2.0});
    }
    return WeightedGraph(n, std::move(edges), g.labels());
}

/// Deterministic m-element subset of the vertices.
inline PointSet random_point_subset(const WeightedGraph& g, std::size_t m,
                                    std::uint64_t seed) {
    std::size_t n = g.vertex_count();
    if (m == 0) throw InputError("random_point_subset: m must be positive");
    if (m > n) throw InputError("random_point_subset: m exceeds vertex count");
    std::mt19937_64 rng(seed);
    std::vector<VertexId> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<VertexId>(i);
    // Partial Fisher-Yates; first m slots form the sample.
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t j = i + static_cast<std::size_t>(uniform_below(rng, n - i));
        std::swap(ids[i], ids[j]);
    }
    ids.resize(m);
    return PointSet(std::move(ids));
}

}  // namespace planar_coreset

#endif  // PLANAR_CORESET_GENERATORS_HPP_
