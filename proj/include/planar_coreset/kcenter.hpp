#ifndef PLANAR_CORESET_KCENTER_HPP_
#define PLANAR_CORESET_KCENTER_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "planar_coreset/coreset.hpp"
#include "planar_coreset/graph.hpp"
#include "planar_coreset/hitting_set.hpp"

namespace planar_coreset {

struct KCenterCaps {
    std::size_t max_n = 40;  // tuple enumeration is n^k
    int max_k = 2;
};

struct KCoresetResult {
    PointSet coreset;
    int k = 1;
    double epsilon = 0.0;
    std::vector<VertexId> alpha0;  // k+1 spread points; answer all far tuples
    double Delta = 0.0;
    double delta = 0.0;
    std::vector<BucketInfo> buckets;
    CoresetParams params;
    std::uint64_t seed = 0;
};

/// Assumed VC dimension for bucket set systems whose sets are intersections
/// of k ball complements: the k-fold bound O(d k log k) with d = 4,
/// instantiated as ceil(4k(1 + log2(k+1))). The greedy fallback keeps the
/// construction correct regardless of the constant.
inline int kcenter_vc_dim(int k) {
    return static_cast<int>(
        std::ceil(4.0 * k * (1.0 + std::log2(static_cast<double>(k) + 1.0))));
}

namespace detail {

/// All nonempty center sets of size at most k, as sorted id vectors.
/// Repeated centers never change dist(., X), so subsets suffice.
inline std::vector<std::vector<VertexId>> enumerate_center_sets(std::size_t n, int k) {
    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> current;
    auto rec = [&](auto&& self, VertexId start) -> void {
        if (!current.empty()) out.push_back(current);
        if (current.size() == static_cast<std::size_t>(k)) return;
        for (VertexId v = start; v < n; ++v) {
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline double dist_to_tuple(const DistanceOracle& oracle, const std::vector<VertexId>& centers,
                            VertexId u) {
    double best = kUnreachable;
    for (VertexId c : centers) best = std::min(best, oracle.dist(c, u));
    return best;
}

/// Furthest point of P from the center set, ties toward the smallest id.
inline std::pair<VertexId, double> tuple_furthest(const DistanceOracle& oracle,
                                                  const std::vector<VertexId>& centers,
                                                  const PointSet& points) {
    VertexId best = 0;
    double best_d = -1.0;
    for (VertexId p : points) {
        double d = dist_to_tuple(oracle, centers, p);
        if (d == kUnreachable) throw InputError("k-center: point unreachable from tuple");
        if (d > best_d) {
            best_d = d;
            best = p;
        }
    }
    return {best, best_d};
}

}  // namespace detail

struct KCenterCheck {
    bool ok = false;
    std::vector<VertexId> worst_tuple;
    double worst_ratio = 1.0;
};

/// Brute force over every center set X with |X| <= k: some q in Q must
/// satisfy dist(q,X) >= (1-eps) max_{p in P} dist(p,X).
inline KCenterCheck verify_kcenter(const DistanceOracle& oracle, const PointSet& points,
                                   const PointSet& coreset, int k, double epsilon) {
    if (points.empty()) throw InputError("verify_kcenter: empty point set");
    if (k < 1) throw InputError("verify_kcenter: k must be positive");
    if (coreset.empty()) return {false, {}, 0.0};
    KCenterCheck check;
    check.ok = true;
    check.worst_ratio = std::numeric_limits<double>::infinity();
    auto tuples = detail::enumerate_center_sets(oracle.graph().vertex_count(), k);
    for (const auto& x : tuples) {
        double best_p = 0.0, best_q = 0.0;
        for (VertexId p : points) best_p = std::max(best_p, detail::dist_to_tuple(oracle, x, p));
        for (VertexId q : coreset) best_q = std::max(best_q, detail::dist_to_tuple(oracle, x, q));
        double ratio = best_p > 0.0 ? best_q / best_p : 1.0;
        if (ratio < check.worst_ratio) {
            check.worst_ratio = ratio;
            check.worst_tuple = x;
        }
        if (best_q < (1.0 - epsilon) * best_p - 1e-9 * std::max(1.0, best_p))
            check.ok = false;
    }
    return check;
}

/// k-center coreset by exhaustive tuple enumeration at desk scale: seed the
/// k+1 spread points alpha0 greedily, classify every center set into the far
/// region (answered by alpha0) or a distance bucket, and hit each bucket's
///     S_i^alpha = { u in P : dist(alpha,u) >= (i-1)*delta }
/// through the LP-plus-rounding machinery with the k-fold VC dimension.
inline KCoresetResult kcenter_coreset(const DistanceOracle& oracle, const PointSet& points,
                                      int k, double epsilon, std::uint64_t seed,
                                      const KCenterCaps& caps = {},
                                      CoresetParams params = {}) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw InputError("kcenter_coreset: epsilon must be in (0,1)");
    if (k < 1) throw InputError("kcenter_coreset: k must be positive");
    if (points.empty()) throw InputError("kcenter_coreset: empty point set");
    const std::size_t n = oracle.graph().vertex_count();
    if (k > caps.max_k)
        throw CapExceededError("kcenter_coreset: k exceeds cap of " +
                               std::to_string(caps.max_k));
    if (n > caps.max_n)
        throw CapExceededError("kcenter_coreset: vertex count exceeds cap of " +
                               std::to_string(caps.max_n));
    if (!is_connected_from(oracle, points.members().front()))
        throw InputError("kcenter_coreset: instance is disconnected");

    KCoresetResult result;
    result.k = k;
    result.epsilon = epsilon;
    result.seed = seed;
    if (points.size() <= static_cast<std::size_t>(k) + 1) {
        result.coreset = points;
        return result;
    }

    // alpha0: start anywhere in P, then repeatedly add the furthest point.
    std::vector<VertexId> alpha0{points.members().front()};
    for (int i = 0; i < k; ++i)
        alpha0.push_back(detail::tuple_furthest(oracle, alpha0, points).first);
    double Delta = detail::tuple_furthest(oracle, alpha0, points).second;
    result.alpha0 = alpha0;
    result.Delta = Delta;
    for (std::size_t a = 0; a < alpha0.size(); ++a)
        for (std::size_t b = a + 1; b < alpha0.size(); ++b)
            if (oracle.dist(alpha0[a], alpha0[b]) < Delta * (1.0 - 1e-9))
                throw InternalError("kcenter_coreset: alpha0 is not Delta-spread");
    params.d = kcenter_vc_dim(k);
    result.params = params;
    if (Delta == 0.0) {
        result.coreset = PointSet(alpha0);
        return result;
    }
    const double delta = epsilon / 4.0 * Delta;
    result.delta = delta;

    auto tuples = detail::enumerate_center_sets(n, k);
    const long lo = static_cast<long>(std::floor(2.0 / epsilon + 1e-9));
    const long hi = static_cast<long>(std::floor(4.0 / (epsilon * epsilon) + 1e-9));
    std::map<long, std::vector<std::size_t>> buckets;
    std::vector<VertexId> z_of(tuples.size());
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        auto [z, dz] = detail::tuple_furthest(oracle, tuples[t], points);
        z_of[t] = z;
        if (dz > Delta / epsilon) continue;  // alpha0 answers far tuples
        long i = static_cast<long>(std::floor(dz / delta));
        if (i < lo) {
            if (dz >= Delta / 2.0 * (1.0 - 1e-9)) {
                i = lo;
            } else {
                throw InternalError("kcenter_coreset: tuple below the feasible bucket range");
            }
        }
        if (i > hi) throw InternalError("kcenter_coreset: tuple above the feasible bucket range");
        buckets[i].push_back(t);
    }

    std::vector<VertexId> q_members = alpha0;
    const auto& members = points.members();
    for (const auto& [i, tuple_ids] : buckets) {
        SetSystem system(members.size());
        const double cutoff = static_cast<double>(i - 1) * delta;
        for (std::size_t t : tuple_ids) {
            Bitset s(members.size());
            bool has_z = false;
            for (std::size_t idx = 0; idx < members.size(); ++idx) {
                if (detail::dist_to_tuple(oracle, tuples[t], members[idx]) >= cutoff) {
                    s.set(idx);
                    if (members[idx] == z_of[t]) has_z = true;
                }
            }
            if (!has_z || !s.any())
                throw InternalError("kcenter_coreset: bucket set misses its furthest point");
            system.add(std::move(s));
        }
        HittingSetInstance instance(std::move(system));
        BucketInfo info;
        info.index = i;
        info.set_count = instance.set_count();
        info.seed = derive_seed(seed, static_cast<std::uint64_t>(i));
        FractionalSolution frac;
        try {
            frac = lp_fractional(instance, params.gamma);
        } catch (const LpNonConvergence& e) {
            frac = e.best_feasible;
        }
        info.tau_star = frac.value;
        info.lp_lower = frac.lower_bound;
        info.lp_converged = frac.converged;
        RoundResult rounded = round_vc(instance, frac, params.d, info.seed, {params.c});
        info.sample_size = rounded.sample_size;
        info.fallback = rounded.used_fallback;
        std::vector<VertexId> hit;
        for (std::size_t idx : rounded.chosen) hit.push_back(members[idx]);
        info.hit_set = PointSet(std::move(hit));
        for (VertexId u : info.hit_set) q_members.push_back(u);
        result.buckets.push_back(std::move(info));
    }
    result.coreset = PointSet(std::move(q_members));
    return result;
}

}  // namespace planar_coreset

#endif  // PLANAR_CORESET_KCENTER_HPP_
