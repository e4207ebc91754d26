#ifndef PLANAR_CORESET_CORESET_HPP_
#define PLANAR_CORESET_CORESET_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planar_coreset/graph.hpp"
#include "planar_coreset/hitting_set.hpp"
#include "planar_coreset/random.hpp"
#include "planar_coreset/structures.hpp"

namespace planar_coreset {

struct BucketInfo {
    long index = 0;             // distance bucket i
    double tau_star = 0.0;      // fractional LP value used for rounding
    double lp_lower = 0.0;      // certified dual lower bound
    bool lp_converged = true;
    std::size_t set_count = 0;  // distinct sets in the bucket's instance
    std::size_t sample_size = 0;
    bool fallback = false;
    std::uint64_t seed = 0;
    PointSet hit_set;
};

struct CoresetParams {
    double c = 8.0;       // rounding sample-size constant
    int d = 4;            // assumed VC dimension of the ball system
    double gamma = 0.05;  // LP relative accuracy for pipeline solves
};

struct CoresetResult {
    PointSet coreset;
    double epsilon = 0.0;
    std::optional<VertexId> far_point;  // p0; covers every very-far query alone
    double Delta = 0.0;                 // diameter of P
    double delta = 0.0;                 // bucket width eps/4 * Delta
    std::vector<BucketInfo> buckets;
    CoresetParams params;
    std::uint64_t seed = 0;
    std::string method;
};

struct CoresetCheck {
    bool ok = false;
    VertexId worst_query = 0;
    double worst_ratio = 1.0;  // min over queries of best-in-Q / best-in-P
};

/// Brute-force certificate: for every query vertex, the best answer within Q
/// reaches a (1-eps) fraction of the true furthest distance in P.
inline CoresetCheck verify_coreset(const DistanceOracle& oracle, const PointSet& points,
                                   const PointSet& coreset, double epsilon,
                                   const std::vector<VertexId>& queries = {}) {
    if (points.empty()) throw InputError("verify_coreset: empty point set");
    if (coreset.empty()) return {false, 0, 0.0};
    const std::size_t n = oracle.graph().vertex_count();
    CoresetCheck check;
    check.ok = true;
    check.worst_ratio = std::numeric_limits<double>::infinity();
    auto consider = [&](VertexId v) {
        double best_p = 0.0, best_q = 0.0;
        const auto& row = oracle.from(v);
        for (VertexId p : points) best_p = std::max(best_p, row[p]);
        for (VertexId q : coreset) best_q = std::max(best_q, row[q]);
        double ratio = best_p > 0.0 ? best_q / best_p : 1.0;
        if (ratio < check.worst_ratio) {
            check.worst_ratio = ratio;
            check.worst_query = v;
        }
        if (best_q < (1.0 - epsilon) * best_p - 1e-9 * std::max(1.0, best_p))
            check.ok = false;
    };
    if (queries.empty()) {
        for (VertexId v = 0; v < n; ++v) consider(v);
    } else {
        for (VertexId v : queries) consider(v);
    }
    return check;
}

/// Greedy baseline: add furthest neighbors of uncovered witnesses until every
/// query vertex has a (1-eps)-approximate answer in Q.
inline CoresetResult greedy_coreset(const DistanceOracle& oracle, const PointSet& points,
                                    double epsilon, const std::vector<VertexId>& queries = {}) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw InputError("greedy_coreset: epsilon must be in (0,1)");
    if (points.empty()) throw InputError("greedy_coreset: empty point set");
    if (!is_connected_from(oracle, points.members().front()))
        throw InputError("greedy_coreset: instance is disconnected");
    GreedyTrace trace = greedy_semi_ladder_trace(oracle, points, epsilon, queries);
    CoresetResult result;
    result.method = "greedy";
    result.epsilon = epsilon;
    std::vector<VertexId> q;
    q.reserve(trace.pairs.size());
    for (auto [added, witness] : trace.pairs) {
        (void)witness;
        q.push_back(added);
    }
    result.coreset = PointSet(std::move(q));
    return result;
}

namespace detail {

struct BucketedQueries {
    double Delta = 0.0;
    double delta = 0.0;
    // bucket index -> queries v with i*delta <= dist(v, z_v) < (i+1)*delta
    std::map<long, std::vector<VertexId>> buckets;
    std::vector<VertexId> z;          // furthest point of P per query
    std::vector<double> z_dist;       // dist(v, z_v)
    std::vector<VertexId> far;        // queries with dist(v, z_v) > Delta/eps
};

/// Classifies queries into the far set and distance buckets. Buckets only
/// exist within [floor(2/eps), floor(4/eps^2)]; a query landing below the
/// lower edge by floating-point dust is clamped up, anything farther off is
/// an internal error.
inline BucketedQueries bucket_queries(const DistanceOracle& oracle, const PointSet& points,
                                      double epsilon, const std::vector<VertexId>& queries) {
    BucketedQueries out;
    out.Delta = diameter(oracle, points);
    out.delta = epsilon / 4.0 * out.Delta;
    const std::size_t n = oracle.graph().vertex_count();
    out.z.assign(n, 0);
    out.z_dist.assign(n, 0.0);
    // The range ends are exact integers for round epsilons; the nudge keeps
    // floor() from landing one below them.
    const long lo = static_cast<long>(std::floor(2.0 / epsilon + 1e-9));
    const long hi = static_cast<long>(std::floor(4.0 / (epsilon * epsilon) + 1e-9));
    for (VertexId v : queries) {
        auto [zv, dv] = furthest_neighbor(oracle, v, points);
        out.z[v] = zv;
        out.z_dist[v] = dv;
        if (dv > out.Delta / epsilon) {
            out.far.push_back(v);
            continue;
        }
        long i = static_cast<long>(std::floor(dv / out.delta));
        if (i < lo) {
            if (dv >= out.Delta / 2.0 * (1.0 - 1e-9)) {
                i = lo;
            } else {
                throw InternalError("bucket_queries: query below the feasible bucket range");
            }
        }
        if (i > hi) throw InternalError("bucket_queries: query above the feasible bucket range");
        out.buckets[i].push_back(v);
    }
    return out;
}

/// The sets S_i^v = { u in P : dist(v,u) >= cutoff } of one bucket, over the
/// universe P (indices into `members`). Every set must contain its query's
/// furthest point.
inline SetSystem bucket_set_system(const DistanceOracle& oracle,
                                   const std::vector<VertexId>& members,
                                   const std::vector<VertexId>& bucket_members, double cutoff,
                                   const std::vector<VertexId>& z) {
    SetSystem system(members.size());
    for (VertexId v : bucket_members) {
        Bitset s(members.size());
        const auto& row = oracle.from(v);
        bool has_z = false;
        for (std::size_t idx = 0; idx < members.size(); ++idx) {
            if (row[members[idx]] >= cutoff) {
                s.set(idx);
                if (members[idx] == z[v]) has_z = true;
            }
        }
        if (!has_z || !s.any())
            throw InternalError("bucket_set_system: set misses its own furthest point");
        system.add(std::move(s));
    }
    return system;
}

}  // namespace detail

/// LP-and-rounding construction. The far point p0 alone serves every query
/// whose furthest distance exceeds Delta/eps; remaining queries are bucketed
/// by furthest distance, and per bucket the sets
///     S_i^v = { u in P : dist(v,u) >= (i-1)*delta }
/// are hit via the fractional LP plus VC-dimension rounding. Q is p0 together
/// with all bucket hitting sets.
inline CoresetResult lp_coreset(const DistanceOracle& oracle, const PointSet& points,
                                double epsilon, std::uint64_t seed,
                                const CoresetParams& params = {},
                                const std::vector<VertexId>& queries_in = {}) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw InputError("lp_coreset: epsilon must be in (0,1)");
    if (points.empty()) throw InputError("lp_coreset: empty point set");
    if (!is_connected_from(oracle, points.members().front()))
        throw InputError("lp_coreset: instance is disconnected");

    CoresetResult result;
    result.method = "lp";
    result.epsilon = epsilon;
    result.params = params;
    result.seed = seed;
    if (points.size() == 1) {
        result.coreset = points;
        return result;
    }

    std::vector<VertexId> queries = queries_in;
    if (queries.empty()) {
        queries.resize(oracle.graph().vertex_count());
        for (std::size_t i = 0; i < queries.size(); ++i) queries[i] = static_cast<VertexId>(i);
    }

    const VertexId p0 = points.members().front();
    result.far_point = p0;
    result.Delta = diameter(oracle, points);
    if (result.Delta == 0.0) {  // all of P coincident
        result.coreset = PointSet({p0});
        return result;
    }

    auto bucketed = detail::bucket_queries(oracle, points, epsilon, queries);
    result.delta = bucketed.delta;
    for (VertexId v : bucketed.far) {
        // p0 on its own is a (1-eps)-approximate answer out there.
        if (oracle.dist(v, p0) < (1.0 - epsilon) * bucketed.z_dist[v])
            throw InternalError("lp_coreset: far-query guarantee violated");
    }

    std::vector<VertexId> q_members{p0};
    const auto& members = points.members();
    for (const auto& [i, bucket_members] : bucketed.buckets) {
        const double cutoff = static_cast<double>(i - 1) * bucketed.delta;
        HittingSetInstance instance(
            detail::bucket_set_system(oracle, members, bucket_members, cutoff, bucketed.z));
        BucketInfo info;
        info.index = i;
        info.set_count = instance.set_count();
        info.seed = derive_seed(seed, static_cast<std::uint64_t>(i));
        FractionalSolution frac;
        try {
            frac = lp_fractional(instance, params.gamma);
        } catch (const LpNonConvergence& e) {
            frac = e.best_feasible;  // feasible, just not certified at gamma
        }
        info.tau_star = frac.value;
        info.lp_lower = frac.lower_bound;
        info.lp_converged = frac.converged;
        RoundResult rounded = round_vc(instance, frac, params.d, info.seed, {params.c});
        info.sample_size = rounded.sample_size;
        info.fallback = rounded.used_fallback;
        std::vector<VertexId> hit;
        hit.reserve(rounded.chosen.size());
        for (std::size_t idx : rounded.chosen) hit.push_back(members[idx]);
        info.hit_set = PointSet(std::move(hit));
        for (VertexId u : info.hit_set) q_members.push_back(u);
        result.buckets.push_back(std::move(info));
    }
    result.coreset = PointSet(std::move(q_members));
    return result;
}

struct DualDiagnostic {
    std::optional<PairFamily> family;
    long bucket = 0;
    double tau_star = 0.0;   // dual value the sampling distribution came from
    std::size_t target = 0;  // floor(tau*/4)
    int attempts = 0;
    std::string failure;
};

/// Probabilistic rounding of the bucket's dual LP into an (eps^2/4)-comatching
/// with radius i*delta: sample 2*floor(tau*/4) queries from the dual
/// distribution, discard threatening ones (u threatens v when z_v lies in
/// S_i^u), and pair survivors with their furthest points. The underlying
/// claim is existential, so a seeded run may fail; the report then says why.
inline DualDiagnostic dual_comatching_diagnostic(const DistanceOracle& oracle,
                                                 const PointSet& points, double epsilon,
                                                 long bucket_index, std::uint64_t seed,
                                                 int max_attempts = 10) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw InputError("dual diagnostic: epsilon must be in (0,1)");
    if (points.size() < 2) throw InputError("dual diagnostic: need at least two points");
    if (!is_connected_from(oracle, points.members().front()))
        throw InputError("dual diagnostic: instance is disconnected");
    std::vector<VertexId> queries(oracle.graph().vertex_count());
    for (std::size_t i = 0; i < queries.size(); ++i) queries[i] = static_cast<VertexId>(i);
    auto bucketed = detail::bucket_queries(oracle, points, epsilon, queries);

    DualDiagnostic diag;
    diag.bucket = bucket_index;
    auto it = bucketed.buckets.find(bucket_index);
    if (it == bucketed.buckets.end()) throw InputError("dual diagnostic: empty bucket");
    const std::vector<VertexId>& bucket = it->second;
    const double cutoff = static_cast<double>(bucket_index - 1) * bucketed.delta;
    const double radius = static_cast<double>(bucket_index) * bucketed.delta;

    const auto& members = points.members();
    SetSystem system(members.size());
    std::vector<VertexId> set_owner;  // bucket query owning each distinct set
    for (VertexId v : bucket) {
        Bitset s(members.size());
        const auto& row = oracle.from(v);
        for (std::size_t idx = 0; idx < members.size(); ++idx)
            if (row[members[idx]] >= cutoff) s.set(idx);
        if (system.add(std::move(s))) set_owner.push_back(v);
    }
    HittingSetInstance instance(std::move(system));
    FractionalSolution frac;
    try {
        frac = lp_fractional(instance, 0.05);
    } catch (const LpNonConvergence& e) {
        frac = e.best_feasible;
    }
    diag.tau_star = frac.lower_bound;
    const auto k_target = static_cast<std::size_t>(std::floor(frac.lower_bound / 4.0));
    diag.target = k_target;

    PairFamily family;
    family.radius = radius;
    family.epsilon = epsilon * epsilon / 4.0;
    family.kind = LadderKind::Comatching;
    if (k_target == 0) {
        diag.family = std::move(family);  // empty family, trivially valid
        return diag;
    }

    // The hair of slack keeps float dust on the threat side, which only
    // shrinks the surviving family.
    auto threatens = [&](VertexId u, VertexId v) {
        return oracle.dist(u, bucketed.z[v]) >= cutoff - 1e-9 * std::max(1.0, cutoff);
    };
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        diag.attempts = attempt + 1;
        auto draws = weighted_epsilon_net_sample(frac.dual_y, 2 * k_target,
                                                 derive_seed(seed, attempt));
        std::vector<VertexId> sample;
        sample.reserve(draws.size());
        for (std::size_t s : draws) sample.push_back(set_owner[s]);
        std::size_t threat_pairs = 0;
        std::vector<bool> discard(sample.size(), false);
        for (std::size_t a = 0; a < sample.size(); ++a) {
            for (std::size_t b = 0; b < sample.size(); ++b) {
                if (a == b) continue;
                if (threatens(sample[a], sample[b])) {
                    ++threat_pairs;
                    discard[a] = true;
                }
            }
        }
        if (threat_pairs > k_target) continue;  // unlucky sample, redraw
        family.pairs.clear();
        for (std::size_t a = 0; a < sample.size(); ++a) {
            if (discard[a]) continue;
            VertexId v = sample[a];
            if (!(bucketed.z_dist[v] > radius)) continue;  // exact boundary, drop
            family.pairs.push_back({v, bucketed.z[v]});
        }
        auto check = validate_comatching(oracle, family);
        if (!check.ok) throw InternalError("dual diagnostic: survivors failed validation");
        diag.family = std::move(family);
        return diag;
    }
    diag.failure = "sampling kept too many threatening pairs in every attempt";
    return diag;
}

}  // namespace planar_coreset

#endif  // PLANAR_CORESET_CORESET_HPP_
