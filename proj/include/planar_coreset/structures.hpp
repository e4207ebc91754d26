#ifndef PLANAR_CORESET_STRUCTURES_HPP_
#define PLANAR_CORESET_STRUCTURES_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planar_coreset/clique.hpp"
#include "planar_coreset/errors.hpp"
#include "planar_coreset/graph.hpp"

namespace planar_coreset {

enum class LadderKind { SemiLadder, Ladder, Comatching };

inline std::string to_string(LadderKind kind) {
    switch (kind) {
        case LadderKind::SemiLadder: return "semi-ladder";
        case LadderKind::Ladder: return "ladder";
        case LadderKind::Comatching: return "comatching";
    }
    return "?";
}

/// Ordered sequence of (p_i, q_i) pairs with a witness radius R and accuracy
/// eps. Diagonal distances must exceed R while the off-diagonal pattern
/// depends on the kind:
///   semi-ladder   dist(p_i, q_j) <= (1-eps)R for i < j
///   ladder        dist(p_i, q_j) <= (1-eps)R for i < j,  > R otherwise
///   comatching    dist(p_i, q_j) <= (1-eps)R for all i != j
/// The semi-ladder cross condition is oriented as dist(p_i, q_j) for i < j,
/// matching the greedy-trace semantics (earlier points are close to later
/// witnesses). The kind tag is annotation only; each validator checks the
/// condition it names.
struct PairFamily {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    double radius = 0.0;
    double epsilon = 0.0;
    LadderKind kind = LadderKind::Comatching;
};

/// Ordered triples (p_i, t_i, b_i): tops are close to earlier p's, bottoms to
/// later p's, and everything else stays far.
struct TripleFamily {
    std::vector<std::array<VertexId, 3>> triples;  // (p, top, bottom)
    double radius = 0.0;
    double epsilon = 0.0;
};

/// Entries (p_i, X_i) with |X_i| <= k: dist(p_i, X_i) > R while both cross
/// directions satisfy dist(p_i, X_j) <= (1-eps)R.
struct KTupleFamily {
    struct Entry {
        VertexId p = 0;
        std::vector<VertexId> points;
    };
    std::vector<Entry> entries;
    int k = 1;
    double radius = 0.0;
    double epsilon = 0.0;
};

struct Violation {
    std::size_t i = 0;
    std::size_t j = 0;
    double observed = 0.0;
    double bound = 0.0;
    std::string rule;
};

struct ValidationResult {
    bool ok = true;
    std::optional<Violation> violation;
    explicit operator bool() const { return ok; }

    static ValidationResult fail(std::size_t i, std::size_t j, double observed,
                                 double bound, std::string rule) {
        return {false, Violation{i, j, observed, bound, std::move(rule)}};
    }
};

namespace detail {

inline void check_family_params(double radius, double epsilon) {
    if (!(radius > 0.0)) throw InputError("family radius must be positive");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw InputError("family epsilon must be in (0,1)");
}

inline void check_vertex(const DistanceOracle& oracle, VertexId v) {
    if (v >= oracle.graph().vertex_count()) throw InputError("family references invalid vertex id");
}

}  // namespace detail

inline ValidationResult validate_comatching(const DistanceOracle& oracle,
                                            const PairFamily& family) {
    detail::check_family_params(family.radius, family.epsilon);
    const double r = family.radius;
    const double close = (1.0 - family.epsilon) * r;
    for (auto [p, q] : family.pairs) {
        detail::check_vertex(oracle, p);
        detail::check_vertex(oracle, q);
    }
    const std::size_t n = family.pairs.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double d = oracle.dist(family.pairs[i].first, family.pairs[j].second);
            if (i == j) {
                if (!(d > r)) return ValidationResult::fail(i, j, d, r, "diagonal");
            } else if (!(d <= close)) {
                return ValidationResult::fail(i, j, d, close, "cross");
            }
        }
    }
    return {};
}

inline ValidationResult validate_semi_ladder(const DistanceOracle& oracle,
                                             const PairFamily& family) {
    detail::check_family_params(family.radius, family.epsilon);
    const double r = family.radius;
    const double close = (1.0 - family.epsilon) * r;
    for (auto [p, q] : family.pairs) {
        detail::check_vertex(oracle, p);
        detail::check_vertex(oracle, q);
    }
    const std::size_t n = family.pairs.size();
    for (std::size_t i = 0; i < n; ++i) {
        double d = oracle.dist(family.pairs[i].first, family.pairs[i].second);
        if (!(d > r)) return ValidationResult::fail(i, i, d, r, "diagonal");
        for (std::size_t j = i + 1; j < n; ++j) {
            double c = oracle.dist(family.pairs[i].first, family.pairs[j].second);
            if (!(c <= close)) return ValidationResult::fail(i, j, c, close, "cross");
        }
    }
    return {};
}

inline ValidationResult validate_ladder(const DistanceOracle& oracle,
                                        const PairFamily& family) {
    detail::check_family_params(family.radius, family.epsilon);
    const double r = family.radius;
    const double close = (1.0 - family.epsilon) * r;
    for (auto [p, q] : family.pairs) {
        detail::check_vertex(oracle, p);
        detail::check_vertex(oracle, q);
    }
    const std::size_t n = family.pairs.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double d = oracle.dist(family.pairs[i].first, family.pairs[j].second);
            if (i < j) {
                if (!(d <= close)) return ValidationResult::fail(i, j, d, close, "cross");
            } else if (!(d > r)) {
                return ValidationResult::fail(i, j, d, r, "far");
            }
        }
    }
    return {};
}

/// Unweighted-threshold variant: diagonal distances exceed d, every cross
/// distance is at most d. Vacuously true on an empty family.
inline ValidationResult validate_d_comatching(
    const DistanceOracle& oracle, const std::vector<std::pair<VertexId, VertexId>>& pairs,
    long threshold) {
    if (threshold <= 0) throw InputError("d-comatching threshold must be positive");
    const auto d = static_cast<double>(threshold);
    for (auto [p, q] : pairs) {
        detail::check_vertex(oracle, p);
        detail::check_vertex(oracle, q);
    }
    const std::size_t n = pairs.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double dist = oracle.dist(pairs[i].first, pairs[j].second);
            if (i == j) {
                if (!(dist > d)) return ValidationResult::fail(i, j, dist, d, "diagonal");
            } else if (!(dist <= d)) {
                return ValidationResult::fail(i, j, dist, d, "cross");
            }
        }
    }
    return {};
}

inline ValidationResult validate_double_ladder(const DistanceOracle& oracle,
                                               const TripleFamily& family) {
    detail::check_family_params(family.radius, family.epsilon);
    const double r = family.radius;
    const double close = (1.0 - family.epsilon) * r;
    for (const auto& t : family.triples)
        for (VertexId v : t) detail::check_vertex(oracle, v);
    const std::size_t n = family.triples.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            double dt = oracle.dist(family.triples[j][0], family.triples[i][1]);
            if (!(dt > r)) return ValidationResult::fail(i, j, dt, r, "top-far");
            double db = oracle.dist(family.triples[i][0], family.triples[j][2]);
            if (!(db > r)) return ValidationResult::fail(i, j, db, r, "bottom-far");
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            double dt = oracle.dist(family.triples[i][0], family.triples[j][1]);
            if (!(dt <= close)) return ValidationResult::fail(i, j, dt, close, "top-close");
            double db = oracle.dist(family.triples[j][0], family.triples[i][2]);
            if (!(db <= close)) return ValidationResult::fail(i, j, db, close, "bottom-close");
        }
    }
    return {};
}

inline ValidationResult validate_k_comatching(const DistanceOracle& oracle,
                                              const KTupleFamily& family) {
    detail::check_family_params(family.radius, family.epsilon);
    if (family.k < 1) throw InputError("k-comatching requires k >= 1");
    const double r = family.radius;
    const double close = (1.0 - family.epsilon) * r;
    for (const auto& entry : family.entries) {
        detail::check_vertex(oracle, entry.p);
        if (entry.points.empty() ||
            entry.points.size() > static_cast<std::size_t>(family.k))
            throw InputError("k-comatching entry sets must have 1..k points");
        for (VertexId v : entry.points) detail::check_vertex(oracle, v);
    }
    auto dist_to = [&](VertexId p, const std::vector<VertexId>& xs) {
        double best = kUnreachable;
        const auto& row = oracle.from(p);
        for (VertexId v : xs) best = std::min(best, row[v]);
        return best;
    };
    const std::size_t n = family.entries.size();
    for (std::size_t i = 0; i < n; ++i) {
        double d = dist_to(family.entries[i].p, family.entries[i].points);
        if (!(d > r)) return ValidationResult::fail(i, i, d, r, "diagonal");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            double c = dist_to(family.entries[i].p, family.entries[j].points);
            if (!(c <= close)) return ValidationResult::fail(i, j, c, close, "cross");
        }
    }
    return {};
}

/// Exact maximum comatching search. For each candidate radius R this builds
/// the compatibility graph whose nodes are vertex pairs (p,q) with
/// dist(p,q) > R, with edges joining mutually (1-eps)R-close pairs, and takes
/// an exact maximum clique. A family valid for some witness radius is valid
/// at radius cross_max/(1-eps) (or (1-eps)*diag for a single pair), so the
/// default candidate set {d/(1-eps), (1-eps)*d : d a realized distance}
/// is complete.
inline PairFamily max_comatching(const DistanceOracle& oracle, double epsilon,
                                 std::vector<double> candidate_radii = {},
                                 std::size_t node_cap = 2000) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw InputError("max_comatching: epsilon must be in (0,1)");
    const std::size_t n = oracle.graph().vertex_count();
    if (n == 0) throw InputError("max_comatching: empty graph");
    if (!is_connected_from(oracle, 0)) throw InputError("max_comatching: graph must be connected");

    std::vector<double> dists;
    for (VertexId u = 0; u < n; ++u) {
        const auto& row = oracle.from(u);
        for (VertexId v = u + 1; v < n; ++v)
            if (row[v] > 0.0) dists.push_back(row[v]);
    }
    std::sort(dists.begin(), dists.end());
    dists.erase(std::unique(dists.begin(), dists.end()), dists.end());
    if (candidate_radii.empty()) {
        for (double d : dists) {
            candidate_radii.push_back(d / (1.0 - epsilon));
            candidate_radii.push_back(d * (1.0 - epsilon));
        }
    }
    std::sort(candidate_radii.begin(), candidate_radii.end());
    candidate_radii.erase(std::unique(candidate_radii.begin(), candidate_radii.end()),
                          candidate_radii.end());

    PairFamily best;
    best.epsilon = epsilon;
    best.kind = LadderKind::Comatching;
    const double max_dist = dists.empty() ? 0.0 : dists.back();
    for (double r : candidate_radii) {
        if (!(r > 0.0) || r >= max_dist) continue;
        std::vector<std::pair<VertexId, VertexId>> nodes;
        for (VertexId p = 0; p < n; ++p) {
            const auto& row = oracle.from(p);
            for (VertexId q = 0; q < n; ++q)
                if (p != q && row[q] > r) nodes.push_back({p, q});
        }
        if (nodes.size() > node_cap)
            throw CapExceededError("max_comatching: compatibility graph has " +
                                   std::to_string(nodes.size()) + " nodes, cap is " +
                                   std::to_string(node_cap));
        if (nodes.size() <= best.pairs.size()) continue;
        const double close = (1.0 - epsilon) * r;
        std::vector<Bitset> adj(nodes.size(), Bitset(nodes.size()));
        for (std::size_t a = 0; a < nodes.size(); ++a) {
            const auto& row_a = oracle.from(nodes[a].first);
            for (std::size_t b = a + 1; b < nodes.size(); ++b) {
                if (row_a[nodes[b].second] <= close &&
                    oracle.dist(nodes[b].first, nodes[a].second) <= close) {
                    adj[a].set(b);
                    adj[b].set(a);
                }
            }
        }
        auto clique = max_clique(adj);
        if (clique.size() > best.pairs.size()) {
            best.pairs.clear();
            for (std::size_t idx : clique) best.pairs.push_back(nodes[idx]);
            best.radius = r;
        }
    }
    if (!best.pairs.empty() && !validate_comatching(oracle, best).ok)
        throw InternalError("max_comatching: search result failed validation");
    return best;
}

/// Witness trace of the greedy coreset loop plus its bucketed semi-ladders.
/// Pairs are (added point, witness) in greedy order; each bucket groups pairs
/// with witness distance in one geometric window [W^t, W^{t+1}) for
/// W = (1-eps)^{-1/2} and certifies them at radius (1-eps)^{1/4} * W^t with
/// accuracy 1 - (1-eps)^{1/4}. Pairs with witness distance 0 (witness on top
/// of the whole point set) appear in the raw trace but no bucket.
struct GreedyTrace {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::vector<double> witness_dist;
    std::vector<PairFamily> buckets;
};

inline GreedyTrace greedy_semi_ladder_trace(const DistanceOracle& oracle, const PointSet& points,
                                            double epsilon,
                                            const std::vector<VertexId>& queries = {}) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw InputError("greedy trace: epsilon must be in (0,1)");
    if (points.empty()) throw InputError("greedy trace: empty point set");
    const std::size_t n = oracle.graph().vertex_count();
    std::vector<VertexId> query_order = queries;
    if (query_order.empty()) {
        query_order.resize(n);
        for (std::size_t i = 0; i < n; ++i) query_order[i] = static_cast<VertexId>(i);
    }

    GreedyTrace trace;
    std::vector<VertexId> added;
    while (true) {
        std::optional<VertexId> witness;
        for (VertexId v : query_order) {
            auto [zq, dmax] = furthest_neighbor(oracle, v, points);
            (void)zq;
            bool covered = false;
            const auto& row = oracle.from(v);
            for (VertexId q : added) {
                if (row[q] >= (1.0 - epsilon) * dmax) {
                    covered = true;
                    break;
                }
            }
            if (!covered) {
                witness = v;
                break;
            }
        }
        if (!witness) break;
        auto [q, d] = furthest_neighbor(oracle, *witness, points);
        trace.pairs.push_back({q, *witness});
        trace.witness_dist.push_back(d);
        added.push_back(q);
    }

    const double w = std::pow(1.0 - epsilon, -0.5);
    const double shrink = std::pow(1.0 - epsilon, 0.25);
    std::map<long, PairFamily> buckets;
    for (std::size_t i = 0; i < trace.pairs.size(); ++i) {
        double d = trace.witness_dist[i];
        if (!(d > 0.0)) continue;
        long t = static_cast<long>(std::floor(std::log(d) / std::log(w)));
        auto [it, fresh] = buckets.try_emplace(t);
        if (fresh) {
            it->second.radius = std::pow(w, static_cast<double>(t)) * shrink;
            it->second.epsilon = 1.0 - shrink;
            it->second.kind = LadderKind::SemiLadder;
        }
        it->second.pairs.push_back(trace.pairs[i]);
    }
    for (auto& [t, fam] : buckets) trace.buckets.push_back(std::move(fam));
    return trace;
}

struct HomogenizationStep {
    int coordinate = 0;       // which q-coordinate, 0-based
    std::string graph;        // "H->", "H<-", "Hbar->", "Hbar<-"
    bool clique = false;      // whether the kept set is a clique in that graph
    std::size_t size_before = 0;
    std::size_t size_after = 0;
};

class RamseyCollapseError : public std::runtime_error {
public:
    RamseyCollapseError(std::string what, std::vector<HomogenizationStep> steps)
        : std::runtime_error(std::move(what)), trace(std::move(steps)) {}
    std::vector<HomogenizationStep> trace;
};

struct RamseyExtraction {
    std::optional<PairFamily> comatching;
    std::optional<TripleFamily> double_ladder;
    std::vector<std::size_t> index_set;  // indices into the input family
    std::vector<HomogenizationStep> trace;
};

/// Extracts from a (k,eps)-comatching either an (eps/2)-comatching (radius R)
/// or an (eps/2)-double ladder (radius (1-eps/2)R) on a homogeneous index
/// set. For each coordinate i the four auxiliary graphs on the entry indices
/// encode directed closeness at thresholds (1-eps)R and (1-eps/2)R; the index
/// set is made homogeneous in all 4k graphs by exact maximum clique /
/// independent set, replacing the Ramsey existence argument. When several
/// coordinates qualify in the case analysis, the smallest index wins.
inline RamseyExtraction ramsey_extract(const DistanceOracle& oracle,
                                       const KTupleFamily& family) {
    auto pre = validate_k_comatching(oracle, family);
    if (!pre.ok) throw InputError("ramsey_extract: input is not a valid (k,eps)-comatching");

    const std::size_t count = family.entries.size();
    const int k = family.k;
    const double r = family.radius;
    const double eps = family.epsilon;
    RamseyExtraction out;
    if (count == 0) throw RamseyCollapseError("ramsey_extract: empty family", {});

    // q(j, i): the i-th point of X_j, padded by repetition when |X_j| < k.
    auto q = [&](std::size_t j, int i) {
        const auto& pts = family.entries[j].points;
        return pts[std::min<std::size_t>(static_cast<std::size_t>(i), pts.size() - 1)];
    };
    // Directed closeness tests; a < b are indices into the family.
    auto edge = [&](int i, bool forward, bool relaxed, std::size_t a, std::size_t b) {
        double threshold = relaxed ? (1.0 - eps / 2.0) * r : (1.0 - eps) * r;
        double d = forward ? oracle.dist(family.entries[a].p, q(b, i))
                           : oracle.dist(family.entries[b].p, q(a, i));
        return d <= threshold;
    };

    std::vector<std::size_t> index_set(count);
    for (std::size_t j = 0; j < count; ++j) index_set[j] = j;

    const char* names[4] = {"H->", "H<-", "Hbar->", "Hbar<-"};
    for (int i = 0; i < k; ++i) {
        for (int g = 0; g < 4; ++g) {
            bool forward = (g % 2 == 0);
            bool relaxed = (g >= 2);
            std::vector<Bitset> adj(index_set.size(), Bitset(index_set.size()));
            for (std::size_t a = 0; a < index_set.size(); ++a) {
                for (std::size_t b = a + 1; b < index_set.size(); ++b) {
                    if (edge(i, forward, relaxed, index_set[a], index_set[b])) {
                        adj[a].set(b);
                        adj[b].set(a);
                    }
                }
            }
            auto cliq = max_clique(adj);
            auto indep = max_independent_set(adj);
            bool keep_clique = cliq.size() >= indep.size();
            const auto& kept = keep_clique ? cliq : indep;
            HomogenizationStep step{i, names[g], keep_clique, index_set.size(), kept.size()};
            std::vector<std::size_t> next;
            next.reserve(kept.size());
            for (std::size_t pos : kept) next.push_back(index_set[pos]);
            std::sort(next.begin(), next.end());
            index_set = std::move(next);
            out.trace.push_back(step);
            if (index_set.size() <= 1 && count > 1)
                throw RamseyCollapseError("ramsey_extract: homogeneous index set collapsed",
                                          out.trace);
        }
    }
    out.index_set = index_set;

    auto all_pairs = [&](auto&& pred) {
        for (std::size_t a = 0; a < index_set.size(); ++a)
            for (std::size_t b = a + 1; b < index_set.size(); ++b)
                if (!pred(index_set[a], index_set[b])) return false;
        return true;
    };

    // Case 1: some coordinate is close in both directions even at the relaxed
    // threshold; its pairs already form an (eps/2)-comatching at radius R.
    for (int i = 0; i < k; ++i) {
        bool fwd = all_pairs([&](std::size_t a, std::size_t b) { return edge(i, true, true, a, b); });
        bool bwd = all_pairs([&](std::size_t a, std::size_t b) { return edge(i, false, true, a, b); });
        if (fwd && bwd) {
            PairFamily com;
            com.radius = r;
            com.epsilon = eps / 2.0;
            com.kind = LadderKind::Comatching;
            for (std::size_t j : index_set)
                com.pairs.push_back({family.entries[j].p, q(j, i)});
            if (!validate_comatching(oracle, com).ok)
                throw InternalError("ramsey_extract: comatching output failed validation");
            out.comatching = std::move(com);
            return out;
        }
    }

    // Case 2: distinct coordinates serve the two directions. The forward
    // coordinate plays the top role (close to earlier p's), the backward one
    // the bottom role, at radius (1-eps/2)R.
    std::optional<int> i_fwd, i_bwd;
    for (int i = 0; i < k && !i_fwd; ++i)
        if (all_pairs([&](std::size_t a, std::size_t b) { return edge(i, true, false, a, b); }))
            i_fwd = i;
    for (int i = 0; i < k && !i_bwd; ++i)
        if (all_pairs([&](std::size_t a, std::size_t b) { return edge(i, false, false, a, b); }))
            i_bwd = i;
    if (!i_fwd || !i_bwd)
        throw InternalError("ramsey_extract: homogeneous set lacks covering coordinates");

    TripleFamily ladder;
    ladder.radius = (1.0 - eps / 2.0) * r;
    ladder.epsilon = eps / 2.0;
    for (std::size_t j : index_set)
        ladder.triples.push_back({family.entries[j].p, q(j, *i_fwd), q(j, *i_bwd)});
    if (!validate_double_ladder(oracle, ladder).ok)
        throw InternalError("ramsey_extract: double-ladder output failed validation");
    out.double_ladder = std::move(ladder);
    return out;
}

}  // namespace planar_coreset

#endif  // PLANAR_CORESET_STRUCTURES_HPP_
