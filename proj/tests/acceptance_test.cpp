// Acceptance suite: one test per criterion, each printing a PASS/FAIL line
// with its measured runtime. Tolerances are pinned here, in code.

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <iostream>
#include <thread>

#include "planar_coreset/planar_coreset.hpp"
#include "test_support.hpp"

using namespace planar_coreset;
using pc_test::exhaustive_max_comatching;

namespace {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void report(int criterion, bool ok, double seconds, const std::string& what) {
    std::cout << "[criterion " << criterion << "] " << (ok ? "PASS" : "FAIL") << " (" << seconds
              << " s) " << what << std::endl;
    EXPECT_TRUE(ok) << "criterion " << criterion << ": " << what;
}

std::vector<KTupleFamily::Entry> pairs_as_entries(
    const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    std::vector<KTupleFamily::Entry> out;
    for (auto [p, q] : pairs) out.push_back({p, {q}});
    return out;
}

long tree_dist_to_root_path(VertexId u, VertexId v) {
    auto depth = [](VertexId x) {
        long d = 0;
        while (x != 0) {
            x = (x - 1) / 2;
            ++d;
        }
        return d;
    };
    long du = depth(u), dv = depth(v);
    long steps_u = 0;
    while (du > dv) {
        u = (u - 1) / 2;
        --du;
        ++steps_u;
    }
    while (dv > du) {
        v = (v - 1) / 2;
        --dv;
    }
    while (u != v) {
        u = (u - 1) / 2;
        v = (v - 1) / 2;
        ++steps_u;
    }
    return steps_u;
}

struct CorpusInstance {
    WeightedGraph graph;
    PointSet points;
    std::string desc;
};

// Fifty seeded instances: grids up to 10x10 with unit, integer, and real
// weights, subdivided variants, and P either all vertices or a random half.
std::vector<CorpusInstance> coreset_corpus() {
    const std::vector<std::pair<std::size_t, std::size_t>> sizes{
        {3, 3}, {4, 4}, {5, 5}, {6, 6}, {7, 7}, {8, 8}, {9, 9}, {10, 10}, {10, 5}, {7, 4}};
    std::vector<CorpusInstance> corpus;
    for (std::size_t i = 0; i < 50; ++i) {
        std::uint64_t seed = derive_seed(4001, i);
        auto [w, h] = sizes[i % sizes.size()];
        WeightDist dist = WeightDist::unit();
        if (i % 3 == 1) dist = WeightDist::uniform_int(1, 5);
        if (i % 3 == 2) dist = WeightDist::uniform_real(1, 10);
        auto g = grid(w, h, dist, seed);
        if (i % 4 == 2) g = random_subdivision(g, 10, derive_seed(seed, 1));
        if (i % 4 == 3) g = random_subdivision(g, 20, derive_seed(seed, 2));
        PointSet points;
        if (i % 2 == 0) {
            std::vector<VertexId> all(g.vertex_count());
            for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<VertexId>(v);
            points = PointSet(all);
        } else {
            points = random_point_subset(g, std::max<std::size_t>(2, g.vertex_count() / 2),
                                         derive_seed(seed, 3));
        }
        corpus.push_back({std::move(g), std::move(points),
                          "grid" + std::to_string(w) + "x" + std::to_string(h) + "#" +
                              std::to_string(i)});
    }
    return corpus;
}

WeightedGraph relabeled(const WeightedGraph& g, std::mt19937_64& rng,
                        std::vector<VertexId>& sigma) {
    const std::size_t n = g.vertex_count();
    sigma.resize(n);
    for (std::size_t i = 0; i < n; ++i) sigma[i] = static_cast<VertexId>(i);
    for (std::size_t i = n; i > 1; --i)
        std::swap(sigma[i - 1], sigma[uniform_below(rng, i)]);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back({sigma[e.u], sigma[e.v], e.w});
    return WeightedGraph(n, std::move(edges));
}

}  // namespace

TEST(Acceptance, Criterion1SokoFamily) {
    bool ok = true;
    double worst = 0.0;
    for (long k = 3; k <= 8; ++k) {
        Timer timer;
        auto fam = gen_soko(k);
        ok &= fam.pairs.size() == (std::size_t{1} << k);
        ok &= verify_lower_bound(fam.graph, pairs_as_entries(fam.pairs), 1, 2 * k - 1).ok;
        // Exhaustive leaf-pair check: within 2k-1 exactly off the mirror.
        const double d = static_cast<double>(2 * k - 1);
        for (const auto& [leaf, mirror] : fam.pairs) {
            auto row = sssp(fam.graph, leaf);
            for (const auto& other : fam.pairs)
                ok &= (other.second == mirror) ? row[other.second] > d
                                               : row[other.second] <= d;
        }
        if (k == 3) {
            auto row = sssp(fam.graph, 7);
            const std::vector<double> fig{3, 2, 4, 1, 3, 5, 5, 0, 2, 4, 4, 6, 6, 6, 6,
                                          4, 5, 3, 6, 4, 4, 4, 7, 5, 5, 5, 5, 5, 5, 5};
            for (std::size_t v = 0; v < fig.size(); ++v) ok &= row[v] == fig[v];
        }
        double elapsed = timer.seconds();
        worst = std::max(worst, elapsed);
        ok &= elapsed < 2.0;
    }
    report(1, ok, worst, "soko family k=3..8: (2k-1)-comatchings of size 2^k, figure distances");
}

TEST(Acceptance, Criterion2TreeFamily) {
    Timer timer;
    bool ok = true;
    std::mt19937_64 rng(777);
    for (long k = 1; k <= 10; ++k) {
        auto fam = gen_tree_k(k);
        ok &= fam.entries.size() == (std::size_t{1} << k);
        const std::size_t tree_size = (std::size_t{1} << (k + 1)) - 1;
        // One shortest-path run per leaf, keeping only the hat distances.
        std::vector<VertexId> hats;
        std::vector<std::size_t> hat_index(fam.graph.vertex_count(), SIZE_MAX);
        for (VertexId v = 1; v < tree_size; ++v) {
            hat_index[fam.hat[v]] = hats.size();
            hats.push_back(fam.hat[v]);
        }
        std::vector<std::vector<double>> hat_dist(fam.entries.size(),
                                                  std::vector<double>(hats.size()));
        {
            std::atomic<std::size_t> next{0};
            auto worker = [&]() {
                while (true) {
                    std::size_t e = next.fetch_add(1);
                    if (e >= fam.entries.size()) return;
                    auto row = sssp(fam.graph, fam.entries[e].p);
                    for (std::size_t hidx = 0; hidx < hats.size(); ++hidx)
                        hat_dist[e][hidx] = row[hats[hidx]];
                }
            };
            std::vector<std::thread> pool;
            auto budget = std::max(1u, std::thread::hardware_concurrency());
            for (unsigned t = 0; t < budget; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        for (std::size_t a = 0; a < fam.entries.size(); ++a) {
            for (VertexId x : fam.entries[a].points)
                ok &= hat_dist[a][hat_index[x]] == static_cast<double>(k + 2);
            for (std::size_t b = 0; b < fam.entries.size(); ++b) {
                if (a == b) continue;
                double best = kUnreachable;
                for (VertexId x : fam.entries[b].points)
                    best = std::min(best, hat_dist[a][hat_index[x]]);
                ok &= best <= static_cast<double>(k);
            }
        }
        // Lemma identity, 1000 random (leaf, tree-vertex) samples per k.
        const VertexId first_leaf = (1u << k) - 1;
        for (int s = 0; s < 1000; ++s) {
            auto leaf_idx = static_cast<std::size_t>(uniform_below(rng, 1u << k));
            auto u = static_cast<VertexId>(1 + uniform_below(rng, tree_size - 1));
            VertexId v = first_leaf + static_cast<VertexId>(leaf_idx);
            double expect = static_cast<double>(k + 2 * tree_dist_to_root_path(u, v));
            ok &= hat_dist[leaf_idx][hat_index[fam.hat[u]]] == expect;
        }
    }
    double elapsed = timer.seconds();
    ok &= elapsed < 5.0;
    report(2, ok, elapsed, "tree family k=1..10: exact hat distances and lemma spot-checks");
}

TEST(Acceptance, Criterion3PlanarFamily) {
    Timer timer;
    bool ok = true;
    for (long k = 1; k <= 4; ++k) {
        for (long d = 1; d <= 4; ++d) {
            auto fam = gen_planar_kd(k, d);
            long expected = 1;
            for (long i = 0; i < fam.h; ++i) {
                ok &= fam.cycle_lengths[i] == 1 + fam.k_parts[i] * (2 * fam.d_parts[i] + 1);
                expected *= fam.cycle_lengths[i];
            }
            ok &= static_cast<long>(fam.entries.size()) == expected;
            if (k <= d) {
                long bound = 1;
                for (long i = 0; i < k; ++i) bound *= 2 * (d / k) + 2;
                ok &= expected >= bound;
            }
            if (d <= k) {
                long bound = 1;
                for (long i = 0; i < d; ++i) bound *= 3 * (k / d) + 1;
                ok &= expected >= bound;
            }
            ok &= verify_lower_bound(fam.graph, fam.entries, k, d).ok;
        }
    }
    double elapsed = timer.seconds();
    ok &= elapsed < 10.0;
    report(3, ok, elapsed, "planar family k,d<=4: size formula, bounds, exhaustive lemmas");
}

TEST(Acceptance, Criterion4CoresetValidity) {
    Timer timer;
    bool ok = true;
    auto corpus = coreset_corpus();
    std::size_t runs = 0, passed = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& inst = corpus[i];
        DistanceOracle oracle(inst.graph);
        for (double eps : {0.1, 0.25, 0.5}) {
            auto greedy = greedy_coreset(oracle, inst.points, eps);
            auto lp = lp_coreset(oracle, inst.points, eps, derive_seed(900, i));
            bool g_ok = verify_coreset(oracle, inst.points, greedy.coreset, eps).ok;
            bool l_ok = verify_coreset(oracle, inst.points, lp.coreset, eps).ok;
            runs += 2;
            passed += g_ok + l_ok;
            ok &= g_ok && l_ok;
        }
    }
    double elapsed = timer.seconds();
    ok &= runs == 300 && passed == runs;
    ok &= elapsed < 120.0;
    report(4, ok, elapsed,
           "coreset validity: " + std::to_string(passed) + "/" + std::to_string(runs) +
               " greedy+lp runs verified over 50 instances x eps {0.1,0.25,0.5}");
}

TEST(Acceptance, Criterion5KCenterValidity) {
    Timer timer;
    bool ok = true;
    const std::vector<std::pair<std::size_t, std::size_t>> sizes{
        {5, 5}, {6, 5}, {4, 7}, {3, 8}, {5, 4}};
    std::size_t runs = 0, passed = 0;
    for (std::size_t i = 0; i < 20; ++i) {
        std::uint64_t seed = derive_seed(5001, i);
        auto [w, h] = sizes[i % sizes.size()];
        WeightDist dist = (i % 2 == 0) ? WeightDist::unit() : WeightDist::uniform_int(1, 4);
        auto g = grid(w, h, dist, seed);
        PointSet points;
        if (i % 3 == 0) {
            points = random_point_subset(g, std::max<std::size_t>(5, g.vertex_count() / 2),
                                         derive_seed(seed, 7));
        } else {
            std::vector<VertexId> all(g.vertex_count());
            for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<VertexId>(v);
            points = PointSet(all);
        }
        DistanceOracle oracle(g);
        for (double eps : {0.25, 0.5}) {
            auto result = kcenter_coreset(oracle, points, 2, eps, derive_seed(seed, 11));
            bool pass = verify_kcenter(oracle, points, result.coreset, 2, eps).ok;
            ++runs;
            passed += pass;
            ok &= pass;
        }
    }
    double elapsed = timer.seconds();
    ok &= runs == 40 && passed == runs;
    ok &= elapsed < 180.0;
    report(5, ok, elapsed,
           "k-center validity: " + std::to_string(passed) + "/" + std::to_string(runs) +
               " exhaustive tuple certifications (20 instances, k=2)");
}

TEST(Acceptance, Criterion6VcProperty) {
    Timer timer;
    bool ok = true;
    const std::vector<std::pair<std::size_t, std::size_t>> sizes{{5, 5}, {4, 6}, {3, 8}, {4, 4},
                                                                 {5, 3}};
    for (std::size_t i = 0; i < 20; ++i) {
        std::uint64_t seed = derive_seed(6001, i);
        auto [w, h] = sizes[i % sizes.size()];
        WeightDist dist = (i % 3 == 0)   ? WeightDist::unit()
                          : (i % 3 == 1) ? WeightDist::uniform_int(1, 6)
                                         : WeightDist::uniform_real(0.5, 3.0);
        auto g = grid(w, h, dist, seed);
        if (i % 4 == 1 && g.vertex_count() + 5 <= 25)
            g = random_subdivision(g, 5, derive_seed(seed, 1));
        ASSERT_LE(g.vertex_count(), 25u);
        DistanceOracle oracle(g);
        std::vector<VertexId> all(g.vertex_count());
        for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<VertexId>(v);
        auto sys = ball_system(oracle, PointSet(all));
        ok &= vc_dim_at_most(sys, 4);
    }
    double elapsed = timer.seconds();
    ok &= elapsed < 120.0;
    report(6, ok, elapsed, "ball systems of 20 planar graphs (n<=25) have no shattered 5-set");
}

TEST(Acceptance, Criterion7HittingSetCalibration) {
    Timer timer;
    bool ok = true;
    auto corpus = coreset_corpus();
    std::size_t lp_runs = 0, rounded = 0, exact_checked = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& inst = corpus[i];
        DistanceOracle oracle(inst.graph);
        for (double eps : {0.1, 0.25, 0.5}) {
            if (inst.points.size() < 2) continue;
            if (diameter(oracle, inst.points) == 0.0) continue;
            std::vector<VertexId> queries(inst.graph.vertex_count());
            for (std::size_t v = 0; v < queries.size(); ++v)
                queries[v] = static_cast<VertexId>(v);
            auto bucketed = detail::bucket_queries(oracle, inst.points, eps, queries);
            const auto& members = inst.points.members();
            for (const auto& [bucket, bucket_members] : bucketed.buckets) {
                const double cutoff = static_cast<double>(bucket - 1) * bucketed.delta;
                HittingSetInstance hs(detail::bucket_set_system(oracle, members, bucket_members,
                                                                cutoff, bucketed.z));
                FractionalSolution frac;
                try {
                    frac = lp_fractional(hs, 0.02);
                } catch (const LpNonConvergence& e) {
                    frac = e.best_feasible;
                }
                ++lp_runs;
                ok &= frac.slack >= 1.0 - 0.02;
                auto r = round_vc(hs, frac, 4, derive_seed(700, lp_runs));
                ok &= verify_hitting(hs, r.chosen).ok;
                ++rounded;
                if (hs.universe_size() <= 18) {
                    auto greedy = greedy_hitting_set(hs);
                    auto exact = exact_hitting_set(hs);
                    std::size_t f = 1;
                    for (std::size_t u = 0; u < hs.universe_size(); ++u)
                        f = std::max(f, hs.sets_of(u).size());
                    ok &= static_cast<double>(greedy.size()) <=
                          (1.0 + std::log(static_cast<double>(f))) *
                                  static_cast<double>(exact.size()) +
                              1e-9;
                    ++exact_checked;
                }
            }
        }
    }
    double elapsed = timer.seconds();
    ok &= lp_runs > 0 && exact_checked > 0;
    report(7, ok, elapsed,
           "hitting-set calibration: " + std::to_string(lp_runs) + " bucket LPs (slack>=0.98), " +
               std::to_string(rounded) + " verified roundings, " +
               std::to_string(exact_checked) + " greedy-vs-exact comparisons");
}

TEST(Acceptance, Criterion8ExactSearcherOracleEquivalence) {
    Timer timer;
    bool ok = true;
    std::mt19937_64 rng(888);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = pc_test::random_connected_graph(rng, 6, 3);
        std::vector<std::vector<double>> matrix;
        for (VertexId v = 0; v < g.vertex_count(); ++v) matrix.push_back(sssp(g, v));
        DistanceOracle oracle(g);
        for (double eps : {0.2, 0.5}) {
            auto best = max_comatching(oracle, eps);
            ok &= best.pairs.size() == exhaustive_max_comatching(matrix, eps);
            ok &= best.pairs.empty() || validate_comatching(oracle, best).ok;
        }
    }
    double elapsed = timer.seconds();
    report(8, ok, elapsed,
           "max_comatching equals exhaustive subset enumeration on 200 graphs x eps {0.2,0.5}");
}

TEST(Acceptance, Criterion9RamseyExtraction) {
    Timer timer;
    bool ok = true;
    std::size_t runs = 0, passed = 0;
    auto check_output = [&](const DistanceOracle& oracle, const RamseyExtraction& out,
                            double eps) {
        if (out.comatching)
            return out.comatching->epsilon == eps / 2.0 &&
                   validate_comatching(oracle, *out.comatching).ok;
        return out.double_ladder.has_value() && out.double_ladder->epsilon == eps / 2.0 &&
               validate_double_ladder(oracle, *out.double_ladder).ok;
    };
    // Ten relabeled tree families.
    for (std::size_t i = 0; i < 10; ++i) {
        std::mt19937_64 rng(derive_seed(9001, i));
        auto fam = gen_tree_k(2);
        std::vector<VertexId> sigma;
        auto g = relabeled(fam.graph, rng, sigma);
        DistanceOracle oracle(g);
        KTupleFamily f;
        f.k = 2;
        f.radius = 3.0;
        f.epsilon = 1.0 / 3.0;
        for (const auto& e : fam.entries) {
            KTupleFamily::Entry mapped;
            mapped.p = sigma[e.p];
            for (VertexId x : e.points) mapped.points.push_back(sigma[x]);
            f.entries.push_back(std::move(mapped));
        }
        for (std::size_t a = f.entries.size(); a > 1; --a)
            std::swap(f.entries[a - 1], f.entries[uniform_below(rng, a)]);
        ++runs;
        bool pass = validate_k_comatching(oracle, f).ok &&
                    check_output(oracle, ramsey_extract(oracle, f), f.epsilon);
        passed += pass;
        ok &= pass;
    }
    // Ten scaled double-ladder wrappings on path metrics.
    for (std::size_t i = 0; i < 10; ++i) {
        std::mt19937_64 rng(derive_seed(9101, i));
        double s = 1.0 + static_cast<double>(uniform_below(rng, 5));
        std::vector<double> deltas{5, 4, 2, 6, 6, 2, 4, 5};
        for (double& d : deltas) d *= s;
        auto g = pc_test::path_graph(deltas);
        DistanceOracle oracle(g);
        KTupleFamily f;
        f.k = 2;
        f.radius = 10.0 * s;
        f.epsilon = 0.2;
        f.entries = {{3, {0, 6}}, {4, {1, 7}}, {5, {2, 8}}};
        for (std::size_t a = f.entries.size(); a > 1; --a)
            std::swap(f.entries[a - 1], f.entries[uniform_below(rng, a)]);
        ++runs;
        bool pass = validate_k_comatching(oracle, f).ok &&
                    check_output(oracle, ramsey_extract(oracle, f), f.epsilon);
        passed += pass;
        ok &= pass;
    }
    double elapsed = timer.seconds();
    ok &= runs == 20 && passed == runs;
    report(9, ok, elapsed,
           "ramsey extraction: " + std::to_string(passed) + "/" + std::to_string(runs) +
               " seeded (2,eps)-comatchings yield validated structures at eps/2");
}
