#ifndef PLANAR_CORESET_HITTING_SET_HPP_
#define PLANAR_CORESET_HITTING_SET_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "planar_coreset/errors.hpp"
#include "planar_coreset/set_system.hpp"

namespace planar_coreset {

/// Hitting-set instance: the universe elements are the candidate points and
/// every set of the system must be intersected. Empty sets are unhittable and
/// rejected at construction.
struct HittingSetInstance {
    SetSystem system;

    explicit HittingSetInstance(SetSystem s) : system(std::move(s)) {
        for (const Bitset& a : system.sets())
            if (!a.any()) throw InputError("HittingSetInstance: empty set is unhittable");
        elements_of_.resize(system.set_count());
        sets_of_.resize(system.universe_size());
        for (std::size_t j = 0; j < system.set_count(); ++j) {
            const Bitset& a = system.set(j);
            for (std::size_t u = 0; u < system.universe_size(); ++u) {
                if (a.test(u)) {
                    elements_of_[j].push_back(u);
                    sets_of_[u].push_back(j);
                }
            }
        }
    }

    std::size_t universe_size() const { return system.universe_size(); }
    std::size_t set_count() const { return system.set_count(); }
    const std::vector<std::size_t>& elements_of(std::size_t set) const {
        return elements_of_.at(set);
    }
    const std::vector<std::size_t>& sets_of(std::size_t element) const {
        return sets_of_.at(element);
    }

private:
    std::vector<std::vector<std::size_t>> elements_of_;
    std::vector<std::vector<std::size_t>> sets_of_;
};

struct FractionalSolution {
    std::vector<double> x;
    double value = 0.0;        // sum of x
    double slack = 0.0;        // min over sets of x(A); feasible iff >= 1 - tol
    double lower_bound = 0.0;  // certified lower bound on tau* (feasible dual)
    std::vector<double> dual_y;
    bool converged = false;
    std::size_t iterations = 0;

    double gamma_achieved() const {
        return lower_bound > 0.0 ? value / lower_bound - 1.0
                                 : std::numeric_limits<double>::infinity();
    }
};

/// Thrown when the multiplicative-weights solver hits its iteration cap before
/// certifying the requested accuracy; carries the best feasible solution found.
class LpNonConvergence : public std::runtime_error {
public:
    LpNonConvergence(std::string what, FractionalSolution best)
        : std::runtime_error(std::move(what)), best_feasible(std::move(best)) {}
    FractionalSolution best_feasible;
};

namespace detail {

inline double coverage_slack(const HittingSetInstance& inst, const std::vector<double>& x) {
    double slack = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < inst.set_count(); ++j) {
        double s = 0.0;
        for (std::size_t u : inst.elements_of(j)) s += x[u];
        slack = std::min(slack, s);
    }
    return slack;
}

}  // namespace detail

/// Approximately solves the fractional hitting-set LP
///     min sum_u x_u   s.t.   x(A) >= 1 for every set A,  x >= 0
/// by multiplicative weights on the constraint side. The returned solution is
/// feasible by construction (counts rescaled to unit slack) and comes with an
/// explicit feasible dual, so value <= (1+gamma) * tau* is certified rather
/// than assumed. Throws LpNonConvergence past the iteration cap.
inline FractionalSolution lp_fractional(const HittingSetInstance& inst,
                                        double gamma = 0.01,
                                        std::size_t iteration_cap = 100000) {
    const std::size_t n = inst.universe_size();
    const std::size_t m = inst.set_count();
    FractionalSolution out;
    out.x.assign(n, 0.0);
    out.dual_y.assign(m, 0.0);
    if (m == 0) {
        out.converged = true;
        out.slack = std::numeric_limits<double>::infinity();
        return out;
    }

    // An element contained in every set solves the LP outright.
    for (std::size_t u = 0; u < n; ++u) {
        if (inst.sets_of(u).size() == m) {
            out.x[u] = 1.0;
            out.value = 1.0;
            out.slack = 1.0;
            out.lower_bound = 1.0;
            out.dual_y[0] = 1.0;
            out.converged = true;
            return out;
        }
    }

    std::vector<double> w(m, 1.0);      // constraint weights
    std::vector<double> score(n, 0.0);  // score[u] = sum of w over sets containing u
    std::vector<double> acc_p(m, 0.0);  // running sum of the round distributions p^t
    std::vector<std::size_t> picks(n, 0);
    std::vector<std::size_t> hit(m, 0);  // coverage counts of the integral picks
    double total_w = static_cast<double>(m);
    auto rebuild_scores = [&]() {
        // Kills the drift of the incremental updates and keeps the weights
        // away from underflow; the distributions p^t are scale invariant.
        total_w = 0.0;
        for (double x : w) total_w += x;
        double factor = static_cast<double>(m) / total_w;
        for (double& x : w) x *= factor;
        total_w = static_cast<double>(m);
        std::fill(score.begin(), score.end(), 0.0);
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t u : inst.elements_of(j)) score[u] += w[j];
    };
    rebuild_scores();

    double eta = 0.25;
    const double eta_min = std::max(1e-3, gamma / 8.0);
    std::size_t epoch_rounds = 0;
    std::size_t epoch_budget = std::max<std::size_t>(
        256, static_cast<std::size_t>(2.0 * std::log(static_cast<double>(m) + 1.0) /
                                      (eta * eta)));
    double best_lower = 1.0;  // tau* >= 1 on any nonempty family
    std::vector<double> best_dual(m, 0.0);
    bool have_best_dual = false;

    std::size_t total_rounds = 0;
    auto finalize = [&](bool converged) {
        std::size_t min_h = *std::min_element(hit.begin(), hit.end());
        if (min_h >= 1) {
            for (std::size_t u = 0; u < n; ++u)
                out.x[u] = static_cast<double>(picks[u]) / static_cast<double>(min_h);
        } else {
            out.x.assign(n, 1.0);  // always feasible: no set is empty
        }
        out.slack = detail::coverage_slack(inst, out.x);
        out.value = 0.0;
        for (double v : out.x) out.value += v;
        out.lower_bound = best_lower;
        out.dual_y = have_best_dual ? best_dual : std::vector<double>(m, 0.0);
        out.converged = converged;
        out.iterations = total_rounds;
    };

    while (total_rounds < iteration_cap) {
        // Best response: the element most demanded by the current weights.
        std::size_t u_star = 0;
        double best_score = -1.0;
        for (std::size_t u = 0; u < n; ++u) {
            if (score[u] > best_score) {
                best_score = score[u];
                u_star = u;
            }
        }
        ++picks[u_star];
        for (std::size_t j = 0; j < m; ++j) acc_p[j] += w[j] / total_w;
        for (std::size_t j : inst.sets_of(u_star)) {
            ++hit[j];
            double delta = -eta * w[j];
            w[j] += delta;
            total_w += delta;
            const auto& elems = inst.elements_of(j);
            if (elems.size() * 2 <= n) {
                for (std::size_t u : elems) score[u] += delta;
            } else {
                // Dense set: adjust everyone, then undo the complement.
                for (std::size_t u = 0; u < n; ++u) score[u] += delta;
                const Bitset& a = inst.system.set(j);
                for (std::size_t u = 0; u < n; ++u)
                    if (!a.test(u)) score[u] -= delta;
            }
        }
        ++total_rounds;
        ++epoch_rounds;

        if ((total_rounds & 63) == 0 || epoch_rounds >= epoch_budget) {
            rebuild_scores();
            // Dual candidate: scale the averaged distribution down to packing
            // feasibility, measured directly so roundoff cannot inflate it.
            double max_load = 0.0;
            double acc_total = 0.0;
            {
                std::vector<double> load(n, 0.0);
                for (std::size_t j = 0; j < m; ++j) {
                    acc_total += acc_p[j];
                    for (std::size_t u : inst.elements_of(j)) load[u] += acc_p[j];
                }
                for (std::size_t u = 0; u < n; ++u) max_load = std::max(max_load, load[u]);
            }
            if (max_load > 0.0) {
                double lower = acc_total / max_load;
                if (lower > best_lower) {
                    best_lower = lower;
                    for (std::size_t j = 0; j < m; ++j) best_dual[j] = acc_p[j] / max_load;
                    have_best_dual = true;
                }
            }
            std::size_t min_h = *std::min_element(hit.begin(), hit.end());
            if (min_h >= 1) {
                double upper = static_cast<double>(total_rounds) / static_cast<double>(min_h);
                if (upper <= (1.0 + gamma) * best_lower + 1e-12) {
                    finalize(true);
                    return out;
                }
            }
            if (epoch_rounds >= epoch_budget) {
                if (eta > eta_min) {
                    eta = std::max(eta_min, eta / 2.0);
                    std::fill(acc_p.begin(), acc_p.end(), 0.0);
                    epoch_rounds = 0;
                    epoch_budget = std::max<std::size_t>(
                        256, static_cast<std::size_t>(
                                 2.0 * std::log(static_cast<double>(m) + 1.0) / (eta * eta)));
                } else {
                    epoch_budget = iteration_cap;  // ride the final eta to the cap
                }
            }
        }
    }
    finalize(false);
    throw LpNonConvergence("lp_fractional: no (1+gamma) certificate within " +
                               std::to_string(iteration_cap) + " iterations",
                           out);
}

struct HitReport {
    bool ok = false;
    std::optional<std::size_t> first_unhit;
};

inline HitReport verify_hitting(const HittingSetInstance& inst,
                                const std::vector<std::size_t>& chosen) {
    Bitset mask(inst.universe_size());
    for (std::size_t u : chosen) {
        if (u >= inst.universe_size()) throw InputError("verify_hitting: element out of range");
        mask.set(u);
    }
    for (std::size_t j = 0; j < inst.set_count(); ++j) {
        if (!inst.system.set(j).intersects(mask)) return {false, j};
    }
    return {true, std::nullopt};
}

/// ln-approximate fallback: repeatedly pick the element covering the most
/// still-unhit sets, ties toward the smallest id.
inline std::vector<std::size_t> greedy_hitting_set(const HittingSetInstance& inst) {
    const std::size_t n = inst.universe_size();
    const std::size_t m = inst.set_count();
    std::vector<bool> covered(m, false);
    std::vector<std::size_t> gain(n, 0);
    for (std::size_t u = 0; u < n; ++u) gain[u] = inst.sets_of(u).size();
    std::size_t remaining = m;
    std::vector<std::size_t> chosen;
    while (remaining > 0) {
        std::size_t best = 0, best_gain = 0;
        for (std::size_t u = 0; u < n; ++u) {
            if (gain[u] > best_gain) {
                best_gain = gain[u];
                best = u;
            }
        }
        if (best_gain == 0) throw InternalError("greedy_hitting_set: stuck with unhit sets");
        chosen.push_back(best);
        for (std::size_t j : inst.sets_of(best)) {
            if (covered[j]) continue;
            covered[j] = true;
            --remaining;
            for (std::size_t u : inst.elements_of(j)) --gain[u];
        }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

struct RoundConfig {
    double c = 8.0;        // sample-size constant
    int max_rounds = 20;   // resampling attempts before the greedy fallback
    int double_every = 5;  // sample size doubles every this many failures
};

struct RoundResult {
    std::vector<std::size_t> chosen;
    bool used_fallback = false;
    int rounds_used = 0;
    std::size_t sample_size = 0;
};

/// Rounds a feasible fractional solution to an integral hitting set by
/// weighted epsilon-net sampling with sample size c*d*tau*ln(tau+2), verifying
/// the result against every set. The output is always a verified hitting set;
/// repeated sampling failures fall back to the greedy algorithm.
inline RoundResult round_vc(const HittingSetInstance& inst, const FractionalSolution& frac,
                            int d, std::uint64_t seed, const RoundConfig& cfg = {}) {
    RoundResult result;
    if (inst.set_count() == 0) return result;
    if (d <= 0) throw InputError("round_vc: d must be positive");
    const double tau = std::max(1.0, frac.value);
    const auto base = static_cast<std::size_t>(
        std::ceil(cfg.c * d * tau * std::log(tau + 2.0)));
    for (int round = 0; round < cfg.max_rounds; ++round) {
        std::size_t size = base << (round / cfg.double_every);
        auto draws = weighted_epsilon_net_sample(frac.x, size, derive_seed(seed, round));
        std::sort(draws.begin(), draws.end());
        draws.erase(std::unique(draws.begin(), draws.end()), draws.end());
        if (verify_hitting(inst, draws).ok) {
            result.chosen = std::move(draws);
            result.rounds_used = round + 1;
            result.sample_size = size;
            return result;
        }
    }
    result.chosen = greedy_hitting_set(inst);
    result.used_fallback = true;
    result.rounds_used = cfg.max_rounds;
    if (!verify_hitting(inst, result.chosen).ok)
        throw InternalError("round_vc: greedy fallback failed verification");
    return result;
}

/// Exact minimum hitting set by subset enumeration, smallest size first and
/// lexicographic within a size. Guarded by a universe cap.
inline std::vector<std::size_t> exact_hitting_set(const HittingSetInstance& inst,
                                                  std::size_t universe_cap = 20) {
    const std::size_t n = inst.universe_size();
    if (n > universe_cap)
        throw CapExceededError("exact_hitting_set: universe exceeds cap");
    if (inst.set_count() == 0) return {};
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::size_t> subset(k);
        for (std::size_t i = 0; i < k; ++i) subset[i] = i;
        while (true) {
            if (verify_hitting(inst, subset).ok) return subset;
            std::size_t i = k;
            while (i > 0 && subset[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++subset[i - 1];
            for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
        }
    }
    throw InternalError("exact_hitting_set: no hitting set found");
}

}  // namespace planar_coreset

#endif  // PLANAR_CORESET_HITTING_SET_HPP_
