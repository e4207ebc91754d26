#ifndef PLANAR_CORESET_SET_SYSTEM_HPP_
#define PLANAR_CORESET_SET_SYSTEM_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "planar_coreset/graph.hpp"
#include "planar_coreset/random.hpp"

namespace planar_coreset {

/// Fixed-size bitset sized at runtime; the backing store of set systems.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    void set(std::size_t i) { words_[i >> 6] |= (1ULL << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1ULL; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool intersects(const Bitset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    Bitset complemented() const {
        Bitset out(size_);
        for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
        if (size_ & 63) out.words_.back() &= (1ULL << (size_ & 63)) - 1;
        return out;
    }

    bool operator==(const Bitset& other) const = default;
    bool operator<(const Bitset& other) const {
        return words_ < other.words_;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Family of subsets of a universe [0, universe_size). Duplicate sets are
/// dropped on insertion.
class SetSystem {
public:
    SetSystem() = default;
    explicit SetSystem(std::size_t universe_size) : universe_(universe_size) {}

    std::size_t universe_size() const { return universe_; }
    std::size_t set_count() const { return sets_.size(); }
    const std::vector<Bitset>& sets() const { return sets_; }
    const Bitset& set(std::size_t i) const { return sets_.at(i); }

    /// Returns false when the set was already present.
    bool add(Bitset s) {
        if (s.size() != universe_) throw InputError("SetSystem: bitset size mismatch");
        if (!seen_.insert(s).second) return false;
        sets_.push_back(std::move(s));
        return true;
    }

    bool add(const std::vector<std::size_t>& elements) {
        Bitset s(universe_);
        for (std::size_t e : elements) {
            if (e >= universe_) throw InputError("SetSystem: element out of range");
            s.set(e);
        }
        return add(std::move(s));
    }

private:
    std::size_t universe_ = 0;
    std::vector<Bitset> sets_;
    std::set<Bitset> seen_;
};

/// The ball system of the metric restricted to `ground`: universe indices are
/// positions in ground.members(), and there is one set per distinct trace
/// B(v,r)∩ground over all centers v and radii r. Radii are enumerated at the
/// realized distances from each center to ground (radii between consecutive
/// realized distances give the same trace); the empty trace is added when the
/// metric realizes it, i.e. when some vertex has positive distance to ground.
inline SetSystem ball_system(const DistanceOracle& oracle, const PointSet& ground) {
    if (ground.empty()) throw InputError("ball_system: empty ground set");
    const std::size_t m = ground.size();
    SetSystem system(m);
    const std::size_t n = oracle.graph().vertex_count();
    bool empty_realized = false;
    for (VertexId v = 0; v < n; ++v) {
        const auto& row = oracle.from(v);
        std::vector<double> radii;
        radii.reserve(m);
        double nearest = kUnreachable;
        for (VertexId p : ground) {
            if (row[p] != kUnreachable) radii.push_back(row[p]);
            nearest = std::min(nearest, row[p]);
        }
        if (nearest > 0.0) empty_realized = true;
        std::sort(radii.begin(), radii.end());
        radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
        for (double r : radii) {
            Bitset s(m);
            std::size_t idx = 0;
            for (VertexId p : ground) {
                if (row[p] <= r) s.set(idx);
                ++idx;
            }
            system.add(std::move(s));
        }
    }
    if (empty_realized) system.add(Bitset(m));
    return system;
}

/// True iff all 2^|X| traces of X are realized by the system.
inline bool shatters(const SetSystem& system, const std::vector<std::size_t>& x) {
    if (x.size() >= 26) throw CapExceededError("shatters: subset too large");
    for (std::size_t e : x)
        if (e >= system.universe_size()) throw InputError("shatters: element out of range");
    const std::uint32_t want = 1u << x.size();
    std::vector<bool> seen(want, false);
    std::uint32_t found = 0;
    if (system.set_count() == 0) return false;
    for (const Bitset& s : system.sets()) {
        std::uint32_t trace = 0;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (s.test(x[j])) trace |= (1u << j);
        if (!seen[trace]) {
            seen[trace] = true;
            if (++found == want) return true;
        }
    }
    return found == want;
}

/// Exhaustively checks that no (d+1)-subset of the universe is shattered.
/// Refuses universes larger than `universe_cap` (the check is exponential).
/// Works on the transposed incidence (per-element set masks): a subset X is
/// shattered iff for every trace pattern the corresponding intersection of
/// masks and complements is nonempty, and the first empty pattern ends the
/// subset early.
inline bool vc_dim_at_most(const SetSystem& system, int d,
                           std::size_t universe_cap = 30) {
    if (d < 0) throw InputError("vc_dim_at_most: d must be nonnegative");
    const std::size_t n = system.universe_size();
    if (n > universe_cap)
        throw CapExceededError("vc_dim_at_most: universe exceeds cap of " +
                               std::to_string(universe_cap));
    const std::size_t k = static_cast<std::size_t>(d) + 1;
    if (k > n) return true;
    if (system.set_count() == 0) return true;

    const std::size_t m = system.set_count();
    std::vector<Bitset> in_sets(n, Bitset(m));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t u = 0; u < n; ++u)
            if (system.set(j).test(u)) in_sets[u].set(j);
    std::vector<Bitset> out_sets(n);
    for (std::size_t u = 0; u < n; ++u) out_sets[u] = in_sets[u].complemented();

    std::vector<std::size_t> subset(k);
    for (std::size_t i = 0; i < k; ++i) subset[i] = i;
    auto is_shattered = [&](const std::vector<std::size_t>& x) {
        for (std::uint32_t trace = 0; trace < (1u << k); ++trace) {
            Bitset acc = (trace & 1u) ? in_sets[x[0]] : out_sets[x[0]];
            for (std::size_t i = 1; i < k; ++i)
                acc &= (trace >> i & 1u) ? in_sets[x[i]] : out_sets[x[i]];
            if (!acc.any()) return false;
        }
        return true;
    };
    while (true) {
        if (is_shattered(subset)) return false;
        // next k-combination in lexicographic order
        std::size_t i = k;
        while (i > 0 && subset[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++subset[i - 1];
        for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
    return true;
}

/// sum_{i=0}^{d} C(n, i), the Sauer-Shelah bound on the number of distinct
/// sets in a system of VC dimension at most d.
inline std::uint64_t sauer_shelah(std::size_t n, int d) {
    if (d < 0) throw InputError("sauer_shelah: d must be nonnegative");
    std::uint64_t total = 0;
    std::uint64_t binom = 1;  // C(n, 0)
    for (std::size_t i = 0;; ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() - binom)
            throw InputError("sauer_shelah: overflow");
        total += binom;
        if (i == static_cast<std::size_t>(d) || i >= n) break;
        // C(n, i+1) = C(n, i) * (n-i) / (i+1)
        if (binom > std::numeric_limits<std::uint64_t>::max() / (n - i))
            throw InputError("sauer_shelah: overflow");
        binom = binom * (n - i) / (i + 1);
    }
    return total;
}

/// m i.i.d. draws from the distribution proportional to `weights`,
/// deterministic given the seed.
inline std::vector<std::size_t> weighted_epsilon_net_sample(
    const std::vector<double>& weights, std::size_t m, std::uint64_t seed) {
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw InputError("weighted sample: negative weight");
        total += w;
    }
    if (!(total > 0.0)) throw InputError("weighted sample: total weight must be positive");
    std::vector<double> cdf(weights.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        acc += weights[i];
        cdf[i] = acc;
    }
    cdf.back() = total;
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> draws(m);
    for (std::size_t i = 0; i < m; ++i) {
        double t = uniform_unit(rng) * total;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), t);
        draws[i] = std::min<std::size_t>(cdf.size() - 1,
                                         static_cast<std::size_t>(it - cdf.begin()));
    }
    return draws;
}

}  // namespace planar_coreset

#endif  // PLANAR_CORESET_SET_SYSTEM_HPP_
