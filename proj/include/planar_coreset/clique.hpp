#ifndef PLANAR_CORESET_CLIQUE_HPP_
#define PLANAR_CORESET_CLIQUE_HPP_

#include <algorithm>
#include <cstdint>
#include <vector>

#include "planar_coreset/set_system.hpp"

namespace planar_coreset {

namespace detail {

class MaxCliqueSearch {
public:
    explicit MaxCliqueSearch(const std::vector<Bitset>& adj) : adj_(adj), n_(adj.size()) {}

    std::vector<std::size_t> run() {
        if (n_ == 0) return {};
        std::vector<std::size_t> candidates(n_);
        for (std::size_t i = 0; i < n_; ++i) candidates[i] = i;
        // Sorting by descending degree tightens the coloring bound early on.
        std::stable_sort(candidates.begin(), candidates.end(),
                         [&](std::size_t a, std::size_t b) {
                             return adj_[a].count() > adj_[b].count();
                         });
        std::vector<std::size_t> current;
        expand(candidates, current);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    // Greedy coloring: vertices of the same color class are pairwise
    // nonadjacent, so a clique uses each color at most once.
    void color_sort(const std::vector<std::size_t>& candidates,
                    std::vector<std::size_t>& ordered, std::vector<std::size_t>& bounds) {
        std::vector<std::vector<std::size_t>> classes;
        for (std::size_t v : candidates) {
            bool placed = false;
            for (auto& cls : classes) {
                bool conflict = false;
                for (std::size_t u : cls) {
                    if (adj_[v].test(u)) {
                        conflict = true;
                        break;
                    }
                }
                if (!conflict) {
                    cls.push_back(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) classes.push_back({v});
        }
        ordered.clear();
        bounds.clear();
        for (std::size_t c = 0; c < classes.size(); ++c) {
            for (std::size_t v : classes[c]) {
                ordered.push_back(v);
                bounds.push_back(c + 1);
            }
        }
    }

    void expand(const std::vector<std::size_t>& candidates, std::vector<std::size_t>& current) {
        std::vector<std::size_t> ordered, bounds;
        color_sort(candidates, ordered, bounds);
        for (std::size_t idx = ordered.size(); idx-- > 0;) {
            if (current.size() + bounds[idx] <= best_.size()) return;
            std::size_t v = ordered[idx];
            current.push_back(v);
            std::vector<std::size_t> next;
            for (std::size_t j = 0; j < idx; ++j)
                if (adj_[v].test(ordered[j])) next.push_back(ordered[j]);
            if (next.empty()) {
                if (current.size() > best_.size()) best_ = current;
            } else {
                expand(next, current);
            }
            current.pop_back();
        }
    }

    const std::vector<Bitset>& adj_;
    std::size_t n_;
    std::vector<std::size_t> best_;
};

}  // namespace detail

/// Exact maximum clique (branch and bound with a greedy coloring bound).
/// `adj` is a symmetric adjacency matrix without self-loops. Deterministic.
inline std::vector<std::size_t> max_clique(const std::vector<Bitset>& adj) {
    return detail::MaxCliqueSearch(adj).run();
}

/// Exact maximum independent set: maximum clique of the complement.
inline std::vector<std::size_t> max_independent_set(const std::vector<Bitset>& adj) {
    std::vector<Bitset> co(adj.size());
    for (std::size_t i = 0; i < adj.size(); ++i) {
        co[i] = adj[i].complemented();
        co[i].reset(i);
    }
    return max_clique(co);
}

}  // namespace planar_coreset

#endif  // PLANAR_CORESET_CLIQUE_HPP_
