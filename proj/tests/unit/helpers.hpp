#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "dissoc/tree.hpp"
#include "dissoc/treegen.hpp"

namespace testutil {

inline dissoc::Tree make_path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return dissoc::Tree::from_edges(n, std::move(edges));
}

inline dissoc::Tree make_star(int n, int center = 0) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        if (v != center) edges.emplace_back(center, v);
    return dissoc::Tree::from_edges(n, std::move(edges));
}

inline dissoc::Tree relabel(const dissoc::Tree& t, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : t.edges()) edges.emplace_back(perm[a], perm[b]);
    return dissoc::Tree::from_edges(t.order(), std::move(edges));
}

inline std::vector<int> random_permutation(int n, dissoc::SplitMix64& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    return perm;
}

/// Every isomorphism class of trees of order n, unrestricted degrees.
inline std::vector<dissoc::Tree> all_trees(int n) {
    return dissoc::enumerate_trees(n, n);
}

}  // namespace testutil
