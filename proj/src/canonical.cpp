#include "dissoc/canonical.hpp"

#include <algorithm>

namespace dissoc {

namespace {

// AHU encoding of the rooted tree: code(v) = "(" + sorted children codes + ")".
std::string ahu_code(const Tree& t, int root) {
    RootedTree rt = root_at(t, root);
    std::vector<std::string> code(t.order());
    for (int v : rt.postorder) {
        std::vector<std::string> parts;
        parts.reserve(rt.children[v].size());
        for (int c : rt.children[v]) parts.push_back(std::move(code[c]));
        std::sort(parts.begin(), parts.end());
        std::string joined = "(";
        for (const auto& p : parts) joined += p;
        joined += ")";
        code[v] = std::move(joined);
    }
    return code[root];
}

}  // namespace

std::vector<int> centroids(const Tree& t) {
    const int n = t.order();
    RootedTree rt = root_at(t, 0);
    std::vector<int> subtree(n, 1);
    for (int v : rt.postorder)
        if (rt.parent[v] != -1) subtree[rt.parent[v]] += subtree[v];

    std::vector<int> best;
    int best_weight = n + 1;
    for (int v = 0; v < n; ++v) {
        int weight = n - subtree[v];  // component through the parent
        for (int c : rt.children[v]) weight = std::max(weight, subtree[c]);
        if (weight < best_weight) {
            best_weight = weight;
            best = {v};
        } else if (weight == best_weight) {
            best.push_back(v);
        }
    }
    return best;
}

CanonicalCode canonical_code(const Tree& t) {
    std::string best;
    for (int c : centroids(t)) {
        std::string code = ahu_code(t, c);
        if (best.empty() || code < best) best = std::move(code);
    }
    return CanonicalCode{std::move(best)};
}

}  // namespace dissoc
