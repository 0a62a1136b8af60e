#include "dissoc/treegen.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "dissoc/canonical.hpp"

namespace dissoc {

namespace {

Tree grow_leaf(const Tree& t, int host) {
    auto edges = t.edges();
    edges.emplace_back(host, t.order());
    return Tree::from_edges(t.order() + 1, std::move(edges));
}

}  // namespace

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("below: bound must be positive");
    const std::uint64_t threshold = (-bound) % bound;  // 2^64 mod bound
    for (;;) {
        const std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

std::vector<Tree> enumerate_trees(int n, int max_degree, int ceiling) {
    if (n < 1) throw std::domain_error("enumerate_trees: order must be >= 1");
    if (n > ceiling)
        throw std::domain_error("enumerate_trees: order " + std::to_string(n) +
                                " above ceiling " + std::to_string(ceiling));
    if (max_degree < 1 && n > 1)
        throw std::domain_error("enumerate_trees: max_degree too small");

    std::vector<Tree> level{Tree::from_edges(1, {})};
    for (int order = 2; order <= n; ++order) {
        std::map<std::string, Tree> classes;  // code -> representative
        for (const Tree& t : level)
            for (int host = 0; host < t.order(); ++host) {
                if (t.degree(host) >= max_degree) continue;
                Tree grown = grow_leaf(t, host);
                std::string code = canonical_code(grown).code;
                classes.try_emplace(std::move(code), std::move(grown));
            }
        level.clear();
        for (auto& [code, tree] : classes) level.push_back(std::move(tree));
    }
    return level;
}

std::vector<Tree> enumerate_subcubic(int n, int ceiling) {
    return enumerate_trees(n, 3, ceiling);
}

Tree random_tree(int n, std::uint64_t seed, int max_degree) {
    if (n < 1) throw std::domain_error("random_tree: order must be >= 1");
    SplitMix64 rng(seed);
    Tree t = Tree::from_edges(1, {});
    std::vector<int> hosts;
    for (int order = 2; order <= n; ++order) {
        hosts.clear();
        for (int v = 0; v < t.order(); ++v)
            if (t.degree(v) < max_degree) hosts.push_back(v);
        if (hosts.empty())
            throw std::domain_error("random_tree: no vertex of degree < cap at order " +
                                    std::to_string(t.order()));
        t = grow_leaf(t, hosts[rng.below(hosts.size())]);
    }
    return t;
}

Tree random_subcubic(int n, std::uint64_t seed) { return random_tree(n, seed, 3); }

std::vector<Tree> generate(const GenConfig& config) {
    if (config.mode == GenMode::exhaustive)
        return enumerate_trees(config.n, config.max_degree_cap, config.ceiling);
    return {random_tree(config.n, config.seed, config.max_degree_cap)};
}

}  // namespace dissoc
