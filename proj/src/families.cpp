#include "dissoc/families.hpp"

#include <cassert>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "dissoc/canonical.hpp"
#include "dissoc/sequences.hpp"

namespace dissoc {

namespace {

Tree path(int order) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(order - 1);
    for (int i = 0; i + 1 < order; ++i) edges.emplace_back(i, i + 1);
    return Tree::from_edges(order, std::move(edges));
}

// Pendant edges attached in ascending host order keep builds byte-identical.
Tree pendants_at(Tree t, int first, int last) {
    for (int v = first; v <= last; ++v) t = attach_pendant_edge(t, v).tree;
    return t;
}

Tree iterate_p5(Tree t, int m, const AttachPolicy& policy) {
    for (int i = 0; i < m; ++i) {
        const int host = policy(t);
        if (host < 0)
            throw std::domain_error("attachment policy found no vertex of degree < 3");
        t = attach_p5(t, host).tree;
    }
    return t;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::domain_error(what);
}

}  // namespace

int lowest_attachable(const Tree& t) {
    for (int v = 0; v < t.order(); ++v)
        if (t.degree(v) < 3) return v;
    return -1;
}

int highest_attachable(const Tree& t) {
    for (int v = t.order() - 1; v >= 0; --v)
        if (t.degree(v) < 3) return v;
    return -1;
}

BuiltFamily build_T(int ell) {
    require(ell >= 1, "build_T: ell must be >= 1");
    Tree t = pendants_at(path(ell), 0, ell - 1);
    return {std::move(t), {3 * ell, 2 * ell, seq_f(ell + 1)}};
}

BuiltFamily build_T1(int ell) {
    require(ell >= 1, "build_T1: ell must be >= 1");
    // spare the endvertex with the highest label
    Tree t = pendants_at(path(ell + 1), 0, ell - 1);
    return {std::move(t), {3 * ell + 1, 2 * ell + 1, seq_g(ell)}};
}

BuiltFamily build_T2(int ell) {
    require(ell >= 1, "build_T2: ell must be >= 1");
    Tree t = pendants_at(path(ell + 2), 1, ell);
    return {std::move(t), {3 * ell + 2, 2 * ell + 2, seq_f(ell)}};
}

BuiltFamily build_chain(ChainBase base, int m, const AttachPolicy& policy) {
    require(m >= 0, "build_chain: m must be >= 0");
    const int base_order = base == ChainBase::k1 ? 1 : 2;
    Tree t = base == ChainBase::k1 ? Tree::from_edges(1, {}) : path(2);
    t = iterate_p5(std::move(t), m, policy);
    const int n = base_order + 5 * m;
    const int psi = base_order + 4 * m;
    return {std::move(t), {n, psi, phi_bound_sharp(n, psi)}};
}

std::vector<Tree> chain_family(ChainBase base, int m) {
    require(m >= 0, "chain_family: m must be >= 0");
    std::map<std::string, Tree> classes;
    {
        Tree seed = base == ChainBase::k1 ? Tree::from_edges(1, {}) : path(2);
        classes.emplace(canonical_code(seed).code, std::move(seed));
    }
    for (int step = 0; step < m; ++step) {
        std::map<std::string, Tree> next;
        for (const auto& [code, tree] : classes)
            for (int host = 0; host < tree.order(); ++host) {
                if (tree.degree(host) >= 3) continue;
                Tree grown = attach_p5(tree, host).tree;
                std::string grown_code = canonical_code(grown).code;
                next.try_emplace(std::move(grown_code), std::move(grown));
            }
        classes = std::move(next);
    }
    std::vector<Tree> out;
    out.reserve(classes.size());
    for (auto& [code, tree] : classes) out.push_back(std::move(tree));
    return out;
}

std::vector<BuiltFamily> build_family(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::T: return {build_T(spec.ell_or_m)};
        case FamilyKind::T1: return {build_T1(spec.ell_or_m)};
        case FamilyKind::T2: return {build_T2(spec.ell_or_m)};
        case FamilyKind::k1_chain:
            return {build_chain(ChainBase::k1, spec.ell_or_m, spec.attach_policy)};
        case FamilyKind::k2_chain:
            return {build_chain(ChainBase::k2, spec.ell_or_m, spec.attach_policy)};
        case FamilyKind::extremal: return build_extremal(spec.n, spec.psi);
    }
    throw std::domain_error("build_family: unknown kind");
}

std::vector<BuiltFamily> build_extremal(int n, int psi) {
    const Count bound = phi_bound_sharp(n, psi);  // also validates the window
    const FamilyPrediction prediction{n, psi, bound};
    const AttachPolicy& policy = lowest_attachable;

    auto finish = [&](Tree base_tree) {
        const int m = (n - base_tree.order()) / 5;
        assert((n - base_tree.order()) % 5 == 0);
        Tree t = iterate_p5(std::move(base_tree), m, policy);
        assert(t.order() == n);
        return BuiltFamily{std::move(t), prediction};
    };

    std::vector<BuiltFamily> variants;
    if (3 * psi == 2 * n) {
        variants.push_back(finish(build_T(psi / 2).tree));
    } else if (5 * psi == 4 * n) {
        variants.push_back(finish(path(5)));
        variants.push_back(finish(build_T2(1).tree));
    } else if (5 * psi == 4 * n + 1) {
        variants.push_back(finish(Tree::from_edges(1, {})));
    } else if (5 * psi == 4 * n + 2) {
        variants.push_back(finish(path(2)));
    } else if (psi % 2 == 0) {
        // strictly between the 2n/3 and 4n/5 walls, even
        variants.push_back(finish(build_T((4 * n - 5 * psi) / 2).tree));
        variants.push_back(finish(build_T2((4 * n - 5 * psi + 2) / 2).tree));
    } else {
        variants.push_back(finish(build_T1((4 * n - 5 * psi + 1) / 2).tree));
    }
    return variants;
}

}  // namespace dissoc
