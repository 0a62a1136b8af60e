#pragma once

#include <functional>
#include <vector>

#include "dissoc/engine.hpp"
#include "dissoc/tree.hpp"

namespace dissoc {

/// Selects the host vertex for an iterated attachment; returns -1 when no
/// vertex of degree < 3 exists.
using AttachPolicy = std::function<int(const Tree&)>;

int lowest_attachable(const Tree& t);
int highest_attachable(const Tree& t);

/// The (order, dissociation number, count) a family builder promises for its
/// output; computed values must match exactly.
struct FamilyPrediction {
    int n = 0;
    int psi = 0;
    Count phi = 0;
};

struct BuiltFamily {
    Tree tree;
    FamilyPrediction prediction;
};

/// Path of order ell with a pendant edge hung on every path vertex:
/// (3*ell, 2*ell, f(ell+1)).
BuiltFamily build_T(int ell);

/// Path of order ell+1 with pendant edges on every vertex except one
/// endvertex: (3*ell+1, 2*ell+1, g(ell)).
BuiltFamily build_T1(int ell);

/// Path of order ell+2 with pendant edges on every interior vertex:
/// (3*ell+2, 2*ell+2, f(ell)).
BuiltFamily build_T2(int ell);

enum class ChainBase { k1, k2 };

/// m iterated five-vertex attachments on K1 or K2. Both bases pin the count
/// at 1; the orders are 1+5m and 2+5m with dissociation numbers 1+4m and
/// 2+4m.
BuiltFamily build_chain(ChainBase base, int m, const AttachPolicy& policy = lowest_attachable);

/// Every isomorphism class reachable from the base by m five-vertex
/// attachments, over all admissible host choices (not just the default
/// policy). Sorted by canonical code. For m >= 2 this is genuinely larger
/// than the single build_chain class.
std::vector<Tree> chain_family(ChainBase base, int m);

/// Every construction of an extremal tree for the given feasible (n, psi):
/// the returned trees attain the sharp count bound. Two of the parameter
/// regimes offer two distinct constructions, in which case both variants are
/// returned. Throws std::domain_error on infeasible pairs.
std::vector<BuiltFamily> build_extremal(int n, int psi);

enum class FamilyKind { T, T1, T2, k1_chain, k2_chain, extremal };

/// Uniform parameterization of the builders above: ell_or_m is ell for the
/// three caterpillar families and m for the chains; the extremal kind reads
/// (n, psi) instead.
struct FamilySpec {
    FamilyKind kind = FamilyKind::T;
    int ell_or_m = 1;
    int n = 0;    // extremal only
    int psi = 0;  // extremal only
    AttachPolicy attach_policy = lowest_attachable;
};

std::vector<BuiltFamily> build_family(const FamilySpec& spec);

}  // namespace dissoc
