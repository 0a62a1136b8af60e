#pragma once

#include <gmpxx.h>

#include <vector>

#include "dissoc/tree.hpp"

namespace dissoc {

/// Exhaustive ground truth for the dissociation quantities, computed without
/// any of the tree DP machinery.
struct OracleResult {
    int psi = 0;
    mpz_class phi = 0;
    std::vector<std::vector<int>> sets;  // sorted lists, lexicographic order
};

/// Depth-first inclusion/exclusion over vertices in label order. A branch is
/// abandoned as soon as the partial inclusion forces some included vertex to
/// induced degree 2, or when even including every remaining vertex cannot
/// reach the best size found so far. Throws std::length_error when the order
/// exceeds hard_cap.
OracleResult brute_force(const Tree& t, int hard_cap = 24);

}  // namespace dissoc
