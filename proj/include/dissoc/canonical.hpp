#pragma once

#include <compare>
#include <string>
#include <vector>

#include "dissoc/tree.hpp"

namespace dissoc {

/// Isomorphism-class certificate for a free tree: two trees receive equal
/// codes iff they are isomorphic as unlabeled trees. The code is the
/// balanced-parenthesis AHU encoding rooted at the centroid, taking the
/// lexicographically smaller of the two rootings for bicentroidal trees.
struct CanonicalCode {
    std::string code;

    auto operator<=>(const CanonicalCode&) const = default;
};

/// The one or two (adjacent) vertices minimizing the largest component
/// remaining after their removal.
std::vector<int> centroids(const Tree& t);

CanonicalCode canonical_code(const Tree& t);

}  // namespace dissoc
