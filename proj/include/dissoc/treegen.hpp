#pragma once

#include <cstdint>
#include <vector>

#include "dissoc/tree.hpp"

namespace dissoc {

/// SplitMix64 (Steele, Lea, Flood 2014); the full algorithm and constants
/// live here so seeded runs reproduce across platforms and languages.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [0, bound), rejecting the biased tail of 2^64.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

inline constexpr int kEnumerationCeiling = 18;

enum class GenMode { exhaustive, random };

struct GenConfig {
    int n = 1;
    GenMode mode = GenMode::exhaustive;
    std::uint64_t seed = 0;
    int max_degree_cap = 3;
    int ceiling = kEnumerationCeiling;  // exhaustive mode only
};

/// One representative per isomorphism class of trees of order n with maximum
/// degree at most max_degree, sorted by canonical code. Grown level by level:
/// every class of order k+1 arises from some class of order k by adding a
/// leaf, so augment-and-dedupe is exhaustive.
std::vector<Tree> enumerate_trees(int n, int max_degree, int ceiling = kEnumerationCeiling);

std::vector<Tree> enumerate_subcubic(int n, int ceiling = kEnumerationCeiling);

/// Grows from a single vertex by n-1 leaf attachments, each host drawn
/// uniformly (via SplitMix64) from the vertices of degree < max_degree in
/// ascending label order. One draw is consumed per growth step even when
/// only one host is available.
Tree random_tree(int n, std::uint64_t seed, int max_degree);

Tree random_subcubic(int n, std::uint64_t seed);

/// Dispatch on GenConfig; exhaustive mode returns every class, random mode a
/// single sample.
std::vector<Tree> generate(const GenConfig& config);

}  // namespace dissoc
