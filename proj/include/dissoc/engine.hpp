#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "dissoc/tree.hpp"

namespace dissoc {

/// Count of achieving sets. The number of maximum dissociation sets grows
/// like 1.29^n and outruns 64-bit words near n = 170, so counts are
/// arbitrary-precision everywhere.
using Count = mpz_class;

/// One DP state: the largest dissociation-set size realizable in a subtree
/// under the state's constraint, and how many sets realize it. An infeasible
/// state carries the sentinel size and count 0; a feasible one has count >= 1.
struct StateValue {
    static constexpr int kInfeasible = std::numeric_limits<int>::min();

    int size = kInfeasible;
    Count count = 0;

    bool feasible() const noexcept { return size != kInfeasible; }
};

/// States of one vertex v over its subtree:
///   excluded  - v outside the set
///   in_free   - v in the set with no subtree neighbor also in it
///   in_paired - v in the set with exactly one child also in it
struct VertexStates {
    StateValue excluded;
    StateValue in_free;
    StateValue in_paired;
};

using VertexTable = std::vector<VertexStates>;

/// Bottom-up max-plus DP with solution counting.
///
/// Recurrences, for a vertex v with children c_1..c_k:
///   excluded(v)  = sum over i of the best child state (sizes add, counts
///                  multiply, counts of tied child states summing first)
///   in_free(v)   = 1 + sum over i of excluded(c_i)
///   in_paired(v) = 1 + max over j of [in_free(c_j) + sum_{i != j} excluded(c_i)],
///                  counts summed over every j attaining the maximum
/// Leaves: excluded = (0,1), in_free = (1,1), in_paired infeasible.
VertexTable run_dp(const RootedTree& rt);

/// Dissociation number: size of a maximum dissociation set.
int psi(const Tree& t);

/// Number of distinct maximum dissociation sets.
Count phi(const Tree& t);

/// Both quantities from a single DP pass.
std::pair<int, Count> psi_phi(const Tree& t);

/// 3-path vertex cover number, n - psi.
int tau3(const Tree& t);

/// Counts of globally maximum dissociation sets classified by how they use a
/// designated vertex v: avoiding it, containing it at induced degree 0, or
/// containing it at induced degree 1. The three counts sum to phi.
struct RootProfile {
    Count phi_out = 0;
    Count phi_in0 = 0;
    Count phi_in1 = 0;
    int psi = 0;
};

RootProfile root_profile(const Tree& t, int v);

/// True iff every vertex of s has at most one neighbor inside s.
bool is_dissociation_set(const Tree& t, const std::vector<int>& s);

/// Streams every maximum dissociation set exactly once as a sorted vertex
/// list, in lexicographic order of those lists. Backtracks over vertex
/// in/out decisions in label order, pruning any branch whose constrained DP
/// bound falls below psi, so emitting one set costs O(n^2) regardless of how
/// many sets remain.
class MdsEnumerator {
public:
    explicit MdsEnumerator(const Tree& t);

    std::optional<std::vector<int>> next();

    int psi() const noexcept { return psi_; }
    const Count& total() const noexcept { return phi_; }

private:
    struct Frame {
        int vertex;
        int stage;  // 0 try include, 1 try exclude, 2 unwind
    };

    bool reaches_psi() const;
    std::vector<int> collect() const;

    RootedTree rt_;
    int psi_ = 0;
    Count phi_ = 0;
    std::vector<std::int8_t> decision_;  // -1 open, 0 out, 1 in
    std::vector<Frame> stack_;
    // scratch for the constrained size-only DP
    mutable std::vector<long long> exc_, free_, paired_, pfx_, sfx_;
};

struct EnumerateResult {
    std::vector<std::vector<int>> sets;
    bool truncated = false;
};

/// Materializes the enumeration, stopping after `limit` sets when given.
EnumerateResult enumerate_mds(const Tree& t,
                              std::optional<std::uint64_t> limit = std::nullopt);

}  // namespace dissoc
