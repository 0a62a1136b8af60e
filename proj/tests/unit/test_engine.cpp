#include <doctest.h>

#include <algorithm>
#include <set>

#include "dissoc/engine.hpp"
#include "dissoc/oracle.hpp"
#include "dissoc/treegen.hpp"
#include "helpers.hpp"

using namespace dissoc;
using testutil::make_path;
using testutil::make_star;

TEST_CASE("run_dp base case and single combine") {
    // single vertex
    VertexTable single = run_dp(root_at(Tree::from_edges(1, {}), 0));
    CHECK(single[0].excluded.size == 0);
    CHECK(single[0].excluded.count == 1);
    CHECK(single[0].in_free.size == 1);
    CHECK(single[0].in_free.count == 1);
    CHECK_FALSE(single[0].in_paired.feasible());

    // K2 rooted at 1
    VertexTable k2 = run_dp(root_at(make_path(2), 1));
    CHECK(k2[1].excluded.size == 1);
    CHECK(k2[1].excluded.count == 1);
    CHECK(k2[1].in_free.size == 1);
    CHECK(k2[1].in_free.count == 1);
    CHECK(k2[1].in_paired.size == 2);
    CHECK(k2[1].in_paired.count == 1);

    // P3 rooted at its center
    VertexTable p3 = run_dp(root_at(make_path(3), 1));
    CHECK(p3[1].excluded.size == 2);
    CHECK(p3[1].excluded.count == 1);
    CHECK(p3[1].in_free.size == 1);
    CHECK(p3[1].in_free.count == 1);
    CHECK(p3[1].in_paired.size == 2);
    CHECK(p3[1].in_paired.count == 2);
}

TEST_CASE("stored DP values recompute from children, sizes and counts") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        Tree t = random_tree(2 + static_cast<int>(rng.below(14)), rng.next(), 4);
        RootedTree rt = root_at(t, static_cast<int>(rng.below(t.order())));
        VertexTable table = run_dp(rt);
        for (int v = 0; v < t.order(); ++v) {
            const auto& kids = rt.children[v];
            int sum_excluded = 0;
            Count free_count = 1;
            for (int c : kids) {
                sum_excluded += table[c].excluded.size;
                free_count *= table[c].excluded.count;
            }
            CHECK(table[v].in_free.size == 1 + sum_excluded);
            CHECK(table[v].in_free.count == free_count);
            if (kids.empty()) {
                CHECK(table[v].excluded.size == 0);
                CHECK(table[v].excluded.count == 1);
                CHECK_FALSE(table[v].in_paired.feasible());
                continue;
            }
            // excluded: sizes add over the best child states, tied counts sum
            // before multiplying across children
            int exc_size = 0;
            Count exc_count = 1;
            for (int c : kids) {
                int best = table[c].excluded.size;
                if (table[c].in_free.feasible()) best = std::max(best, table[c].in_free.size);
                if (table[c].in_paired.feasible()) best = std::max(best, table[c].in_paired.size);
                Count ways = 0;
                for (const StateValue* sv :
                     {&table[c].excluded, &table[c].in_free, &table[c].in_paired})
                    if (sv->feasible() && sv->size == best) ways += sv->count;
                exc_size += best;
                exc_count *= ways;
            }
            CHECK(table[v].excluded.size == exc_size);
            CHECK(table[v].excluded.count == exc_count);
            // in_paired: counts aggregate over every partner attaining the max
            int paired_size = StateValue::kInfeasible;
            for (int c : kids)
                paired_size = std::max(
                    paired_size, 1 + sum_excluded - table[c].excluded.size + table[c].in_free.size);
            Count paired_count = 0;
            for (int c : kids) {
                if (1 + sum_excluded - table[c].excluded.size + table[c].in_free.size !=
                    paired_size)
                    continue;
                Count siblings = 1;
                for (int d : kids)
                    if (d != c) siblings *= table[d].excluded.count;
                paired_count += table[c].in_free.count * siblings;
            }
            CHECK(table[v].in_paired.size == paired_size);
            CHECK(table[v].in_paired.count == paired_count);
        }
    }
}

TEST_CASE("psi and phi on the named small trees") {
    CHECK(psi(make_path(4)) == 3);
    CHECK(psi(Tree::from_edges(1, {})) == 1);
    CHECK(psi(make_path(6)) == 4);
    CHECK(phi(make_path(4)) == 2);
    CHECK(phi(make_path(3)) == 3);
    CHECK(phi(make_star(4)) == 1);
}

TEST_CASE("tau3") {
    CHECK(tau3(make_path(3)) == 1);
    CHECK(tau3(make_path(6)) == 2);
    CHECK(tau3(make_path(2)) == 0);
    // tau3 <= floor(n/3) on every tree
    for (int n = 1; n <= 9; ++n)
        for (const Tree& t : testutil::all_trees(n)) CHECK(tau3(t) <= n / 3);
    SplitMix64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(39));
        Tree t = random_tree(n, rng.next(), 2 + static_cast<int>(rng.below(4)));
        CHECK(tau3(t) <= n / 3);
    }
}

TEST_CASE("root choice never changes psi or phi") {
    // exhaustive over all classes and all roots up to n = 10
    for (int n = 1; n <= 10; ++n)
        for (const Tree& t : testutil::all_trees(n)) {
            auto [expect_psi, expect_phi] = psi_phi(t);
            for (int r = 0; r < n; ++r) {
                VertexTable table = run_dp(root_at(t, r));
                int best = table[r].excluded.size;
                Count count = 0;
                for (const StateValue* sv :
                     {&table[r].excluded, &table[r].in_free, &table[r].in_paired}) {
                    if (!sv->feasible()) continue;
                    if (sv->size > best) best = sv->size;
                }
                for (const StateValue* sv :
                     {&table[r].excluded, &table[r].in_free, &table[r].in_paired})
                    if (sv->feasible() && sv->size == best) count += sv->count;
                CHECK(best == expect_psi);
                CHECK(count == expect_phi);
            }
        }

    // seeded random trees up to n = 40, three roots each
    SplitMix64 rng(99);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(39));
        Tree t = random_tree(n, rng.next(), 3);
        auto [expect_psi, expect_phi] = psi_phi(t);
        for (int k = 0; k < 3; ++k) {
            const int root = static_cast<int>(rng.below(n));
            RootProfile profile = root_profile(t, root);
            CHECK(profile.psi == expect_psi);
            CHECK(profile.phi_out + profile.phi_in0 + profile.phi_in1 == expect_phi);
        }
    }
}

TEST_CASE("root_profile splits phi by how maximum sets use the vertex") {
    RootProfile p3 = root_profile(make_path(3), 0);
    CHECK(p3.phi_out == 1);
    CHECK(p3.phi_in0 == 1);
    CHECK(p3.phi_in1 == 1);

    RootProfile p4 = root_profile(make_path(4), 0);
    CHECK(p4.phi_out == 0);
    CHECK(p4.phi_in0 == 1);
    CHECK(p4.phi_in1 == 1);

    RootProfile k2 = root_profile(make_path(2), 0);
    CHECK(k2.phi_out == 0);
    CHECK(k2.phi_in0 == 0);
    CHECK(k2.phi_in1 == 1);

    CHECK_THROWS_AS(root_profile(make_path(2), 2), TreeError);

    // profile consistency at every vertex, all classes n <= 10
    for (int n = 1; n <= 10; ++n)
        for (const Tree& t : testutil::all_trees(n)) {
            Count total = phi(t);
            for (int v = 0; v < n; ++v) {
                RootProfile profile = root_profile(t, v);
                CHECK(profile.phi_out + profile.phi_in0 + profile.phi_in1 == total);
            }
        }
}

TEST_CASE("is_dissociation_set") {
    CHECK(is_dissociation_set(make_path(4), {0, 1, 3}));
    CHECK_FALSE(is_dissociation_set(make_path(4), {0, 1, 2}));
    CHECK(is_dissociation_set(make_path(4), {}));
    CHECK_THROWS_AS(is_dissociation_set(make_path(4), {4}), TreeError);
}

TEST_CASE("enumerate_mds lists maximum sets in lexicographic order") {
    EnumerateResult p4 = enumerate_mds(make_path(4));
    CHECK(p4.sets == std::vector<std::vector<int>>{{0, 1, 3}, {0, 2, 3}});
    CHECK_FALSE(p4.truncated);

    CHECK(enumerate_mds(make_path(2)).sets == std::vector<std::vector<int>>{{0, 1}});
    CHECK(enumerate_mds(make_path(3)).sets ==
          std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});

    EnumerateResult limited = enumerate_mds(make_path(3), 2);
    CHECK(limited.sets.size() == 2);
    CHECK(limited.truncated);
    CHECK_FALSE(enumerate_mds(make_path(3), 3).truncated);
    CHECK_THROWS_AS(enumerate_mds(make_path(3), 0), std::invalid_argument);
}

TEST_CASE("enumeration properties on random trees") {
    SplitMix64 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(13));
        Tree t = random_tree(n, rng.next(), 3);
        const int size = psi(t);
        EnumerateResult all = enumerate_mds(t);
        CHECK(Count(all.sets.size()) == phi(t));
        CHECK(std::is_sorted(all.sets.begin(), all.sets.end()));
        CHECK(std::adjacent_find(all.sets.begin(), all.sets.end()) == all.sets.end());
        for (const auto& set : all.sets) {
            CHECK(static_cast<int>(set.size()) == size);
            CHECK(is_dissociation_set(t, set));
        }
    }
}

TEST_CASE("engine agrees with the oracle exhaustively up to n = 8") {
    for (int n = 1; n <= 8; ++n)
        for (const Tree& t : testutil::all_trees(n)) {
            OracleResult truth = brute_force(t);
            auto [dp_psi, dp_phi] = psi_phi(t);
            CHECK(dp_psi == truth.psi);
            CHECK(dp_phi == truth.phi);
            CHECK(enumerate_mds(t).sets == truth.sets);
        }
}

TEST_CASE("deleting a leaf lowers psi by at most one") {
    for (int n = 2; n <= 10; ++n)
        for (const Tree& t : testutil::all_trees(n)) {
            const int whole = psi(t);
            for (int v = 0; v < n; ++v) {
                if (t.degree(v) != 1) continue;
                const int reduced = psi(remove_leaf(t, v));
                CHECK(whole - reduced >= 0);
                CHECK(whole - reduced <= 1);
            }
        }
}

TEST_CASE("leaf-deletion counting inequalities, exhaustive to n = 12") {
    // for every leaf v with psi(T-v) = psi(T):
    //   phi_out <= min(phi_in0, phi_in1) and 3*phi_out <= phi
    std::uint64_t qualifying = 0;
    for (int n = 2; n <= 12; ++n)
        for (const Tree& t : testutil::all_trees(n)) {
            auto [whole, total] = psi_phi(t);
            for (int v = 0; v < n; ++v) {
                if (t.degree(v) != 1) continue;
                if (psi(remove_leaf(t, v)) != whole) continue;
                ++qualifying;
                RootProfile profile = root_profile(t, v);
                CHECK(profile.phi_out <= profile.phi_in0);
                CHECK(profile.phi_out <= profile.phi_in1);
                CHECK(3 * profile.phi_out <= total);
            }
        }
    CHECK(qualifying > 0);
}
