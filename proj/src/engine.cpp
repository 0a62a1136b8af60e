#include "dissoc/engine.hpp"

#include <algorithm>

namespace dissoc {

namespace {

// Root states aggregated: the subtree under the root is the whole tree.
struct RootSummary {
    int psi = 0;
    Count phi = 0;
};

RootSummary summarize_root(const VertexTable& table, int root) {
    const VertexStates& s = table[root];
    int best = s.excluded.size;  // excluded is feasible for every vertex
    for (const StateValue* sv : {&s.in_free, &s.in_paired})
        if (sv->feasible()) best = std::max(best, sv->size);
    RootSummary out;
    out.psi = best;
    for (const StateValue* sv : {&s.excluded, &s.in_free, &s.in_paired})
        if (sv->feasible() && sv->size == best) out.phi += sv->count;
    return out;
}

}  // namespace

VertexTable run_dp(const RootedTree& rt) {
    const int n = rt.base.order();
    VertexTable table(n);
    // scratch reused across vertices
    std::vector<int> best_size;
    std::vector<Count> best_count;

    for (int v : rt.postorder) {
        const auto& kids = rt.children[v];
        VertexStates& s = table[v];
        if (kids.empty()) {
            s.excluded = {0, 1};
            s.in_free = {1, 1};
            s.in_paired = StateValue{};
            continue;
        }

        const std::size_t k = kids.size();
        best_size.assign(k, 0);
        best_count.assign(k, 0);

        // excluded: every child takes its best state independently
        int exc_size = 0;
        Count exc_count = 1;
        int sum_child_excluded = 0;
        for (std::size_t i = 0; i < k; ++i) {
            const VertexStates& c = table[kids[i]];
            int best = c.excluded.size;
            if (c.in_free.feasible()) best = std::max(best, c.in_free.size);
            if (c.in_paired.feasible()) best = std::max(best, c.in_paired.size);
            Count ways = 0;
            for (const StateValue* sv : {&c.excluded, &c.in_free, &c.in_paired})
                if (sv->feasible() && sv->size == best) ways += sv->count;
            best_size[i] = best;
            best_count[i] = std::move(ways);
            exc_size += best;
            sum_child_excluded += c.excluded.size;
        }
        for (std::size_t i = 0; i < k; ++i) exc_count *= best_count[i];
        s.excluded = {exc_size, std::move(exc_count)};

        // in_free: v joins the set, all children stay out
        Count free_count = 1;
        for (std::size_t i = 0; i < k; ++i) free_count *= table[kids[i]].excluded.count;
        s.in_free = {1 + sum_child_excluded, std::move(free_count)};

        // in_paired: exactly one child joins alongside v, itself unmatched
        // below; prefix/suffix products give the sibling count factor.
        std::vector<Count> prefix(k + 1), suffix(k + 1);
        prefix[0] = 1;
        for (std::size_t i = 0; i < k; ++i)
            prefix[i + 1] = prefix[i] * table[kids[i]].excluded.count;
        suffix[k] = 1;
        for (std::size_t i = k; i-- > 0;)
            suffix[i] = suffix[i + 1] * table[kids[i]].excluded.count;

        int paired_size = StateValue::kInfeasible;
        Count paired_count = 0;
        for (std::size_t j = 0; j < k; ++j) {
            const VertexStates& c = table[kids[j]];
            if (!c.in_free.feasible()) continue;
            int cand = 1 + sum_child_excluded - c.excluded.size + c.in_free.size;
            if (cand > paired_size) {
                paired_size = cand;
                paired_count = 0;
            }
            if (cand == paired_size)
                paired_count += c.in_free.count * prefix[j] * suffix[j + 1];
        }
        s.in_paired = {paired_size, std::move(paired_count)};
    }
    return table;
}

int psi(const Tree& t) {
    // Root choice is irrelevant to the answer; vertex 0 keeps runs identical.
    RootedTree rt = root_at(t, 0);
    return summarize_root(run_dp(rt), 0).psi;
}

Count phi(const Tree& t) {
    RootedTree rt = root_at(t, 0);
    return summarize_root(run_dp(rt), 0).phi;
}

std::pair<int, Count> psi_phi(const Tree& t) {
    RootedTree rt = root_at(t, 0);
    RootSummary summary = summarize_root(run_dp(rt), 0);
    return {summary.psi, std::move(summary.phi)};
}

int tau3(const Tree& t) { return t.order() - psi(t); }

RootProfile root_profile(const Tree& t, int v) {
    t.check_vertex(v);
    RootedTree rt = root_at(t, v);
    VertexTable table = run_dp(rt);
    RootSummary total = summarize_root(table, v);
    const VertexStates& s = table[v];
    RootProfile profile;
    profile.psi = total.psi;
    if (s.excluded.feasible() && s.excluded.size == total.psi) profile.phi_out = s.excluded.count;
    if (s.in_free.feasible() && s.in_free.size == total.psi) profile.phi_in0 = s.in_free.count;
    if (s.in_paired.feasible() && s.in_paired.size == total.psi) profile.phi_in1 = s.in_paired.count;
    return profile;
}

bool is_dissociation_set(const Tree& t, const std::vector<int>& s) {
    std::vector<char> in(t.order(), 0);
    for (int v : s) {
        t.check_vertex(v);
        in[v] = 1;
    }
    for (int v : s) {
        int inside = 0;
        for (int w : t.neighbors(v)) inside += in[w];
        if (inside > 1) return false;
    }
    return true;
}

MdsEnumerator::MdsEnumerator(const Tree& t) : rt_(root_at(t, 0)) {
    RootSummary total = summarize_root(run_dp(rt_), 0);
    psi_ = total.psi;
    phi_ = std::move(total.phi);
    const int n = t.order();
    decision_.assign(n, -1);
    stack_.push_back({0, 0});
    exc_.resize(n);
    free_.resize(n);
    paired_.resize(n);
    pfx_.reserve(n + 1);
    sfx_.reserve(n + 1);
}

// Size-only DP under the current partial in/out decisions. Returns true iff
// some completion reaches psi. Sentinel arithmetic saturates at kNone.
bool MdsEnumerator::reaches_psi() const {
    constexpr long long kNone = std::numeric_limits<long long>::min() / 4;
    auto add = [](long long a, long long b) {
        return (a <= kNone || b <= kNone) ? kNone : a + b;
    };

    for (int v : rt_.postorder) {
        const auto& kids = rt_.children[v];
        const std::size_t k = kids.size();
        const bool may_out = decision_[v] != 1;
        const bool may_in = decision_[v] != 0;

        long long exc = may_out ? 0 : kNone;
        long long fre = may_in ? 1 : kNone;
        for (int c : kids) {
            long long best = std::max(exc_[c], std::max(free_[c], paired_[c]));
            exc = add(exc, best);
            fre = add(fre, exc_[c]);
        }
        long long paired = kNone;
        if (may_in && k > 0) {
            // Sibling sums via prefix/suffix so one infeasible excluded child
            // does not poison the other choices of partner.
            pfx_.assign(k + 1, 0);
            sfx_.assign(k + 1, 0);
            for (std::size_t i = 0; i < k; ++i) pfx_[i + 1] = add(pfx_[i], exc_[kids[i]]);
            for (std::size_t i = k; i-- > 0;) sfx_[i] = add(sfx_[i + 1], exc_[kids[i]]);
            for (std::size_t j = 0; j < k; ++j) {
                long long cand = add(free_[kids[j]], add(pfx_[j], sfx_[j + 1]));
                if (cand > kNone) paired = std::max(paired, 1 + cand);
            }
        }
        exc_[v] = exc;
        free_[v] = fre;
        paired_[v] = paired;
    }
    const int r = rt_.root;
    long long best = std::max(exc_[r], std::max(free_[r], paired_[r]));
    return best == psi_;
}

std::vector<int> MdsEnumerator::collect() const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(decision_.size()); ++v)
        if (decision_[v] == 1) out.push_back(v);
    return out;
}

std::optional<std::vector<int>> MdsEnumerator::next() {
    const int n = rt_.base.order();
    while (!stack_.empty()) {
        Frame frame = stack_.back();
        if (frame.stage == 2) {
            decision_[frame.vertex] = -1;
            stack_.pop_back();
            continue;
        }
        stack_.back().stage = frame.stage + 1;
        decision_[frame.vertex] = (frame.stage == 0) ? 1 : 0;
        if (!reaches_psi()) continue;
        if (frame.vertex + 1 == n) return collect();
        stack_.push_back({frame.vertex + 1, 0});
    }
    return std::nullopt;
}

EnumerateResult enumerate_mds(const Tree& t, std::optional<std::uint64_t> limit) {
    if (limit && *limit < 1) throw std::invalid_argument("enumerate_mds: limit must be >= 1");
    MdsEnumerator it(t);
    EnumerateResult out;
    while (!limit || out.sets.size() < *limit) {
        auto set = it.next();
        if (!set) break;
        out.sets.push_back(std::move(*set));
    }
    if (limit) out.truncated = it.total() > *limit;
    return out;
}

}  // namespace dissoc
