#include "dissoc/oracle.hpp"

#include <stdexcept>
#include <string>

namespace dissoc {

namespace {

struct Search {
    const Tree& tree;
    int n;
    std::vector<char> in;
    std::vector<int> induced_degree;  // among included vertices
    std::vector<int> current;
    int best = -1;
    std::vector<std::vector<int>> sets;

    explicit Search(const Tree& t) : tree(t), n(t.order()), in(n, 0), induced_degree(n, 0) {}

    void run(int v) {
        if (v == n) {
            int size = static_cast<int>(current.size());
            if (size > best) {
                best = size;
                sets.clear();
            }
            if (size == best) sets.push_back(current);
            return;
        }
        // Even taking every remaining vertex cannot beat the incumbent.
        if (static_cast<int>(current.size()) + (n - v) < best) return;

        // include v first so results come out in lexicographic order
        int neighbors_in = 0;
        bool blocked = false;
        for (int w : tree.neighbors(v)) {
            if (!in[w]) continue;
            ++neighbors_in;
            if (induced_degree[w] >= 1) blocked = true;
        }
        if (!blocked && neighbors_in <= 1) {
            in[v] = 1;
            induced_degree[v] = neighbors_in;
            for (int w : tree.neighbors(v))
                if (in[w]) ++induced_degree[w];
            current.push_back(v);
            run(v + 1);
            current.pop_back();
            for (int w : tree.neighbors(v))
                if (in[w]) --induced_degree[w];
            induced_degree[v] = 0;
            in[v] = 0;
        }
        run(v + 1);
    }
};

}  // namespace

OracleResult brute_force(const Tree& t, int hard_cap) {
    if (t.order() > hard_cap)
        throw std::length_error("brute_force: order " + std::to_string(t.order()) +
                                " exceeds hard cap " + std::to_string(hard_cap));
    Search search(t);
    search.run(0);
    OracleResult out;
    out.psi = search.best;
    out.phi = static_cast<unsigned long>(search.sets.size());
    out.sets = std::move(search.sets);
    return out;
}

}  // namespace dissoc
