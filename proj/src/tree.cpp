#include "dissoc/tree.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <string_view>

namespace dissoc {

namespace {

std::string kind_prefix(TreeErrorKind kind) {
    switch (kind) {
        case TreeErrorKind::invalid_order: return "invalid order";
        case TreeErrorKind::malformed_line: return "malformed line";
        case TreeErrorKind::label_out_of_range: return "vertex label out of range";
        case TreeErrorKind::wrong_edge_count: return "wrong edge count";
        case TreeErrorKind::self_loop: return "self-loop";
        case TreeErrorKind::duplicate_edge: return "duplicate edge";
        case TreeErrorKind::disconnected: return "disconnected input";
    }
    return "tree error";
}

[[noreturn]] void fail(TreeErrorKind kind, const std::string& detail) {
    throw TreeError(kind, kind_prefix(kind) + ": " + detail);
}

bool parse_int(std::string_view token, int& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

}  // namespace

void Tree::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        fail(TreeErrorKind::label_out_of_range,
             "vertex " + std::to_string(v) + " not in 0.." + std::to_string(n_ - 1));
}

Tree Tree::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 1) fail(TreeErrorKind::invalid_order, "order must be at least 1, got " + std::to_string(n));
    if (static_cast<int>(edges.size()) != n - 1)
        fail(TreeErrorKind::wrong_edge_count,
             std::to_string(edges.size()) + " edges for n=" + std::to_string(n));

    for (auto& [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            fail(TreeErrorKind::label_out_of_range,
                 "edge {" + std::to_string(a) + "," + std::to_string(b) + "} with n=" + std::to_string(n));
        if (a == b) fail(TreeErrorKind::self_loop, "at vertex " + std::to_string(a));
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            fail(TreeErrorKind::duplicate_edge,
                 "{" + std::to_string(edges[i].first) + "," + std::to_string(edges[i].second) + "}");

    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());

    // n-1 simple edges: connected iff acyclic iff a tree.
    std::vector<char> seen(n, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (int w : adj[queue[head]])
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    if (static_cast<int>(queue.size()) != n)
        fail(TreeErrorKind::disconnected,
             "only " + std::to_string(queue.size()) + " of " + std::to_string(n) + " vertices reachable");

    return Tree(n, std::move(edges), std::move(adj));
}

Tree parse_tree(const std::string& text) {
    std::vector<std::string_view> lines;
    std::string_view rest(text);
    while (!rest.empty()) {
        auto nl = rest.find('\n');
        std::string_view line = rest.substr(0, nl);
        rest = (nl == std::string_view::npos) ? std::string_view() : rest.substr(nl + 1);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        auto begin = line.find_first_not_of(" \t");
        if (begin == std::string_view::npos) continue;  // blank
        if (line[begin] == '#') continue;               // comment
        lines.push_back(line);
    }
    if (lines.empty()) fail(TreeErrorKind::malformed_line, "empty input");

    std::vector<std::vector<std::string_view>> tokenized;
    for (auto line : lines) {
        std::vector<std::string_view> tokens;
        std::size_t pos = 0;
        while (pos < line.size()) {
            pos = line.find_first_not_of(" \t", pos);
            if (pos == std::string_view::npos) break;
            auto end = line.find_first_of(" \t", pos);
            if (end == std::string_view::npos) end = line.size();
            tokens.push_back(line.substr(pos, end - pos));
            pos = end;
        }
        tokenized.push_back(std::move(tokens));
    }

    int n = 0;
    if (tokenized[0].size() != 1 || !parse_int(tokenized[0][0], n))
        fail(TreeErrorKind::malformed_line, "expected the order on the first line");
    if (n < 1) fail(TreeErrorKind::invalid_order, "order must be at least 1");

    if (static_cast<int>(tokenized.size()) - 1 != n - 1)
        fail(TreeErrorKind::wrong_edge_count,
             std::to_string(tokenized.size() - 1) + " edges for n=" + std::to_string(n));

    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (std::size_t i = 1; i < tokenized.size(); ++i) {
        const auto& tokens = tokenized[i];
        int a = 0;
        int b = 0;
        if (tokens.size() != 2 || !parse_int(tokens[0], a) || !parse_int(tokens[1], b))
            fail(TreeErrorKind::malformed_line,
                 "expected two vertex labels, got \"" + std::string(lines[i]) + "\"");
        edges.emplace_back(a, b);
    }
    return Tree::from_edges(n, std::move(edges));
}

std::string serialize_tree(const Tree& t) {
    std::ostringstream out;
    out << t.order() << '\n';
    for (const auto& [a, b] : t.edges()) out << a << ' ' << b << '\n';
    return out.str();
}

RootedTree root_at(const Tree& t, int root) {
    t.check_vertex(root);
    const int n = t.order();
    std::vector<int> parent(n, -1);
    std::vector<std::vector<int>> children(n);
    std::vector<int> order{root};
    std::vector<char> seen(n, 0);
    seen[root] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        for (int w : t.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = v;
                children[v].push_back(w);  // ascending: neighbors are sorted
                order.push_back(w);
            }
    }
    std::vector<int> postorder(order.rbegin(), order.rend());
    return RootedTree{t, root, std::move(parent), std::move(children), std::move(postorder)};
}

int max_degree(const Tree& t) {
    int best = 0;
    for (int v = 0; v < t.order(); ++v) best = std::max(best, t.degree(v));
    return best;
}

Attachment attach_pendant_edge(const Tree& t, int v) {
    t.check_vertex(v);
    const int n = t.order();
    auto edges = t.edges();
    edges.emplace_back(v, n);
    edges.emplace_back(n, n + 1);
    return Attachment{Tree::from_edges(n + 2, std::move(edges)), t.degree(v) >= 3};
}

Attachment attach_p5(const Tree& t, int u) {
    t.check_vertex(u);
    const int n = t.order();
    const int x = n, y = n + 1, z = n + 2, j = n + 3, k = n + 4;
    auto edges = t.edges();
    edges.emplace_back(u, z);
    edges.emplace_back(z, y);
    edges.emplace_back(z, j);
    edges.emplace_back(y, x);
    edges.emplace_back(j, k);
    return Attachment{Tree::from_edges(n + 5, std::move(edges)), t.degree(u) >= 3};
}

Tree remove_leaf(const Tree& t, int leaf) {
    t.check_vertex(leaf);
    if (t.degree(leaf) != 1)
        throw std::invalid_argument("remove_leaf: vertex " + std::to_string(leaf) + " is not a leaf");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(t.order() - 2);
    auto relabel = [leaf](int v) { return v > leaf ? v - 1 : v; };
    for (const auto& [a, b] : t.edges())
        if (a != leaf && b != leaf) edges.emplace_back(relabel(a), relabel(b));
    return Tree::from_edges(t.order() - 1, std::move(edges));
}

}  // namespace dissoc
