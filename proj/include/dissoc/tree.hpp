#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dissoc {

/// Reason a tree failed to parse or validate.
enum class TreeErrorKind {
    invalid_order,
    malformed_line,
    label_out_of_range,
    wrong_edge_count,
    self_loop,
    duplicate_edge,
    disconnected,
};

class TreeError : public std::runtime_error {
public:
    TreeError(TreeErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    TreeErrorKind kind() const noexcept { return kind_; }

private:
    TreeErrorKind kind_;
};

/// Labeled undirected tree on vertices 0..n-1.
///
/// Immutable after construction; the factory validates every invariant
/// (exactly n-1 edges, no self-loops or duplicates, connected). Edges are
/// normalized (smaller endpoint first, sorted) and neighbor lists kept in
/// ascending order, so equal labeled trees compare equal.
class Tree {
public:
    static Tree from_edges(int n, std::vector<std::pair<int, int>> edges);

    int order() const noexcept { return n_; }
    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
    const std::vector<std::vector<int>>& adjacency() const noexcept { return adj_; }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }

    /// Throws TreeError(label_out_of_range) unless 0 <= v < order().
    void check_vertex(int v) const;

    bool operator==(const Tree&) const = default;

private:
    Tree(int n, std::vector<std::pair<int, int>> edges,
         std::vector<std::vector<int>> adj)
        : n_(n), edges_(std::move(edges)), adj_(std::move(adj)) {}

    int n_ = 1;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Tree oriented away from a chosen root.
///
/// parent[root] is -1 and every other vertex has exactly one parent;
/// children lists are in ascending label order and postorder visits every
/// child before its parent.
struct RootedTree {
    Tree base;
    int root = 0;
    std::vector<int> parent;
    std::vector<std::vector<int>> children;
    std::vector<int> postorder;
};

/// Parses the edge-list text format: first significant line is the order n,
/// followed by exactly n-1 lines of two whitespace-separated 0-based labels.
/// Lines starting with '#' and blank lines are ignored.
Tree parse_tree(const std::string& text);

/// Inverse of parse_tree up to edge order: emits the order line and the
/// normalized edge list, one edge per line, trailing newline.
std::string serialize_tree(const Tree& t);

RootedTree root_at(const Tree& t, int root);

int max_degree(const Tree& t);

/// Result of an attachment construction. degree_warning is set when the host
/// vertex already had degree 3; the construction still succeeds but the
/// result is no longer subcubic-preserving.
struct Attachment {
    Tree tree;
    bool degree_warning = false;
};

/// Hangs a fresh edge from v: two new vertices a, b take labels n and n+1,
/// with edges {v,a} and {a,b}. Order grows by 2.
Attachment attach_pendant_edge(const Tree& t, int v);

/// Attaches the five-vertex gadget at u: new vertices x, y, z, j, k take
/// labels n..n+4 in that order, with edges {u,z}, {z,y}, {z,j}, {y,x}, {j,k}.
/// Order grows by 5.
Attachment attach_p5(const Tree& t, int u);

/// Removes a degree-1 vertex and compacts labels above it down by one.
Tree remove_leaf(const Tree& t, int leaf);

}  // namespace dissoc
