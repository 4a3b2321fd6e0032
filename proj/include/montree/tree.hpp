#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace montree {

// Ordered rooted tree on dense vertex ids 0..n-1. The stored child order is
// the ccw (left-to-right) order used by every downstream algorithm; the
// structure is immutable after construction and safe to share across threads.
class RootedTree {
public:
    // Validates and builds from (parent, child) pairs. Child order is the
    // order of first appearance under each parent. Throws std::invalid_argument
    // on structural violations (cycle, several roots, duplicate edge, ...).
    static RootedTree from_edges(const std::vector<std::pair<int, int>>& edges);
    static RootedTree single_vertex();

    int vertex_count() const { return n_; }
    int root() const { return root_; }
    int parent(int v) const { return parent_[v]; }  // -1 at the root
    int depth(int v) const { return depth_[v]; }
    const std::vector<int>& children(int v) const { return children_[v]; }
    bool is_leaf(int v) const { return children_[v].empty(); }

    // ccw pre-/post-order vertex sequences (root first / root last).
    const std::vector<int>& preorder() const { return pre_; }
    const std::vector<int>& postorder() const { return post_; }

private:
    RootedTree() = default;
    void finish();  // computes depth_ and traversal orders, validates reach

    int n_ = 0;
    int root_ = 0;
    std::vector<std::vector<int>> children_;
    std::vector<int> parent_;
    std::vector<int> depth_;
    std::vector<int> pre_, post_;
};

// Parse error with the 1-based input line that triggered it.
struct TreeFormatError : std::runtime_error {
    TreeFormatError(const std::string& what, int line_no)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
          line(line_no) {}
    int line;
};

// Edge-list format: one "parent child" pair of decimal ids per line, '#'
// starts a comment line, blank lines are ignored. An empty edge list is the
// single-vertex tree. Serialization emits edges in ccw DFS pre-order.
RootedTree parse_tree(std::istream& in);
RootedTree parse_tree_text(const std::string& text);
void serialize_tree(std::ostream& out, const RootedTree& tree);
std::string serialize_tree_text(const RootedTree& tree);

// Leaves in ccw order (DFS with stored child order). For n = 1 the root is
// the single leaf.
std::vector<int> leaves_ccw(const RootedTree& tree);

// The unique simple path u .. lca .. w, inclusive; [u] when u == w.
std::vector<int> tree_path(const RootedTree& tree, int u, int w);

}  // namespace montree
