#include "montree/tree.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace montree {

namespace {
// Hard cap on vertex ids so a malformed file cannot demand absurd allocations.
constexpr long long kMaxVertexId = 200'000'000;
}  // namespace

RootedTree RootedTree::single_vertex() {
    RootedTree t;
    t.n_ = 1;
    t.root_ = 0;
    t.children_.resize(1);
    t.parent_.assign(1, -1);
    t.finish();
    return t;
}

RootedTree RootedTree::from_edges(const std::vector<std::pair<int, int>>& edges) {
    if (edges.empty()) return single_vertex();
    int max_id = 0;
    for (auto [p, c] : edges) {
        if (p < 0 || c < 0) throw std::invalid_argument("negative vertex id");
        max_id = std::max({max_id, p, c});
    }
    const int n = max_id + 1;
    if (static_cast<size_t>(edges.size()) != static_cast<size_t>(n) - 1)
        throw std::invalid_argument("edge count does not match dense vertex ids");

    RootedTree t;
    t.n_ = n;
    t.children_.resize(n);
    t.parent_.assign(n, -1);
    std::vector<char> has_parent(n, 0), mentioned(n, 0);
    for (auto [p, c] : edges) {
        if (p == c) throw std::invalid_argument("self edge");
        if (has_parent[c]) throw std::invalid_argument("vertex has two parents");
        has_parent[c] = 1;
        t.parent_[c] = p;
        t.children_[p].push_back(c);
        mentioned[p] = mentioned[c] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (!mentioned[v]) throw std::invalid_argument("vertex ids are not dense");
    int root = -1;
    for (int v = 0; v < n; ++v) {
        if (!has_parent[v]) {
            if (root != -1) throw std::invalid_argument("multiple roots");
            root = v;
        }
    }
    if (root == -1) throw std::invalid_argument("cycle detected");
    t.root_ = root;
    t.finish();
    return t;
}

void RootedTree::finish() {
    depth_.assign(n_, 0);
    pre_.clear();
    post_.clear();
    pre_.reserve(n_);
    post_.reserve(n_);
    // Iterative DFS; recursion would overflow on path-shaped inputs.
    std::vector<std::pair<int, size_t>> stack;
    stack.emplace_back(root_, 0);
    pre_.push_back(root_);
    while (!stack.empty()) {
        auto& [v, next_child] = stack.back();
        if (next_child < children_[v].size()) {
            int c = children_[v][next_child++];
            depth_[c] = depth_[v] + 1;
            pre_.push_back(c);
            stack.emplace_back(c, 0);
        } else {
            post_.push_back(v);
            stack.pop_back();
        }
    }
    if (static_cast<int>(pre_.size()) != n_)
        throw std::invalid_argument("cycle detected");  // unreachable component
}

RootedTree parse_tree(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> edge_line;
    std::string line;
    int line_no = 0;
    long long max_id = -1;
    int max_id_line = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ls(line);
        long long p, c;
        if (!(ls >> p >> c)) throw TreeFormatError("expected \"parent child\"", line_no);
        std::string extra;
        if (ls >> extra) throw TreeFormatError("trailing tokens after edge", line_no);
        if (p < 0 || c < 0 || p > kMaxVertexId || c > kMaxVertexId)
            throw TreeFormatError("vertex id out of range", line_no);
        if (std::max(p, c) > max_id) {
            max_id = std::max(p, c);
            max_id_line = line_no;
        }
        edges.emplace_back(static_cast<int>(p), static_cast<int>(c));
        edge_line.push_back(line_no);
    }
    if (edges.empty()) return RootedTree::single_vertex();

    const long long n = static_cast<long long>(edges.size()) + 1;
    if (max_id >= n)
        throw TreeFormatError("vertex id out of range (ids must be dense 0..n-1)", max_id_line);

    // Structural checks with line attribution.
    std::vector<int> parent(n, -1), parent_line(n, 0);
    std::vector<char> seen_edge_dup(0);
    std::vector<std::vector<int>> kids(n);
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [p, c] = edges[i];
        const int ln = edge_line[i];
        if (p == c) throw TreeFormatError("cycle detected (self edge)", ln);
        if (parent[c] != -1) {
            if (parent[c] == p) throw TreeFormatError("duplicate edge", ln);
            throw TreeFormatError("duplicate parent for vertex " + std::to_string(c), ln);
        }
        parent[c] = p;
        parent_line[c] = ln;
        kids[p].push_back(c);
    }
    int root = -1;
    for (int v = 0; v < n; ++v) {
        if (parent[v] != -1) continue;
        if (root != -1) {
            // The later root is whichever one first shows up as a parent.
            int second_line = 0;
            for (size_t i = 0; i < edges.size(); ++i)
                if (edges[i].first == v) { second_line = edge_line[i]; break; }
            throw TreeFormatError("multiple roots (" + std::to_string(root) + " and " +
                                      std::to_string(v) + ")",
                                  second_line);
        }
        root = v;
    }
    if (root == -1) {
        // Every vertex has a parent: walk any parent chain to expose a cycle
        // and report the largest line number among its edges.
        std::vector<int> mark(n, 0);
        int v = 0;
        while (mark[v] == 0) {
            mark[v] = 1;
            v = parent[v];
        }
        int worst = 0, u = v;
        do {
            worst = std::max(worst, parent_line[u]);
            u = parent[u];
        } while (u != v);
        throw TreeFormatError("cycle detected", worst);
    }
    // Reachability: a component disconnected from the root is a parent cycle.
    std::vector<char> reached(n, 0);
    std::vector<int> stack{root};
    reached[root] = 1;
    long long count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int c : kids[v])
            if (!reached[c]) {
                reached[c] = 1;
                ++count;
                stack.push_back(c);
            }
    }
    if (count != n) {
        int worst = 0;
        for (int v = 0; v < n; ++v)
            if (!reached[v]) worst = std::max(worst, parent_line[v]);
        throw TreeFormatError("cycle detected", worst);
    }
    return RootedTree::from_edges(edges);
}

RootedTree parse_tree_text(const std::string& text) {
    std::istringstream in(text);
    return parse_tree(in);
}

void serialize_tree(std::ostream& out, const RootedTree& tree) {
    for (int v : tree.preorder()) {
        if (v == tree.root()) continue;
        out << tree.parent(v) << ' ' << v << '\n';
    }
}

std::string serialize_tree_text(const RootedTree& tree) {
    std::ostringstream out;
    serialize_tree(out, tree);
    return out.str();
}

std::vector<int> leaves_ccw(const RootedTree& tree) {
    std::vector<int> leaves;
    for (int v : tree.preorder())
        if (tree.is_leaf(v)) leaves.push_back(v);
    return leaves;
}

std::vector<int> tree_path(const RootedTree& tree, int u, int w) {
    const int n = tree.vertex_count();
    if (u < 0 || u >= n || w < 0 || w >= n)
        throw std::invalid_argument("tree_path: vertex id out of range");
    std::vector<int> up, down;
    int a = u, b = w;
    while (tree.depth(a) > tree.depth(b)) {
        up.push_back(a);
        a = tree.parent(a);
    }
    while (tree.depth(b) > tree.depth(a)) {
        down.push_back(b);
        b = tree.parent(b);
    }
    while (a != b) {
        up.push_back(a);
        down.push_back(b);
        a = tree.parent(a);
        b = tree.parent(b);
    }
    up.push_back(a);  // the lca
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
}

}  // namespace montree
