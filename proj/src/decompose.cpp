#include "montree/decompose.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace montree {

std::vector<int> paths_in_ccw_order(const RootedTree& tree, const PathDecomposition& decomp) {
    std::vector<int> ccw_pos(tree.vertex_count(), -1);
    {
        int i = 0;
        for (int l : leaves_ccw(tree)) ccw_pos[l] = i++;
    }
    std::vector<int> order(decomp.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return ccw_pos[decomp.paths[a].leaf] < ccw_pos[decomp.paths[b].leaf];
    });
    return order;
}

PathDecomposition path_decomposition(const RootedTree& tree, const std::vector<int>& perm) {
    const int n = tree.vertex_count();
    {
        std::vector<int> expected = leaves_ccw(tree);
        if (perm.size() != expected.size())
            throw std::invalid_argument("path_decomposition: perm is not a leaf permutation");
        std::vector<char> is_leaf_here(n, 0);
        for (int l : expected) is_leaf_here[l] = 1;
        std::vector<char> used(n, 0);
        for (int l : perm) {
            if (l < 0 || l >= n || !is_leaf_here[l] || used[l])
                throw std::invalid_argument("path_decomposition: perm is not a leaf permutation");
            used[l] = 1;
        }
    }
    PathDecomposition d;
    d.paths.reserve(perm.size());
    std::vector<char> covered(n, 0);
    bool first = true;
    for (int leaf : perm) {
        PathRecord rec;
        rec.leaf = leaf;
        int v = leaf;
        if (first) {
            // b_1 runs all the way to the root; its attachment is the root.
            while (v != tree.root()) {
                rec.vertices.push_back(v);
                covered[v] = 1;
                v = tree.parent(v);
            }
            rec.vertices.push_back(v);
            covered[v] = 1;
            first = false;
        } else {
            while (!covered[v]) {
                rec.vertices.push_back(v);
                covered[v] = 1;
                v = tree.parent(v);
            }
            rec.vertices.push_back(v);  // the attachment, already covered
        }
        rec.attachment = v;
        d.paths.push_back(std::move(rec));
    }
    return d;
}

PathDecomposition ldpd(const RootedTree& tree) {
    const int n = tree.vertex_count();
    // height[v] = longest downward path from v; preferred[v] = leftmost child
    // achieving it. Following preferred links from any vertex reaches its
    // leftmost deepest leaf, which is exactly the greedy tie-break.
    std::vector<i64> height(n, 0);
    std::vector<int> preferred(n, -1);
    const auto& pre = tree.preorder();
    for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
        int v = *it;
        for (int c : tree.children(v)) {
            if (height[c] + 1 > height[v]) {
                height[v] = height[c] + 1;
                preferred[v] = c;
            }
        }
    }
    // Every non-preferred child heads one path; the root heads the first.
    struct Head {
        int head;
        i64 len;
        int ccw;  // ccw index of the path's leaf
    };
    std::vector<int> ccw_pos(n, -1);
    {
        int i = 0;
        for (int l : leaves_ccw(tree)) ccw_pos[l] = i++;
    }
    auto leaf_of = [&](int h) {
        while (preferred[h] != -1) h = preferred[h];
        return h;
    };
    std::vector<Head> heads;
    heads.reserve(static_cast<size_t>(n) / 2 + 1);
    heads.push_back({tree.root(), height[tree.root()], ccw_pos[leaf_of(tree.root())]});
    for (int v : pre) {
        if (v == tree.root()) continue;
        if (preferred[tree.parent(v)] != v)
            heads.push_back({v, height[v] + 1, ccw_pos[leaf_of(v)]});
    }
    std::sort(heads.begin(), heads.end(), [](const Head& a, const Head& b) {
        if (a.len != b.len) return a.len > b.len;
        return a.ccw < b.ccw;
    });

    PathDecomposition d;
    d.paths.reserve(heads.size());
    for (const Head& h : heads) {
        PathRecord rec;
        rec.vertices.reserve(static_cast<size_t>(h.len) + 1);
        for (int v = h.head; v != -1; v = preferred[v]) rec.vertices.push_back(v);
        std::reverse(rec.vertices.begin(), rec.vertices.end());  // leaf first
        rec.leaf = rec.vertices.front();
        if (h.head != tree.root()) rec.vertices.push_back(tree.parent(h.head));
        rec.attachment = rec.vertices.back();
        d.paths.push_back(std::move(rec));
    }
    return d;
}

i64 LevelAssignment::weighted_count() const {
    i64 sum = 0;
    i64 pow = 1;
    for (int j = K; j >= 1; --j) {
        sum += paths_per_level[static_cast<size_t>(j)] * pow;
        pow *= c;
    }
    return sum;
}

LevelAssignment c_partition(const PathDecomposition& decomp, i64 c, i64 n) {
    if (c < 2) throw std::invalid_argument("c_partition: c must be > 1");
    if (n < 2) throw std::invalid_argument("c_partition: n must be >= 2");
    LevelAssignment la;
    la.c = c;
    // K = ceil(log_c n): smallest K with c^K >= n.
    i64 pow = 1;
    int K = 0;
    while (pow < n) {
        pow *= c;
        ++K;
    }
    la.K = K;
    la.level.reserve(decomp.size());
    la.paths_per_level.assign(static_cast<size_t>(K) + 1, 0);
    const i64 m = n - 1;  // total edges
    for (const PathRecord& p : decomp.paths) {
        const i64 len = p.edge_count();
        if (len < 1 || len > m)
            throw std::invalid_argument("c_partition: corrupt decomposition (bad edge count)");
        int j = 1;
        i64 cj = c;  // c^j
        // level j iff len*c^j >= n-1 and len*c^(j-1) < n-1 (closed top at j=1)
        while (len * cj < m) {
            cj *= c;
            ++j;
        }
        if (j > K) throw std::logic_error("c_partition: level exceeded K");
        la.level.push_back(j);
        ++la.paths_per_level[static_cast<size_t>(j)];
    }
    // Property: c^(K-1) <= sum_j m_j c^(K-j) <= c^K. Holds for any correctly
    // bucketed decomposition whose lengths sum to n-1; a violation is a bug.
    const i64 weighted = la.weighted_count();
    if (weighted * c < pow || weighted > pow)
        throw std::logic_error("c_partition: partition property violated");
    return la;
}

std::vector<i64> level_subtree_heights(const RootedTree& tree, const PathDecomposition& decomp,
                                       const LevelAssignment& levels) {
    const int n = tree.vertex_count();
    if (levels.level.size() != decomp.size())
        throw std::invalid_argument("level_subtree_heights: levels do not match decomposition");
    // Edge (parent(v), v) belongs to the path that owns v; tag it with that
    // path's level.
    std::vector<int> edge_level(n, 0);
    for (size_t k = 0; k < decomp.size(); ++k) {
        const PathRecord& p = decomp.paths[k];
        for (size_t i = 0; i + 1 < p.vertices.size(); ++i)
            edge_level[p.vertices[i]] = levels.level[k];
    }
    // depth-within-component; parents precede children in preorder, so a
    // single pass resolves every chain.
    std::vector<i64> within(n, 0), h(static_cast<size_t>(levels.K) + 1, 0);
    for (int v : tree.preorder()) {
        if (v == tree.root()) continue;
        const int j = edge_level[v];
        if (j == 0) throw std::logic_error("level_subtree_heights: uncovered edge");
        const int p = tree.parent(v);
        within[v] = (p != tree.root() && edge_level[p] == j) ? within[p] + 1 : 1;
        h[static_cast<size_t>(j)] = std::max(h[static_cast<size_t>(j)], within[v]);
    }
    // Height lemma: strict for j >= 2; j = 1 can reach n-1 (single-path tree).
    const i64 m = static_cast<i64>(n) - 1;
    if (levels.K >= 1 && h[1] > m)
        throw std::logic_error("level_subtree_heights: level-1 height exceeds n-1");
    i64 cpow = 1;  // c^(j-1)
    for (int j = 2; j <= levels.K; ++j) {
        cpow *= levels.c;
        if (h[static_cast<size_t>(j)] * cpow >= m)
            throw std::logic_error("level_subtree_heights: height lemma violated");
    }
    return h;
}

}  // namespace montree
