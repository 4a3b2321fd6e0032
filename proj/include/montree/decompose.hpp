#pragma once

#include <vector>

#include "montree/tree.hpp"
#include "montree/vec.hpp"

namespace montree {

// One root-ward path of a decomposition: vertices run from the starting leaf
// to the attachment (the first vertex already covered by earlier paths; the
// root itself for the first path). The path "owns" every vertex except the
// attachment — except the first path, which also owns the root.
struct PathRecord {
    int leaf = 0;
    int attachment = 0;
    std::vector<int> vertices;  // leaf .. attachment, inclusive

    i64 edge_count() const { return static_cast<i64>(vertices.size()) - 1; }
};

// Edge-disjoint root-ward paths, one per leaf, in construction order.
// Their edge sets partition the n-1 tree edges.
struct PathDecomposition {
    std::vector<PathRecord> paths;

    size_t size() const { return paths.size(); }
};

// Path decomposition with respect to a leaf permutation: path k runs from the
// k-th leaf of `perm` to its attachment in the union of earlier paths.
// `perm` must be a permutation of leaves_ccw(tree).
PathDecomposition path_decomposition(const RootedTree& tree, const std::vector<int>& perm);

// Length-decreasing path decomposition: peel the longest remaining root-ward
// path first, ties broken by the smallest ccw leaf index. Computed in O(n)
// via deepest-descendant links; equals the literal greedy peel.
PathDecomposition ldpd(const RootedTree& tree);

// Per-path level buckets of a decomposition. Path of length l has level 1 iff
// l >= (n-1)/c, else the unique j in 2..K with l in [(n-1)/c^j, (n-1)/c^(j-1)),
// all membership tests done by cross-multiplied integer comparisons.
struct LevelAssignment {
    i64 c = 0;
    int K = 0;
    std::vector<int> level;        // per path, aligned with construction order
    std::vector<i64> paths_per_level;  // m_j, 1-based (index 0 unused)

    // sum_j m_j * c^(K-j); the c-partition property pins it to [c^(K-1), c^K].
    i64 weighted_count() const;
};
LevelAssignment c_partition(const PathDecomposition& decomp, i64 c, i64 n);

// Max height h_j over the connected components of T[D_j] (the edge-induced
// subgraph of level-j paths) for every level j; index 0 unused. Verifies the
// height bound h_j * c^(j-1) < n-1 for j >= 2 and h_1 <= n-1, throwing on a
// violation (it indicates a corrupted LDPD, not bad input).
std::vector<i64> level_subtree_heights(const RootedTree& tree, const PathDecomposition& decomp,
                                       const LevelAssignment& levels);

// Path indices reordered left-to-right, i.e. by ccw position of their leaf.
std::vector<int> paths_in_ccw_order(const RootedTree& tree, const PathDecomposition& decomp);

}  // namespace montree
