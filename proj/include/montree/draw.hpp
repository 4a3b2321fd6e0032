#pragma once

#include <vector>

#include "montree/decompose.hpp"
#include "montree/pool.hpp"
#include "montree/tree.hpp"
#include "montree/vec.hpp"

namespace montree {

// Straight-line grid drawing of a rooted tree: root at the origin, every
// other vertex at parent + edge vector. edge_vec is indexed by the child
// vertex (root slot unused).
struct Drawing {
    std::vector<Vec> coords;
    std::vector<Vec> edge_vec;
    i64 width = 0;   // max x
    i64 height = 0;  // max y

    // True when every edge vector is strictly inside the first quadrant,
    // which is what all three drawing algorithms produce.
    bool strictly_first_quadrant(const RootedTree& tree) const;
};

// Prefix-sums the given per-edge vectors in ccw pre-order. Every non-root
// vertex must have a vector with positive components.
Drawing draw_from_edge_vectors(const RootedTree& tree, const std::vector<Vec>& edge_vec);

// Builds a drawing from coordinates alone (root need not sit at the origin);
// used when loading externally produced drawings for verification. Edge
// vectors may point anywhere but must be nonzero.
Drawing drawing_from_coords(const RootedTree& tree, const std::vector<Vec>& coords);

// Baseline: assign n-1 distinct slope-sorted vectors to the edges in ccw
// post-order, then draw. Slope-disjoint, hence monotone.
Drawing tree_monotone_draw(const RootedTree& tree, const std::vector<Vec>& vectors);

// Path Draw: the k-th vector goes to the k-th leaf in ccw order (regardless
// of the permutation behind the decomposition) and is broadcast to that
// leaf's whole path. Monotone for any leaf permutation.
Drawing path_draw(const RootedTree& tree, const PathDecomposition& decomp,
                  const std::vector<Vec>& vectors);

// A default vector set for the baseline: the n-1 entries of the smallest
// adequate P̄_d, evenly spaced by index to avoid pathological flatness.
std::vector<Vec> baseline_vectors(i64 count);

// Per-level accounting of the final drawing, kept for regression checks.
struct LevelStats {
    int j = 0;
    i64 paths = 0;         // m_j
    i64 height = 0;        // h_j over T[D_j]
    i64 max_vector_size = 0;
};
struct DrawStats {
    i64 f = 0, d = 0;
    int K = 0;
    i64 pool_size = 0;
    i64 consumed = 0;  // cursor travel; bounded by (f+1)^K
    std::vector<LevelStats> levels;
    // width,height <= bound_num/bound_den = (f+1)d*n / ((f+1)-d) when
    // bound_den > 0; compare cross-multiplied.
    i64 bound_num = 0;
    i64 bound_den = 0;
    bool bound_holds(i64 extent) const {
        return bound_den > 0 && extent * bound_den <= bound_num;
    }
};
struct OptimalResult {
    Drawing drawing;
    DrawStats stats;
};

// The full pipeline: LDPD, (f+1)-partition, pool, ccw cursor assignment,
// broadcast, draw. (f, d) must be a valid pair for the guarantees to hold;
// (3, 3) gives the 12n x 12n bound.
OptimalResult optimal_draw(const RootedTree& tree, i64 f = 3, i64 d = 3);

}  // namespace montree
