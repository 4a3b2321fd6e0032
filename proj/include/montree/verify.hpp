#pragma once

#include <span>
#include <vector>

#include "montree/draw.hpp"
#include "montree/tree.hpp"
#include "montree/vec.hpp"

namespace montree {

// Exact monotone-path test: true iff all directions fit in a closed wedge of
// angle strictly smaller than 180 degrees. Deduplicates directions up to
// positive scaling, sorts circularly (half-plane index + cross product) and
// looks for a circular gap exceeding a half turn. Integer arithmetic only;
// throws on a zero vector.
bool path_is_monotone(std::span<const Vec> dirs);

enum class VerifyMode { exhaustive, leaf_reduced };

struct PairFailure {
    int u = 0, w = 0;
};

struct VerificationReport {
    VerifyMode mode = VerifyMode::exhaustive;
    i64 pairs_checked = 0;
    std::vector<PairFailure> failures;

    bool ok() const { return failures.empty(); }
};

// Monotone-drawing verification. Exhaustive mode walks the unique tree path
// of all n(n-1)/2 vertex pairs with an incremental wedge. Leaf-reduced mode
// covers leaf-leaf pairs plus root-leaf chains (any tree path is a subpath of
// one of those, and subpaths of monotone paths are monotone); for drawings
// strictly inside the first quadrant it runs as an O(n) sibling slope-extent
// scan, otherwise it falls back to per-pair walks.
VerificationReport verify_monotone_drawing(const RootedTree& tree, const Drawing& drawing,
                                           VerifyMode mode);

// Slope-disjointness: per vertex, the slope interval spanned by the subtree
// edges plus the parent edge must nest inside the parent's and be strictly
// disjoint from every sibling's. Requires all edges strictly inside the first
// quadrant (throws otherwise, e.g. slope 0 or infinity).
struct SlopeDisjointResult {
    bool ok = true;
    int parent = -1;       // vertex whose children violate, if any
    int child_a = -1, child_b = -1;
};
SlopeDisjointResult verify_slope_disjoint(const RootedTree& tree, const Drawing& drawing);

// The lower-bound witness: a root with 12 pendant paths of floor(n/12)
// vertices each. Any monotone drawing of it needs an Omega(n) x Omega(n) grid.
RootedTree build_t0(i64 n);

// width >= floor(n/12) and height >= floor(n/12) for a (monotone) drawing of
// T0, where floor(n/12) is the per-path vertex count of the instance.
bool check_lower_bound(const RootedTree& t0, const Drawing& drawing);

}  // namespace montree
