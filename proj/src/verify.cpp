#include "montree/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace montree {

namespace {

// Circular angle order starting at the positive x-axis: directions with
// angle in [0, 180) come before those in [180, 360).
int half_plane(Vec v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

bool angle_less(Vec a, Vec b) {
    const int ha = half_plane(a), hb = half_plane(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

Vec normalize_direction(Vec v) {
    const i64 g = std::gcd(v.x < 0 ? -v.x : v.x, v.y < 0 ? -v.y : v.y);
    return {v.x / g, v.y / g};
}

// Incremental wedge over a stream of directions: keeps the extremal pair
// (emin, emax) with ccw span < 180 degrees and grows it edge by edge. The
// extremes of a sub-half-turn wedge are canonical, so the greedy extension is
// exact; at most one side can absorb an outside direction.
struct WedgeScan {
    Vec emin{}, emax{};
    bool started = false;
    bool failed = false;

    void feed(Vec e) {
        if (failed) return;
        if (!started) {
            emin = emax = e;
            started = true;
            return;
        }
        const i128 c1 = cross(emin, e);  // > 0: e within a half turn ccw of emin
        const i128 c2 = cross(e, emax);  // > 0: emax within a half turn ccw of e
        if (c1 > 0 && c2 > 0) return;    // strictly inside the wedge
        if (c1 == 0) {
            if (dot(emin, e) > 0) return;  // parallel to emin
            failed = true;                 // opposite: any cover spans >= 180
            return;
        }
        if (c2 == 0) {
            if (dot(e, emax) > 0) return;
            failed = true;
            return;
        }
        if (c1 > 0) {  // c2 < 0: extend upward, span(emin -> e) < 180
            emax = e;
            return;
        }
        if (c2 > 0) {  // c1 < 0: extend downward
            emin = e;
            return;
        }
        failed = true;  // beyond both ends: no sub-half-turn wedge fits
    }
    bool monotone() const { return started && !failed; }
};

void require_nonzero(Vec v) {
    if (v.x == 0 && v.y == 0)
        throw std::invalid_argument("monotone test: zero direction vector");
}

// Feeds the directions of the tree path between u and w into a wedge.
// Direction order does not matter for the wedge criterion, so both sides are
// walked bottom-up: up-edges reversed, down-edges as stored.
bool pair_is_monotone(const RootedTree& tree, const Drawing& dr, int u, int w) {
    WedgeScan scan;
    int a = u, b = w;
    while (tree.depth(a) > tree.depth(b)) {
        scan.feed(-dr.edge_vec[static_cast<size_t>(a)]);
        a = tree.parent(a);
    }
    while (tree.depth(b) > tree.depth(a)) {
        scan.feed(dr.edge_vec[static_cast<size_t>(b)]);
        b = tree.parent(b);
    }
    while (a != b) {
        scan.feed(-dr.edge_vec[static_cast<size_t>(a)]);
        scan.feed(dr.edge_vec[static_cast<size_t>(b)]);
        a = tree.parent(a);
        b = tree.parent(b);
    }
    return !scan.failed;  // u == w never reaches here with no edges fed
}

// Slope-extent interval of the edge set T(v) ∪ {parent edge of v}, as the
// pair of extreme edge vectors, plus which vertex's edge realizes each end
// (for witness extraction).
struct Extent {
    Vec lo, hi;
    int lo_edge = -1, hi_edge = -1;  // child vertex of the realizing edge
};

std::vector<Extent> subtree_extents(const RootedTree& tree, const Drawing& dr) {
    const int n = tree.vertex_count();
    std::vector<Extent> ext(static_cast<size_t>(n));
    for (auto it = tree.preorder().rbegin(); it != tree.preorder().rend(); ++it) {
        const int v = *it;
        if (v == tree.root()) continue;
        Extent e{dr.edge_vec[static_cast<size_t>(v)], dr.edge_vec[static_cast<size_t>(v)], v, v};
        for (int c : tree.children(v)) {
            const Extent& ce = ext[static_cast<size_t>(c)];
            if (slope_less(ce.lo, e.lo)) {
                e.lo = ce.lo;
                e.lo_edge = ce.lo_edge;
            }
            if (slope_less(e.hi, ce.hi)) {
                e.hi = ce.hi;
                e.hi_edge = ce.hi_edge;
            }
        }
        ext[static_cast<size_t>(v)] = e;
    }
    return ext;
}

// First sibling pair (under `parent`) whose extent intervals are not strictly
// disjoint, scanning children sorted by interval start.
struct SiblingViolation {
    int parent = -1, child_a = -1, child_b = -1;
};

template <typename OnViolation>
void scan_sibling_disjointness(const RootedTree& tree, const std::vector<Extent>& ext,
                               OnViolation&& on_violation) {
    std::vector<int> order;
    for (int u = 0; u < tree.vertex_count(); ++u) {
        const auto& kids = tree.children(u);
        if (kids.size() < 2) continue;
        order.assign(kids.begin(), kids.end());
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return slope_less(ext[static_cast<size_t>(a)].lo, ext[static_cast<size_t>(b)].lo);
        });
        for (size_t i = 0; i + 1 < order.size(); ++i) {
            const Extent& a = ext[static_cast<size_t>(order[i])];
            const Extent& b = ext[static_cast<size_t>(order[i + 1])];
            if (!slope_less(a.hi, b.lo))
                on_violation(SiblingViolation{u, order[i], order[i + 1]});
        }
    }
}

// Any leaf at or below the edge (parent(e), e); used to turn an extent
// violation into a concrete failing leaf pair.
int leaf_below(const RootedTree& tree, int e) {
    int v = e;
    while (!tree.is_leaf(v)) v = tree.children(v).front();
    return v;
}

int leaf_through_extreme(const RootedTree& tree, const std::vector<Extent>& ext, int child,
                         bool want_hi) {
    const int e = want_hi ? ext[static_cast<size_t>(child)].hi_edge
                          : ext[static_cast<size_t>(child)].lo_edge;
    return leaf_below(tree, e);
}

}  // namespace

bool path_is_monotone(std::span<const Vec> dirs) {
    if (dirs.empty()) throw std::invalid_argument("path_is_monotone: empty direction set");
    std::vector<Vec> ds;
    ds.reserve(dirs.size());
    for (Vec v : dirs) {
        require_nonzero(v);
        ds.push_back(normalize_direction(v));
    }
    std::sort(ds.begin(), ds.end(), angle_less);
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    if (ds.size() == 1) return true;
    // Monotone iff some circular gap between consecutive distinct directions
    // exceeds a half turn, i.e. the remaining directions fit in < 180.
    for (size_t i = 0; i < ds.size(); ++i) {
        const Vec a = ds[i];
        const Vec b = ds[(i + 1) % ds.size()];
        if (cross(a, b) < 0) return true;
    }
    return false;
}

VerificationReport verify_monotone_drawing(const RootedTree& tree, const Drawing& drawing,
                                           VerifyMode mode) {
    const int n = tree.vertex_count();
    if (static_cast<int>(drawing.coords.size()) != n ||
        static_cast<int>(drawing.edge_vec.size()) != n)
        throw std::invalid_argument("verify_monotone_drawing: drawing does not cover the tree");
    for (int v = 0; v < n; ++v)
        if (v != tree.root()) require_nonzero(drawing.edge_vec[static_cast<size_t>(v)]);

    VerificationReport rep;
    rep.mode = mode;
    if (mode == VerifyMode::exhaustive) {
        for (int u = 0; u < n; ++u) {
            for (int w = u + 1; w < n; ++w) {
                ++rep.pairs_checked;
                if (!pair_is_monotone(tree, drawing, u, w)) rep.failures.push_back({u, w});
            }
        }
        return rep;
    }

    const std::vector<int> leaves = leaves_ccw(tree);
    const i64 t = static_cast<i64>(leaves.size());
    if (drawing.strictly_first_quadrant(tree)) {
        // Root-leaf chains are monotone outright (every direction lies in the
        // open first quadrant); leaf-leaf pairs reduce exactly to strict
        // disjointness of sibling slope extents.
        rep.pairs_checked = t * (t - 1) / 2 + t;
        const std::vector<Extent> ext = subtree_extents(tree, drawing);
        scan_sibling_disjointness(tree, ext, [&](const SiblingViolation& sv) {
            // The failing pair is oriented by the child edge slopes: with
            // s(ca) < s(cb), the leaf through ca's max-slope edge against the
            // leaf through cb's min-slope edge can fit no sub-half-turn wedge.
            int ca = sv.child_a, cb = sv.child_b;
            const Vec ea = drawing.edge_vec[static_cast<size_t>(ca)];
            const Vec eb = drawing.edge_vec[static_cast<size_t>(cb)];
            if (slope_equal(ea, eb)) {
                rep.failures.push_back({leaf_below(tree, ca), leaf_below(tree, cb)});
                return;
            }
            if (slope_less(eb, ea)) std::swap(ca, cb);
            rep.failures.push_back({leaf_through_extreme(tree, ext, ca, true),
                                    leaf_through_extreme(tree, ext, cb, false)});
        });
        return rep;
    }
    for (size_t i = 0; i < leaves.size(); ++i) {
        for (size_t k = i + 1; k < leaves.size(); ++k) {
            ++rep.pairs_checked;
            if (!pair_is_monotone(tree, drawing, leaves[i], leaves[k]))
                rep.failures.push_back({leaves[i], leaves[k]});
        }
    }
    for (int l : leaves) {
        if (l == tree.root()) continue;  // n == 1
        ++rep.pairs_checked;
        if (!pair_is_monotone(tree, drawing, tree.root(), l))
            rep.failures.push_back({tree.root(), l});
    }
    return rep;
}

SlopeDisjointResult verify_slope_disjoint(const RootedTree& tree, const Drawing& drawing) {
    const int n = tree.vertex_count();
    if (static_cast<int>(drawing.edge_vec.size()) != n)
        throw std::invalid_argument("verify_slope_disjoint: drawing does not cover the tree");
    for (int v = 0; v < n; ++v) {
        if (v == tree.root()) continue;
        const Vec e = drawing.edge_vec[static_cast<size_t>(v)];
        if (e.x < 1 || e.y < 1)
            throw std::invalid_argument(
                "verify_slope_disjoint: edge on or outside the first-quadrant axes");
    }
    SlopeDisjointResult res;
    if (n <= 2) return res;
    // Child intervals nest inside the parent's by construction (the parent
    // extent is a superset union); the binding condition is strict sibling
    // disjointness, witnessed by realizing edges with distinct slopes.
    const std::vector<Extent> ext = subtree_extents(tree, drawing);
    scan_sibling_disjointness(tree, ext, [&](const SiblingViolation& sv) {
        if (res.ok) {
            res.ok = false;
            res.parent = sv.parent;
            res.child_a = sv.child_a;
            res.child_b = sv.child_b;
        }
    });
    return res;
}

RootedTree build_t0(i64 n) {
    if (n < 12) throw std::invalid_argument("build_t0: n must be at least 12");
    const i64 per_path = n / 12;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(12 * per_path));
    int next = 1;
    for (int p = 0; p < 12; ++p) {
        int prev = 0;
        for (i64 i = 0; i < per_path; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return RootedTree::from_edges(edges);
}

bool check_lower_bound(const RootedTree& t0, const Drawing& drawing) {
    const i64 per_path = (static_cast<i64>(t0.vertex_count()) - 1) / 12;
    return drawing.width >= per_path && drawing.height >= per_path;
}

}  // namespace montree
