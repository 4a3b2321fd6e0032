#include "montree/draw.hpp"

#include <algorithm>
#include <stdexcept>

#include "montree/primitive.hpp"

namespace montree {

namespace {

void require_sorted_distinct(const std::vector<Vec>& vectors, const char* who) {
    for (const Vec& v : vectors)
        if (!is_primitive(v) || v.x == 0 || v.y == 0)
            throw std::invalid_argument(std::string(who) + ": vectors must be interior primitive");
    for (size_t i = 0; i + 1 < vectors.size(); ++i)
        if (!slope_less(vectors[i], vectors[i + 1]))
            throw std::invalid_argument(std::string(who) +
                                        ": vectors must be strictly slope-sorted");
}

i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coordinate overflow");
    return r;
}

}  // namespace

bool Drawing::strictly_first_quadrant(const RootedTree& tree) const {
    for (int v = 0; v < tree.vertex_count(); ++v) {
        if (v == tree.root()) continue;
        if (edge_vec[v].x < 1 || edge_vec[v].y < 1) return false;
    }
    return true;
}

Drawing draw_from_edge_vectors(const RootedTree& tree, const std::vector<Vec>& edge_vec) {
    const int n = tree.vertex_count();
    if (static_cast<int>(edge_vec.size()) != n)
        throw std::invalid_argument("draw_from_edge_vectors: need one vector slot per vertex");
    Drawing d;
    d.edge_vec = edge_vec;
    d.coords.assign(static_cast<size_t>(n), Vec{});
    for (int v : tree.preorder()) {
        if (v == tree.root()) continue;
        const Vec ev = edge_vec[static_cast<size_t>(v)];
        if (ev.x < 1 || ev.y < 1)
            throw std::invalid_argument("draw_from_edge_vectors: missing or non-positive vector");
        const Vec pc = d.coords[static_cast<size_t>(tree.parent(v))];
        d.coords[static_cast<size_t>(v)] = {checked_add(pc.x, ev.x), checked_add(pc.y, ev.y)};
        d.width = std::max(d.width, d.coords[static_cast<size_t>(v)].x);
        d.height = std::max(d.height, d.coords[static_cast<size_t>(v)].y);
    }
    return d;
}

Drawing drawing_from_coords(const RootedTree& tree, const std::vector<Vec>& coords) {
    const int n = tree.vertex_count();
    if (static_cast<int>(coords.size()) != n)
        throw std::invalid_argument("drawing_from_coords: need one point per vertex");
    Drawing d;
    d.coords = coords;
    d.edge_vec.assign(static_cast<size_t>(n), Vec{});
    for (int v = 0; v < n; ++v) {
        d.width = std::max(d.width, coords[static_cast<size_t>(v)].x);
        d.height = std::max(d.height, coords[static_cast<size_t>(v)].y);
        if (v == tree.root()) continue;
        const Vec ev = coords[static_cast<size_t>(v)] - coords[static_cast<size_t>(tree.parent(v))];
        if (ev.x == 0 && ev.y == 0)
            throw std::invalid_argument("drawing_from_coords: coincident edge endpoints");
        d.edge_vec[static_cast<size_t>(v)] = ev;
    }
    return d;
}

Drawing tree_monotone_draw(const RootedTree& tree, const std::vector<Vec>& vectors) {
    const int n = tree.vertex_count();
    if (static_cast<i64>(vectors.size()) != static_cast<i64>(n) - 1)
        throw std::invalid_argument("tree_monotone_draw: need exactly n-1 vectors");
    require_sorted_distinct(vectors, "tree_monotone_draw");
    // k-th edge in ccw post-order = parent edge of the k-th postorder vertex.
    std::vector<Vec> edge_vec(static_cast<size_t>(n));
    const auto& post = tree.postorder();
    for (size_t k = 0; k + 1 < post.size(); ++k)  // root comes last
        edge_vec[static_cast<size_t>(post[k])] = vectors[k];
    return draw_from_edge_vectors(tree, edge_vec);
}

Drawing path_draw(const RootedTree& tree, const PathDecomposition& decomp,
                  const std::vector<Vec>& vectors) {
    const int n = tree.vertex_count();
    const std::vector<int> leaves = leaves_ccw(tree);
    if (vectors.size() != decomp.size() || decomp.size() != leaves.size())
        throw std::invalid_argument("path_draw: need exactly one vector per leaf/path");
    require_sorted_distinct(vectors, "path_draw");
    std::vector<Vec> vector_of_leaf(static_cast<size_t>(n));
    for (size_t i = 0; i < leaves.size(); ++i)
        vector_of_leaf[static_cast<size_t>(leaves[i])] = vectors[i];
    std::vector<Vec> edge_vec(static_cast<size_t>(n));
    for (const PathRecord& p : decomp.paths) {
        const Vec v = vector_of_leaf[static_cast<size_t>(p.leaf)];
        for (size_t i = 0; i + 1 < p.vertices.size(); ++i)
            edge_vec[static_cast<size_t>(p.vertices[i])] = v;
    }
    return draw_from_edge_vectors(tree, edge_vec);
}

std::vector<Vec> baseline_vectors(i64 count) {
    if (count < 0) throw std::invalid_argument("baseline_vectors: negative count");
    if (count == 0) return {};
    i64 d = 1;
    while (primitive_count(d) < count) ++d;
    const std::vector<Vec> all = enumerate_primitive(d);
    const i64 m = static_cast<i64>(all.size());
    std::vector<Vec> out;
    out.reserve(static_cast<size_t>(count));
    for (i64 i = 0; i < count; ++i)  // strictly increasing indices since m >= count
        out.push_back(all[static_cast<size_t>(i * m / count)]);
    return out;
}

OptimalResult optimal_draw(const RootedTree& tree, i64 f, i64 d) {
    if (f < 1 || d < 1) throw std::invalid_argument("optimal_draw: f and d must be >= 1");
    const i64 n = tree.vertex_count();
    OptimalResult res;
    res.stats.f = f;
    res.stats.d = d;
    if (n == 1) {
        res.drawing.coords.assign(1, Vec{});
        res.drawing.edge_vec.assign(1, Vec{});
        return res;
    }
    const i64 c = f + 1;
    PathDecomposition decomp = ldpd(tree);
    LevelAssignment levels = c_partition(decomp, c, n);
    VectorPool pool = build_pool(f, d, levels.K);

    const std::vector<int> ccw = paths_in_ccw_order(tree, decomp);
    std::vector<int> levels_ccw(ccw.size());
    for (size_t i = 0; i < ccw.size(); ++i)
        levels_ccw[i] = levels.level[static_cast<size_t>(ccw[i])];
    Assignment asg = assign_vectors(levels_ccw, pool);

    res.drawing = path_draw(tree, decomp, asg.vectors);

    res.stats.K = levels.K;
    res.stats.pool_size = static_cast<i64>(pool.entries.size());
    res.stats.consumed = asg.consumed;
    if (c > d) {
        res.stats.bound_num = c * d * n;
        res.stats.bound_den = c - d;
    }
    std::vector<i64> heights = level_subtree_heights(tree, decomp, levels);
    res.stats.levels.resize(static_cast<size_t>(levels.K));
    for (int j = 1; j <= levels.K; ++j) {
        LevelStats& ls = res.stats.levels[static_cast<size_t>(j) - 1];
        ls.j = j;
        ls.paths = levels.paths_per_level[static_cast<size_t>(j)];
        ls.height = heights[static_cast<size_t>(j)];
    }
    for (size_t i = 0; i < ccw.size(); ++i) {
        const int j = levels_ccw[i];
        LevelStats& ls = res.stats.levels[static_cast<size_t>(j) - 1];
        ls.max_vector_size = std::max(ls.max_vector_size, vec_size(asg.vectors[i]));
    }
    return res;
}

}  // namespace montree
