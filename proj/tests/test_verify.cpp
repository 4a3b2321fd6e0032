#include <algorithm>

#include "doctest.h"
#include "montree/draw.hpp"
#include "montree/generate.hpp"
#include "montree/verify.hpp"
#include "oracles.hpp"

using namespace montree;

TEST_CASE("path_is_monotone: spec cases") {
    CHECK(path_is_monotone(std::vector<Vec>{{1, 1}}));
    CHECK(path_is_monotone(std::vector<Vec>{{1, 0}, {0, 1}}));
    CHECK_FALSE(path_is_monotone(std::vector<Vec>{{1, 0}, {-1, 0}}));  // exactly 180
    CHECK(path_is_monotone(std::vector<Vec>{{1, 0}, {-1, 1}}));        // 135
    CHECK_FALSE(path_is_monotone(std::vector<Vec>{{1, 0}, {-1, 1}, {-1, -1}}));  // 225
    CHECK_THROWS_AS(path_is_monotone(std::vector<Vec>{{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(path_is_monotone(std::vector<Vec>{}), std::invalid_argument);
}

TEST_CASE("path_is_monotone: scaling dedup and boundary wedges") {
    // scaled copies collapse to one direction
    CHECK(path_is_monotone(std::vector<Vec>{{2, 2}, {5, 5}, {1, 1}}));
    // three directions spanning exactly a half turn
    CHECK_FALSE(path_is_monotone(std::vector<Vec>{{1, 0}, {0, 1}, {-1, 0}}));
    // just under
    CHECK(path_is_monotone(std::vector<Vec>{{1, 0}, {0, 1}, {-99, 100}}));
    // full fan
    CHECK_FALSE(path_is_monotone(std::vector<Vec>{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
}

TEST_CASE("path_is_monotone agrees with the dense-direction oracle") {
    SplitMix64 rng(4242);
    for (int rep = 0; rep < 3000; ++rep) {
        const size_t len = 1 + rng.below(8);
        std::vector<Vec> dirs;
        while (dirs.size() < len) {
            Vec v{static_cast<i64>(rng.below(19)) - 9, static_cast<i64>(rng.below(19)) - 9};
            if (v.x == 0 && v.y == 0) continue;
            dirs.push_back(v);
        }
        CHECK(path_is_monotone(dirs) == oracle::dense_monotone(dirs));
    }
}

TEST_CASE("verify_monotone_drawing: hand-made coordinates") {
    RootedTree p4 = generate({TreeKind::path, 4, 0});
    // zig above the x axis: dirs (1,2), (1,-2), (1,2) all have dx > 0
    Drawing zig = drawing_from_coords(p4, {{0, 0}, {1, 2}, {2, 0}, {3, 2}});
    CHECK(verify_monotone_drawing(p4, zig, VerifyMode::exhaustive).ok());
    CHECK(verify_monotone_drawing(p4, zig, VerifyMode::leaf_reduced).ok());

    RootedTree p3 = generate({TreeKind::path, 3, 0});
    Drawing bend = drawing_from_coords(p3, {{0, 0}, {1, 0}, {0, 1}});  // dirs (1,0), (-1,1)
    CHECK(verify_monotone_drawing(p3, bend, VerifyMode::exhaustive).ok());

    // a drawn path that doubles back: (1,0) then (-1,0)
    Drawing back = drawing_from_coords(p3, {{0, 0}, {1, 0}, {0, 0}});
    CHECK_THROWS_AS(verify_monotone_drawing(p3, back, VerifyMode::exhaustive),
                    std::invalid_argument);  // coincident points rejected at load
    Drawing fold = drawing_from_coords(p3, {{0, 0}, {2, 0}, {1, 0}});
    VerificationReport rep = verify_monotone_drawing(p3, fold, VerifyMode::exhaustive);
    CHECK_FALSE(rep.ok());
    REQUIRE(rep.failures.size() == 1);
    CHECK(rep.failures[0].u == 0);
    CHECK(rep.failures[0].w == 2);
}

TEST_CASE("drawing_from_coords rejects coincident endpoints") {
    RootedTree p3 = generate({TreeKind::path, 3, 0});
    CHECK_THROWS_AS(drawing_from_coords(p3, {{0, 0}, {1, 1}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("exhaustive and leaf-reduced agree (first-quadrant and not)") {
    for (u64 seed = 1; seed <= 15; ++seed) {
        RootedTree t = generate({TreeKind::random_recursive, 40, seed * 3});
        OptimalResult r = optimal_draw(t);
        const auto ex = verify_monotone_drawing(t, r.drawing, VerifyMode::exhaustive);
        const auto lf = verify_monotone_drawing(t, r.drawing, VerifyMode::leaf_reduced);
        CHECK(ex.ok());
        CHECK(lf.ok());
    }
    // corrupted drawings must fail in both modes with consistent verdicts
    SplitMix64 rng(8);
    for (u64 seed = 1; seed <= 15; ++seed) {
        RootedTree t = generate({TreeKind::random_recursive, 30, seed * 5});
        if (t.vertex_count() < 3) continue;
        OptimalResult r = optimal_draw(t);
        std::vector<Vec> coords = r.drawing.coords;
        // nudge one non-root vertex; keep endpoints distinct
        const int v = 1 + static_cast<int>(rng.below(u64(t.vertex_count() - 1)));
        coords[size_t(v)].x += static_cast<i64>(rng.below(9)) - 4;
        coords[size_t(v)].y += static_cast<i64>(rng.below(200)) + 50;
        Drawing mutated;
        try {
            mutated = drawing_from_coords(t, coords);
        } catch (const std::invalid_argument&) {
            continue;
        }
        const auto ex = verify_monotone_drawing(t, mutated, VerifyMode::exhaustive);
        const auto lf = verify_monotone_drawing(t, mutated, VerifyMode::leaf_reduced);
        CHECK(ex.ok() == lf.ok());
        // leaf-reduced witnesses must be real failures under the wedge test
        for (const PairFailure& f : lf.failures) {
            std::vector<int> path = tree_path(t, f.u, f.w);
            std::vector<Vec> dirs;
            for (size_t i = 0; i + 1 < path.size(); ++i)
                dirs.push_back(mutated.coords[size_t(path[i + 1])] -
                               mutated.coords[size_t(path[i])]);
            CHECK_FALSE(path_is_monotone(dirs));
        }
    }
}

TEST_CASE("leaf-reduced fast path matches per-pair walks on shaped trees") {
    for (TreeKind kind : {TreeKind::caterpillar, TreeKind::complete_binary, TreeKind::star}) {
        RootedTree t = generate({kind, 33, 0});
        OptimalResult r = optimal_draw(t);
        CHECK(verify_monotone_drawing(t, r.drawing, VerifyMode::leaf_reduced).ok());
        CHECK(verify_monotone_drawing(t, r.drawing, VerifyMode::exhaustive).ok());
    }
}

TEST_CASE("verify_slope_disjoint: positives, witness, axis rejection") {
    RootedTree t = generate({TreeKind::random_recursive, 40, 77});
    Drawing good = tree_monotone_draw(t, baseline_vectors(t.vertex_count() - 1));
    CHECK(verify_slope_disjoint(t, good).ok);

    // sibling subtrees with interleaved slopes
    RootedTree s = parse_tree_text("0 1\n0 2\n1 3\n2 4\n");
    Drawing bad = draw_from_edge_vectors(s, {{0, 0}, {1, 2}, {1, 1}, {5, 1}, {1, 5}});
    // T(1) spans slopes {2, 1/5 via child 3=(5,1)}; T(2) spans {1, 5}
    SlopeDisjointResult res = verify_slope_disjoint(s, bad);
    CHECK_FALSE(res.ok);
    CHECK(res.parent == 0);

    Drawing axis = drawing_from_coords(s, {{0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 2}});
    CHECK_THROWS_AS(verify_slope_disjoint(s, axis), std::invalid_argument);
}

TEST_CASE("slope-disjoint implies monotone (tested, never assumed)") {
    for (u64 seed = 1; seed <= 10; ++seed) {
        RootedTree t = generate({TreeKind::random_recursive, 45, seed * 13});
        Drawing d = tree_monotone_draw(t, baseline_vectors(t.vertex_count() - 1));
        if (verify_slope_disjoint(t, d).ok)
            CHECK(verify_monotone_drawing(t, d, VerifyMode::exhaustive).ok());
    }
}

TEST_CASE("build_t0 and the lower bound") {
    RootedTree t24 = build_t0(24);
    CHECK(t24.vertex_count() == 25);  // root + 12 paths of 2
    CHECK(leaves_ccw(t24).size() == 12);
    PathDecomposition d = ldpd(t24);
    REQUIRE(d.size() == 12);
    for (const PathRecord& p : d.paths) CHECK(p.edge_count() == 2);
    CHECK(oracle::same_decomposition(d, oracle::slow_ldpd(t24)));
    CHECK_THROWS_AS(build_t0(11), std::invalid_argument);

    OptimalResult r = optimal_draw(t24);
    CHECK(verify_monotone_drawing(t24, r.drawing, VerifyMode::exhaustive).ok());
    CHECK(check_lower_bound(t24, r.drawing));
    Drawing base = tree_monotone_draw(t24, baseline_vectors(24));
    CHECK(check_lower_bound(t24, base));
}
