#include <algorithm>

#include "doctest.h"
#include "montree/generate.hpp"
#include "montree/tree.hpp"

using namespace montree;

TEST_CASE("parse: basic trees") {
    RootedTree t = parse_tree_text("0 1\n0 2\n");
    CHECK(t.vertex_count() == 3);
    CHECK(t.root() == 0);
    CHECK(t.children(0) == std::vector<int>{1, 2});

    RootedTree p = parse_tree_text("0 1\n1 2\n2 3\n");
    CHECK(p.vertex_count() == 4);
    CHECK(leaves_ccw(p) == std::vector<int>{3});
}

TEST_CASE("parse: comments, blanks, stray whitespace") {
    RootedTree t = parse_tree_text("# a tree\n\n  0 1\n\t0 2\n# done\n");
    CHECK(t.vertex_count() == 3);
}

TEST_CASE("parse: empty input is the single-vertex tree") {
    RootedTree t = parse_tree_text("# nothing\n");
    CHECK(t.vertex_count() == 1);
    CHECK(t.root() == 0);
    CHECK(leaves_ccw(t) == std::vector<int>{0});
}

TEST_CASE("parse: errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_tree_text("0 1\n1 0\n"), doctest::Contains("cycle"),
                         TreeFormatError);
    try {
        parse_tree_text("0 1\n1 0\n");
    } catch (const TreeFormatError& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_WITH_AS(parse_tree_text("0 1\n2 3\n"), doctest::Contains("multiple roots"),
                         TreeFormatError);
    CHECK_THROWS_WITH_AS(parse_tree_text("0 1\n0 1\n"), doctest::Contains("duplicate edge"),
                         TreeFormatError);
    CHECK_THROWS_WITH_AS(parse_tree_text("0 1\n0 5\n"), doctest::Contains("out of range"),
                         TreeFormatError);
    CHECK_THROWS_WITH_AS(parse_tree_text("0 -1\n"), doctest::Contains("out of range"),
                         TreeFormatError);
    CHECK_THROWS_WITH_AS(parse_tree_text("3 3\n"), doctest::Contains("cycle"), TreeFormatError);
    CHECK_THROWS_WITH_AS(parse_tree_text("0 2\n1 2\n"), doctest::Contains("duplicate parent"),
                         TreeFormatError);
    CHECK_THROWS_AS(parse_tree_text("0\n"), TreeFormatError);
    // cycle in a side component, root present
    CHECK_THROWS_WITH_AS(parse_tree_text("0 1\n2 3\n3 4\n4 2\n"), doctest::Contains("cycle"),
                         TreeFormatError);
}

TEST_CASE("leaves_ccw follows stored child order") {
    CHECK(leaves_ccw(parse_tree_text("0 1\n0 2\n0 3\n")) == std::vector<int>{1, 2, 3});
    CHECK(leaves_ccw(parse_tree_text("0 1\n0 2\n1 3\n1 4\n")) == std::vector<int>{3, 4, 2});
}

TEST_CASE("tree_path") {
    RootedTree p = parse_tree_text("0 1\n1 2\n2 3\n");
    CHECK(tree_path(p, 0, 3) == std::vector<int>{0, 1, 2, 3});
    CHECK(tree_path(p, 2, 2) == std::vector<int>{2});
    RootedTree t = parse_tree_text("0 1\n0 2\n1 3\n");
    CHECK(tree_path(t, 3, 2) == std::vector<int>{3, 1, 0, 2});
}

TEST_CASE("tree_path reversal property on random trees") {
    for (u64 seed : {1ull, 2ull, 3ull}) {
        RootedTree t = generate({TreeKind::random_recursive, 60, seed});
        SplitMix64 rng(seed * 977);
        for (int rep = 0; rep < 50; ++rep) {
            int u = static_cast<int>(rng.below(60)), w = static_cast<int>(rng.below(60));
            std::vector<int> fwd = tree_path(t, u, w);
            std::vector<int> bwd = tree_path(t, w, u);
            std::reverse(bwd.begin(), bwd.end());
            CHECK(fwd == bwd);
        }
    }
}

TEST_CASE("serialize then parse is the identity") {
    for (u64 seed : {5ull, 6ull, 7ull, 8ull}) {
        RootedTree t = generate({TreeKind::random_recursive, 40, seed});
        RootedTree back = parse_tree_text(serialize_tree_text(t));
        CHECK(back.vertex_count() == t.vertex_count());
        CHECK(back.root() == t.root());
        for (int v = 0; v < t.vertex_count(); ++v) {
            CHECK(back.parent(v) == t.parent(v));
            CHECK(back.children(v) == t.children(v));
        }
        CHECK(serialize_tree_text(back) == serialize_tree_text(t));
    }
}

TEST_CASE("leaf count matches childless vertices") {
    for (u64 seed : {11ull, 12ull}) {
        RootedTree t = generate({TreeKind::random_recursive, 200, seed});
        size_t childless = 0;
        for (int v = 0; v < t.vertex_count(); ++v)
            if (t.is_leaf(v)) ++childless;
        CHECK(leaves_ccw(t).size() == childless);
    }
}
