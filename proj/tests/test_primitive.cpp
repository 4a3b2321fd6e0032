#include <algorithm>

#include "doctest.h"
#include "montree/primitive.hpp"

using namespace montree;

namespace {
Vec frac(i64 y, i64 x) { return {x, y}; }  // read 9/11 as slope y/x
}

TEST_CASE("enumerate_primitive: small cases") {
    CHECK(enumerate_primitive(1) == std::vector<Vec>{{1, 1}});
    // All 7 vectors of size <= 3, strictly slope-sorted.
    CHECK(enumerate_primitive(3) ==
          std::vector<Vec>{{3, 1}, {2, 1}, {3, 2}, {1, 1}, {2, 3}, {1, 2}, {1, 3}});
    CHECK_THROWS_AS(enumerate_primitive(0), std::invalid_argument);
}

TEST_CASE("enumerate_primitive: density lower bound 6d^2/pi^2") {
    const double pi2 = 9.869604401089358;
    for (i64 d = 1; d <= 50; ++d) {
        const auto v = enumerate_primitive(d);
        CHECK(static_cast<double>(v.size()) >= 6.0 * double(d) * double(d) / pi2);
        CHECK(static_cast<i64>(v.size()) == primitive_count(d));
    }
}

TEST_CASE("consecutive members plus boundary are Farey neighbours") {
    for (i64 d : {1, 2, 3, 5, 10, 37, 100}) {
        std::vector<Vec> v = enumerate_primitive(d);
        v.insert(v.begin(), kBoundaryLo);
        v.push_back(kBoundaryHi);
        for (size_t i = 0; i + 1 < v.size(); ++i) {
            CHECK(unimodular(v[i], v[i + 1]));
            // mediant escapes the box: x1+x2 > d or y1+y2 > d
            CHECK((v[i].x + v[i + 1].x > d || v[i].y + v[i + 1].y > d));
        }
    }
}

TEST_CASE("mediant") {
    CHECK(mediant({1, 0}, {0, 1}) == Vec{1, 1});
    CHECK(mediant(frac(4, 5), frac(5, 6)) == frac(9, 11));
    CHECK(mediant(frac(4, 5), frac(9, 11)) == frac(13, 16));
    CHECK_THROWS_AS(mediant({1, 1}, {1, 3}), std::invalid_argument);  // det 2
    CHECK_THROWS_AS(mediant({0, 1}, {1, 0}), std::invalid_argument);  // reversed
}

TEST_CASE("fibonacci under F_0 = F_1 = 1") {
    CHECK(fibonacci(0) == 1);
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(2) == 2);
    CHECK(fibonacci(3) == 3);
    CHECK(fibonacci(6) == 13);
    for (int q = 0; q <= 40; ++q) CHECK(fibonacci(q + 2) == fibonacci(q + 1) + fibonacci(q));
}

TEST_CASE("stern_brocot_levels: T(4/5, 5/6) levels 1..4") {
    const SternBrocotLevels t = stern_brocot_levels(frac(4, 5), frac(5, 6), 4);
    REQUIRE(t.level.size() == 4);
    CHECK(t.level[0] == std::vector<Vec>{frac(9, 11)});
    CHECK(t.level[1] == std::vector<Vec>{frac(13, 16), frac(14, 17)});
    CHECK(t.level[2] ==
          std::vector<Vec>{frac(17, 21), frac(22, 27), frac(23, 28), frac(19, 23)});
    CHECK(t.level[3] == std::vector<Vec>{frac(21, 26), frac(30, 37), frac(35, 43), frac(31, 38),
                                         frac(32, 39), frac(37, 45), frac(33, 40), frac(24, 29)});
    CHECK(t.node_count() == 15);  // 2^4 - 1
    // level-k sizes bounded by F_{k+1} * max endpoint size (= 6 here)
    for (size_t k = 1; k <= 4; ++k)
        for (const Vec& v : t.level[k - 1])
            CHECK(vec_size(v) <= fibonacci(static_cast<int>(k) + 1) * 6);
}

TEST_CASE("stern_brocot_levels: classic tree, in-order is slope-sorted") {
    const SternBrocotLevels t = stern_brocot_levels(kBoundaryLo, kBoundaryHi, 2);
    CHECK(t.in_order() == std::vector<Vec>{{2, 1}, {1, 1}, {1, 2}});
    const SternBrocotLevels big = stern_brocot_levels(frac(1, 3), frac(1, 2), 7);
    const std::vector<Vec> in = big.in_order();
    CHECK(in.size() == 127);
    for (size_t i = 0; i + 1 < in.size(); ++i) CHECK(slope_less(in[i], in[i + 1]));
    for (const Vec& v : in) {
        CHECK(is_primitive(v));
        CHECK(slope_less(frac(1, 3), v));
        CHECK(slope_less(v, frac(1, 2)));
    }
}

TEST_CASE("stern_brocot_levels: no members of P(max endpoint size) inside") {
    const SternBrocotLevels t = stern_brocot_levels(frac(4, 5), frac(5, 6), 5);
    for (const auto& lvl : t.level)
        for (const Vec& v : lvl) CHECK(vec_size(v) > 6);
}

TEST_CASE("between_by_descent matches the enumeration") {
    // All vectors of size in (3, 9] strictly between 1/3 and 1/2.
    const std::vector<Vec> got = between_by_descent(frac(1, 3), frac(1, 2), 3, 9, 1000);
    std::vector<Vec> want;
    for (const Vec& v : enumerate_primitive(9))
        if (vec_size(v) > 3 && slope_less(frac(1, 3), v) && slope_less(v, frac(1, 2)))
            want.push_back(v);
    CHECK(got == want);
    // limit keeps the slope-smallest prefix
    const std::vector<Vec> first2 = between_by_descent(frac(1, 3), frac(1, 2), 3, 9, 2);
    CHECK(first2 == std::vector<Vec>(want.begin(), want.begin() + 2));
}

TEST_CASE("certify_valid_pair: (3,3) and (7,5) pass at desk scale") {
    const ValidPairReport a = certify_valid_pair(3, 3, 50);
    CHECK(a.pass());
    CHECK(a.min_gap_count >= 3);
    const ValidPairReport b = certify_valid_pair(7, 5, 30);
    CHECK(b.pass());
    CHECK(b.min_gap_count >= 7);
}

TEST_CASE("certify_valid_pair: (4,3) fails at delta=1 with count 3") {
    const ValidPairReport r = certify_valid_pair(4, 3, 10);
    CHECK(!r.pass());
    CHECK(!r.gaps_ok);
    REQUIRE(r.failure.has_value());
    CHECK(r.failure->delta == 1);
    CHECK(r.failure->lo == kBoundaryLo);
    CHECK(r.failure->hi == Vec{1, 1});
    CHECK(r.failure->count == 3);  // only 1/3, 1/2, 2/3 fit in P3 - P1
}

TEST_CASE("certify_valid_pair: (1,2) satisfies the gap condition but not f >= d") {
    const ValidPairReport r = certify_valid_pair(1, 2, 40);
    CHECK(r.gaps_ok);
    CHECK(!r.f_ge_d);
    CHECK(!r.pass());
}
