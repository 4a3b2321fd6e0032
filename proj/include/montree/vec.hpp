#pragma once

#include <cstdint>
#include <numeric>

namespace montree {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

// Integer 2D vector. Doubles as a grid point and as an edge direction.
// All slope and angle comparisons go through exact cross products; no
// floating point anywhere in the geometry.
struct Vec {
    i64 x = 0;
    i64 y = 0;

    friend bool operator==(const Vec&, const Vec&) = default;
    Vec operator+(Vec o) const { return {x + o.x, y + o.y}; }
    Vec operator-(Vec o) const { return {x - o.x, y - o.y}; }
    Vec operator-() const { return {-x, -y}; }
};

inline i128 cross(Vec a, Vec b) { return i128(a.x) * b.y - i128(a.y) * b.x; }
inline i128 dot(Vec a, Vec b) { return i128(a.x) * b.x + i128(a.y) * b.y; }

// slope(a) < slope(b) with slopes y/x compared as y_a*x_b < y_b*x_a.
// Valid for all vectors in the closed first quadrant, boundary included
// ((1,0) has the smallest slope, (0,1) the largest).
inline bool slope_less(Vec a, Vec b) { return cross(a, b) > 0; }
inline bool slope_equal(Vec a, Vec b) { return cross(a, b) == 0; }

// size of a primitive vector: max(x, y)
inline i64 vec_size(Vec v) { return v.x > v.y ? v.x : v.y; }

inline bool is_primitive(Vec v) {
    if (v.x < 0 || v.y < 0 || (v.x == 0 && v.y == 0)) return false;
    return std::gcd(v.x, v.y) == 1;
}

// The boundary vectors bracketing every P̄_d in slope but never members of it.
constexpr Vec kBoundaryLo{1, 0};
constexpr Vec kBoundaryHi{0, 1};

inline bool is_boundary(Vec v) { return v == kBoundaryLo || v == kBoundaryHi; }

// Farey / unimodular neighbours: y2*x1 - y1*x2 == 1 for a=(x1,y1), b=(x2,y2).
// Implies slope(a) < slope(b) and that the mediant is the unique smallest
// vector strictly between them.
inline bool unimodular(Vec a, Vec b) { return cross(a, b) == 1; }

}  // namespace montree
