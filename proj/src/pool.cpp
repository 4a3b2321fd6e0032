#include "montree/pool.hpp"

#include <cassert>

#include "montree/primitive.hpp"

namespace montree {

namespace {

// 2 * (f+1)^K - 1 with an allocation guard.
i64 expected_pool_size(i64 f, int K) {
    i64 total = 1;
    for (int i = 0; i < K; ++i) {
        if (total > (i64(1) << 27) / (f + 1))
            throw std::invalid_argument("build_pool: pool would be unreasonably large");
        total *= f + 1;
    }
    return 2 * total - 1;
}

// In-order nodes of the first q Stern-Brocot levels between (a, b), checked
// against the stage size cap. Recursion depth is q <= ~30.
void sb_expand(Vec a, Vec b, int q, i64 cap, int stage, std::vector<Vec>& out) {
    if (q == 0) return;
    Vec m = mediant(a, b);
    if (vec_size(m) > cap)
        throw PoolBuildError("build_pool: Stern-Brocot node exceeds level size cap", stage, a, b);
    sb_expand(a, m, q - 1, cap, stage, out);
    out.push_back(m);
    sb_expand(m, b, q - 1, cap, stage, out);
}

}  // namespace

VectorPool build_pool(i64 f, i64 d, int K) {
    if (f < 1 || d < 1) throw std::invalid_argument("build_pool: f and d must be >= 1");
    if (K < 1 || K > 40) throw std::invalid_argument("build_pool: K out of range");
    const i64 total = expected_pool_size(f, K);

    // q > 0 when f = 2^q - 1: pick full Stern-Brocot levels, mirroring the
    // Fibonacci-form valid pairs (2^q - 1, F_{q+1}).
    int q = 0;
    if ((u64(f) & u64(f + 1)) == 0) {
        for (i64 p = f + 1; p > 1; p >>= 1) ++q;
    }

    VectorPool pool;
    pool.f = f;
    pool.d = d;
    pool.K = K;
    pool.entries.reserve(static_cast<size_t>(total));
    pool.entries.push_back({{1, 1}, 1});

    i64 cap = 1;  // d^stage
    i64 floor_size = 1;  // d^(stage-1); general selection takes fresh vectors only
    std::vector<Vec> picked;
    for (int stage = 1; stage <= K; ++stage) {
        if (cap > (i64(1) << 62) / d)
            throw std::overflow_error("build_pool: d^K overflows int64");
        cap *= d;
        std::vector<PoolEntry> next;
        next.reserve(pool.entries.size() * static_cast<size_t>(f + 1) + static_cast<size_t>(f));
        const int tag = stage;  // stage-1 inserts complete R_1 itself
        Vec prev = kBoundaryLo;
        auto emit_gap = [&](Vec lo, Vec hi) {
            picked.clear();
            if (q > 0) {
                sb_expand(lo, hi, q, cap, stage, picked);
            } else {
                picked = between_by_descent(lo, hi, floor_size, cap, static_cast<size_t>(f));
                if (static_cast<i64>(picked.size()) < f)
                    throw PoolBuildError("build_pool: fewer than f vectors in gap", stage, lo, hi);
            }
            for (Vec v : picked) next.push_back({v, tag});
        };
        for (const PoolEntry& e : pool.entries) {
            emit_gap(prev, e.v);
            next.push_back(e);
            prev = e.v;
        }
        emit_gap(prev, kBoundaryHi);
        pool.entries = std::move(next);
        floor_size = cap;
    }
    assert(static_cast<i64>(pool.entries.size()) == total);
    return pool;
}

Assignment assign_vectors(const std::vector<int>& levels_ccw, const VectorPool& pool) {
    Assignment out;
    out.vectors.reserve(levels_ccw.size());
    size_t cursor = 0;
    for (int j : levels_ccw) {
        if (j < 1 || j > pool.K)
            throw std::invalid_argument("assign_vectors: path level outside 1..K");
        while (cursor < pool.entries.size() && pool.entries[cursor].level > j) ++cursor;
        if (cursor == pool.entries.size())
            throw PoolExhausted(
                "assign_vectors: pool exhausted (levels not from a c=f+1 partition?)");
        out.vectors.push_back(pool.entries[cursor].v);
        ++cursor;
    }
    out.consumed = static_cast<i64>(cursor);
    return out;
}

}  // namespace montree
