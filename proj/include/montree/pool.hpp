#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "montree/vec.hpp"

namespace montree {

struct PoolEntry {
    Vec v;
    int level = 0;  // j: membership in R_j
};

// The hierarchical pool V = R_1 ∪ ... ∪ R_K, slope-sorted. R_1 is (1,1) plus
// f vectors on each side of slope 1; every later R_{j+1} inserts exactly f
// vectors between each pair of slope-consecutive accumulated entries
// (boundary vectors as sentinels). |entries| = 2(f+1)^K - 1 and every level-j
// entry has size <= d^j.
struct VectorPool {
    i64 f = 0, d = 0;
    int K = 0;
    std::vector<PoolEntry> entries;
};

// Raised when the structural guarantees cannot be met (an invalid pair in
// practice); carries the offending gap.
struct PoolBuildError : std::runtime_error {
    PoolBuildError(const std::string& what, int stage_, Vec lo_, Vec hi_)
        : std::runtime_error(what), stage(stage_), lo(lo_), hi(hi_) {}
    int stage;
    Vec lo, hi;
};

// For f = 2^q - 1 the f vectors per gap are the first q Stern-Brocot levels
// between the gap's endpoints (in slope order); otherwise the f slope-smallest
// vectors of size in (d^j, d^(j+1)] found by pruned descent. Both selections
// enforce the size cap d^level and fail loudly when a gap cannot supply f
// vectors.
VectorPool build_pool(i64 f, i64 d, int K);

// Algorithm step: walk paths left to right with a single cursor over the
// pool; a level-j path consumes entries up to and including the first
// unconsumed entry of level <= j.
struct Assignment {
    std::vector<Vec> vectors;  // per path, ccw order; strictly slope-increasing
    i64 consumed = 0;          // entries passed over or taken by the cursor
};
struct PoolExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};
Assignment assign_vectors(const std::vector<int>& levels_ccw, const VectorPool& pool);

}  // namespace montree
