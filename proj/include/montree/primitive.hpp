#pragma once

#include <optional>
#include <vector>

#include "montree/vec.hpp"

namespace montree {

// All primitive vectors (x,y), gcd(x,y)=1, 1 <= x,y <= d, sorted strictly
// increasing by slope y/x (exact comparison). Boundary vectors excluded.
// |result| >= 6d^2/pi^2. Throws on d < 1 or d large enough to be a mistake.
std::vector<Vec> enumerate_primitive(i64 d);

// Count of the above without materializing it: 2*sum_{k=2..d} phi(k) + 1.
i64 primitive_count(i64 d);

// Mediant (x1+x2, y1+y2) of unimodular neighbours a, b with slope(a)<slope(b).
// Rejects non-unimodular inputs; the result is coprime, strictly between in
// slope, and unimodular with both inputs.
Vec mediant(Vec a, Vec b);

// Fibonacci numbers under the indexing F_0 = F_1 = 1.
i64 fibonacci(int q);

// The generalized Stern-Brocot tree T(a, b) between unimodular neighbours,
// truncated to levels 1..q. Level k holds 2^(k-1) nodes in left-to-right
// (= increasing slope) order; every level-k node has size <= F_{k+1} * Delta
// where Delta = max(size(a), size(b)).
struct SternBrocotLevels {
    Vec lo, hi;                           // level-0 endpoints
    std::vector<std::vector<Vec>> level;  // level[k-1] = level k

    i64 node_count() const;
    std::vector<Vec> in_order() const;  // all nodes, sorted by slope
};
SternBrocotLevels stern_brocot_levels(Vec a, Vec b, int q);

// The `limit` slope-smallest primitive vectors whose slope lies strictly
// between slope(a) and slope(b) and whose size is in (min_excl, max_incl],
// in increasing slope order, found by pruned Stern-Brocot descent.
std::vector<Vec> between_by_descent(Vec a, Vec b, i64 min_excl, i64 max_incl,
                                    size_t limit);

// Brute-force certification of the valid-pair property: for every Delta in
// 1..delta_max and every consecutive slope pair of P̄_Delta (boundary vectors
// as sentinels), count the vectors of P̄_{d*Delta} − P̄_Delta strictly between.
struct ValidPairWitness {
    i64 delta;
    Vec lo, hi;
    i64 count;  // vectors found strictly between; < f on failure
};
struct ValidPairReport {
    i64 f = 0, d = 0, delta_max = 0;
    bool f_ge_d = false;   // Def. condition 1
    bool gaps_ok = false;  // Def. condition 2 for all Delta <= delta_max
    i64 min_gap_count = 0;
    std::optional<ValidPairWitness> failure;  // smallest failing Delta, if any

    bool pass() const { return f_ge_d && gaps_ok; }
};
ValidPairReport certify_valid_pair(i64 f, i64 d, i64 delta_max);

}  // namespace montree
