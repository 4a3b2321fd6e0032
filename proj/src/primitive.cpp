#include "montree/primitive.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace montree {

namespace {
// Enumeration is O(d^2 log d); anything past this cap is a caller bug, not a
// workload this library serves (pools are built by descent, not enumeration).
constexpr i64 kMaxEnumerate = 20'000;

Vec mediant_unchecked(Vec a, Vec b) {
    assert(unimodular(a, b));
    i64 x, y;
    if (__builtin_add_overflow(a.x, b.x, &x) || __builtin_add_overflow(a.y, b.y, &y))
        throw std::overflow_error("mediant overflows int64");
    return {x, y};
}
}  // namespace

std::vector<Vec> enumerate_primitive(i64 d) {
    if (d < 1) throw std::invalid_argument("enumerate_primitive: d must be >= 1");
    if (d > kMaxEnumerate) throw std::invalid_argument("enumerate_primitive: d too large");
    std::vector<Vec> out;
    out.reserve(static_cast<size_t>(0.61 * double(d) * double(d)) + 8);
    for (i64 x = 1; x <= d; ++x)
        for (i64 y = 1; y <= d; ++y)
            if (std::gcd(x, y) == 1) out.push_back({x, y});
    std::sort(out.begin(), out.end(), slope_less);
    return out;
}

i64 primitive_count(i64 d) {
    if (d < 1) throw std::invalid_argument("primitive_count: d must be >= 1");
    // phi sieve up to d
    std::vector<i64> phi(static_cast<size_t>(d) + 1);
    for (i64 i = 0; i <= d; ++i) phi[i] = i;
    for (i64 i = 2; i <= d; ++i)
        if (phi[i] == i)  // prime
            for (i64 j = i; j <= d; j += i) phi[j] -= phi[j] / i;
    i64 below_diagonal = 0;
    for (i64 k = 2; k <= d; ++k) below_diagonal += phi[k];
    return 2 * below_diagonal + 1;
}

Vec mediant(Vec a, Vec b) {
    if (!unimodular(a, b))
        throw std::invalid_argument("mediant: inputs are not unimodular neighbours");
    return mediant_unchecked(a, b);
}

i64 fibonacci(int q) {
    if (q < 0) throw std::invalid_argument("fibonacci: negative index");
    if (q > 90) throw std::overflow_error("fibonacci: index exceeds int64 range");
    i64 a = 1, b = 1;  // F_0, F_1
    for (int i = 2; i <= q; ++i) {
        i64 c = a + b;
        a = b;
        b = c;
    }
    return b;
}

i64 SternBrocotLevels::node_count() const {
    i64 total = 0;
    for (const auto& lvl : level) total += static_cast<i64>(lvl.size());
    return total;
}

std::vector<Vec> SternBrocotLevels::in_order() const {
    std::vector<Vec> all;
    for (const auto& lvl : level) all.insert(all.end(), lvl.begin(), lvl.end());
    std::sort(all.begin(), all.end(), slope_less);
    return all;
}

SternBrocotLevels stern_brocot_levels(Vec a, Vec b, int q) {
    if (!unimodular(a, b))
        throw std::invalid_argument("stern_brocot_levels: endpoints not unimodular");
    if (q < 1 || q > 30) throw std::invalid_argument("stern_brocot_levels: q out of range");
    SternBrocotLevels t;
    t.lo = a;
    t.hi = b;
    t.level.resize(static_cast<size_t>(q));
    // Each node is tracked with its bracketing interval; the children are the
    // mediants with the interval ends, which is exactly the closest-ancestor
    // rule of the tree definition.
    struct Node {
        Vec lo, hi, value;
    };
    std::vector<Node> cur{{a, b, mediant_unchecked(a, b)}};
    t.level[0] = {cur[0].value};
    for (int k = 2; k <= q; ++k) {
        std::vector<Node> next;
        next.reserve(cur.size() * 2);
        for (const Node& nd : cur) {
            next.push_back({nd.lo, nd.value, mediant_unchecked(nd.lo, nd.value)});
            next.push_back({nd.value, nd.hi, mediant_unchecked(nd.value, nd.hi)});
        }
        auto& lvl = t.level[static_cast<size_t>(k) - 1];
        lvl.reserve(next.size());
        for (const Node& nd : next) lvl.push_back(nd.value);
        cur = std::move(next);
    }
    return t;
}

std::vector<Vec> between_by_descent(Vec a, Vec b, i64 min_excl, i64 max_incl,
                                    size_t limit) {
    if (!slope_less(a, b))
        throw std::invalid_argument("between_by_descent: slope(a) must be < slope(b)");
    std::vector<Vec> out;
    if (limit == 0) return out;
    // In-order walk of the full Stern-Brocot tree restricted to the open slope
    // interval (a, b). Every vector strictly inside a bracket (lo, hi) is
    // p*lo + q*hi with p,q >= 1, so a bracket dies once its mediant outgrows
    // max_incl. Explicit stack: spines can be ~max_incl deep.
    struct Frame {
        Vec lo, hi;
        bool expanded;
    };
    std::vector<Frame> stack{{kBoundaryLo, kBoundaryHi, false}};
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        Vec m = mediant_unchecked(fr.lo, fr.hi);
        if (vec_size(m) > max_incl) continue;
        if (fr.expanded) {
            if (vec_size(m) > min_excl) {
                out.push_back(m);
                if (out.size() >= limit) break;
            }
            stack.push_back({m, fr.hi, false});
            continue;
        }
        if (!slope_less(a, m)) {  // everything left of m is <= a
            stack.push_back({m, fr.hi, false});
        } else if (!slope_less(m, b)) {  // everything right of m is >= b
            stack.push_back({fr.lo, m, false});
        } else {
            stack.push_back({fr.lo, fr.hi, true});
            stack.push_back({fr.lo, m, false});
        }
    }
    return out;
}

ValidPairReport certify_valid_pair(i64 f, i64 d, i64 delta_max) {
    if (f < 1 || d < 1 || delta_max < 1)
        throw std::invalid_argument("certify_valid_pair: f, d, delta_max must be >= 1");
    ValidPairReport rep;
    rep.f = f;
    rep.d = d;
    rep.delta_max = delta_max;
    rep.f_ge_d = f >= d;
    rep.gaps_ok = true;
    rep.min_gap_count = -1;

    // One global enumeration of P̄_{d*delta_max}; every P̄_Delta is the
    // size-filtered sublist, so each Delta is a single linear scan.
    const std::vector<Vec> all = enumerate_primitive(d * delta_max);
    for (i64 delta = 1; delta <= delta_max; ++delta) {
        const i64 big = d * delta;
        i64 gap_count = 0;
        auto close_gap = [&](Vec lo, Vec hi) {
            if (rep.min_gap_count < 0 || gap_count < rep.min_gap_count)
                rep.min_gap_count = gap_count;
            if (gap_count < f && !rep.failure) {
                rep.gaps_ok = false;
                rep.failure = ValidPairWitness{delta, lo, hi, gap_count};
            }
            gap_count = 0;
        };
        Vec prev = kBoundaryLo;
        for (const Vec& v : all) {
            const i64 s = vec_size(v);
            if (s <= delta) {
                close_gap(prev, v);
                prev = v;
            } else if (s <= big) {
                ++gap_count;
            }
        }
        close_gap(prev, kBoundaryHi);
        if (rep.failure) break;  // smallest failing Delta is the witness
    }
    return rep;
}

}  // namespace montree
