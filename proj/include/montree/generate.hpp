#pragma once

#include <string>

#include "montree/tree.hpp"
#include "montree/vec.hpp"

namespace montree {

// splitmix64: the fixed, platform-independent PRNG behind every randomized
// generator. Bounded draws use plain modulo; determinism matters here, not
// uniformity to the last bit.
struct SplitMix64 {
    u64 state;

    explicit SplitMix64(u64 seed) : state(seed) {}
    u64 next() {
        u64 z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    u64 below(u64 bound) { return next() % bound; }
};

enum class TreeKind {
    random_recursive,  // vertex k attaches to a uniform vertex < k
    path,
    star,
    caterpillar,  // spine of ceil(n/2) vertices, one leg per spine vertex
    complete_binary,
    t0,  // the lower-bound witness; n >= 12
};

struct GeneratorSpec {
    TreeKind kind = TreeKind::random_recursive;
    i64 n = 1;
    u64 seed = 0;
};

// Same spec => identical tree, bit-stable across platforms.
RootedTree generate(const GeneratorSpec& spec);

TreeKind tree_kind_from_name(const std::string& name);  // throws on unknown
std::string tree_kind_name(TreeKind kind);

}  // namespace montree
