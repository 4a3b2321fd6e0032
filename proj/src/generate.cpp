#include "montree/generate.hpp"

#include <stdexcept>

#include "montree/verify.hpp"

namespace montree {

RootedTree generate(const GeneratorSpec& spec) {
    const i64 n = spec.n;
    if (n < 1) throw std::invalid_argument("generate: n must be >= 1");
    if (n == 1 && spec.kind != TreeKind::t0) return RootedTree::single_vertex();
    std::vector<std::pair<int, int>> edges;
    switch (spec.kind) {
        case TreeKind::random_recursive: {
            SplitMix64 rng(spec.seed);
            edges.reserve(static_cast<size_t>(n) - 1);
            for (i64 k = 1; k < n; ++k)
                edges.emplace_back(static_cast<int>(rng.below(static_cast<u64>(k))),
                                   static_cast<int>(k));
            break;
        }
        case TreeKind::path:
            for (i64 k = 1; k < n; ++k)
                edges.emplace_back(static_cast<int>(k - 1), static_cast<int>(k));
            break;
        case TreeKind::star:
            for (i64 k = 1; k < n; ++k) edges.emplace_back(0, static_cast<int>(k));
            break;
        case TreeKind::caterpillar: {
            const i64 spine = (n + 1) / 2;
            for (i64 k = 1; k < spine; ++k)
                edges.emplace_back(static_cast<int>(k - 1), static_cast<int>(k));
            for (i64 k = spine; k < n; ++k)
                edges.emplace_back(static_cast<int>(k - spine), static_cast<int>(k));
            break;
        }
        case TreeKind::complete_binary:
            for (i64 k = 1; k < n; ++k)
                edges.emplace_back(static_cast<int>((k - 1) / 2), static_cast<int>(k));
            break;
        case TreeKind::t0:
            return build_t0(n);
    }
    return RootedTree::from_edges(edges);
}

TreeKind tree_kind_from_name(const std::string& name) {
    if (name == "random-recursive") return TreeKind::random_recursive;
    if (name == "path") return TreeKind::path;
    if (name == "star") return TreeKind::star;
    if (name == "caterpillar") return TreeKind::caterpillar;
    if (name == "complete-binary") return TreeKind::complete_binary;
    if (name == "t0") return TreeKind::t0;
    throw std::invalid_argument("unknown tree kind: " + name);
}

std::string tree_kind_name(TreeKind kind) {
    switch (kind) {
        case TreeKind::random_recursive: return "random-recursive";
        case TreeKind::path: return "path";
        case TreeKind::star: return "star";
        case TreeKind::caterpillar: return "caterpillar";
        case TreeKind::complete_binary: return "complete-binary";
        case TreeKind::t0: return "t0";
    }
    return "?";
}

}  // namespace montree
