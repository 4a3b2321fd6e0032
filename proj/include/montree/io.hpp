#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "montree/decompose.hpp"
#include "montree/draw.hpp"
#include "montree/pool.hpp"
#include "montree/tree.hpp"

namespace montree {

// Coordinates TSV: "vertex<TAB>x<TAB>y", one row per vertex, preceded by '#'
// header comments carrying n, algorithm, (f,d) and the bounding box.
void write_coords_tsv(std::ostream& out, const RootedTree& tree, const Drawing& drawing,
                      const std::string& algo, i64 f = 0, i64 d = 0);
// Reads coordinates back; requires one row per vertex of an n-vertex tree.
std::vector<Vec> read_coords_tsv(std::istream& in, int n);

// Vector dumps: "x<TAB>y<TAB>level" (level 0 for a plain enumeration).
void write_vectors_tsv(std::ostream& out, const std::vector<Vec>& vectors);
void write_pool_tsv(std::ostream& out, const VectorPool& pool);

// Decomposition dump: "index<TAB>level<TAB>leaf<TAB>attachment<TAB>edge_count".
void write_decomposition_tsv(std::ostream& out, const PathDecomposition& decomp,
                             const LevelAssignment& levels);

// Static SVG: edges as segments, vertices as dots, y axis flipped for screen
// coordinates; `scale` is pixels per grid unit.
void write_svg(std::ostream& out, const RootedTree& tree, const Drawing& drawing, i64 scale);

}  // namespace montree
