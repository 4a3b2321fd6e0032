#include "montree/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace montree {

void write_coords_tsv(std::ostream& out, const RootedTree& tree, const Drawing& drawing,
                      const std::string& algo, i64 f, i64 d) {
    out << "# n=" << tree.vertex_count() << '\n';
    out << "# algo=" << algo << '\n';
    if (f > 0) out << "# pair=" << f << ',' << d << '\n';
    out << "# width=" << drawing.width << '\n';
    out << "# height=" << drawing.height << '\n';
    for (int v = 0; v < tree.vertex_count(); ++v)
        out << v << '\t' << drawing.coords[static_cast<size_t>(v)].x << '\t'
            << drawing.coords[static_cast<size_t>(v)].y << '\n';
}

std::vector<Vec> read_coords_tsv(std::istream& in, int n) {
    std::vector<Vec> coords(static_cast<size_t>(n));
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ls(line);
        long long v, x, y;
        if (!(ls >> v >> x >> y))
            throw TreeFormatError("expected \"vertex<TAB>x<TAB>y\"", line_no);
        if (v < 0 || v >= n) throw TreeFormatError("vertex id out of range", line_no);
        if (seen[static_cast<size_t>(v)])
            throw TreeFormatError("duplicate coordinates for vertex " + std::to_string(v),
                                  line_no);
        seen[static_cast<size_t>(v)] = 1;
        coords[static_cast<size_t>(v)] = {x, y};
    }
    for (int v = 0; v < n; ++v)
        if (!seen[static_cast<size_t>(v)])
            throw std::invalid_argument("coords file misses vertex " + std::to_string(v));
    return coords;
}

void write_vectors_tsv(std::ostream& out, const std::vector<Vec>& vectors) {
    for (const Vec& v : vectors) out << v.x << '\t' << v.y << '\t' << 0 << '\n';
}

void write_pool_tsv(std::ostream& out, const VectorPool& pool) {
    for (const PoolEntry& e : pool.entries)
        out << e.v.x << '\t' << e.v.y << '\t' << e.level << '\n';
}

void write_decomposition_tsv(std::ostream& out, const PathDecomposition& decomp,
                             const LevelAssignment& levels) {
    for (size_t i = 0; i < decomp.size(); ++i) {
        const PathRecord& p = decomp.paths[i];
        out << i << '\t' << levels.level[i] << '\t' << p.leaf << '\t' << p.attachment << '\t'
            << p.edge_count() << '\n';
    }
}

void write_svg(std::ostream& out, const RootedTree& tree, const Drawing& drawing, i64 scale) {
    if (scale < 1) throw std::invalid_argument("write_svg: scale must be >= 1");
    const i64 margin = scale;
    i64 min_x = 0, min_y = 0;
    for (const Vec& p : drawing.coords) {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
    }
    const i64 w = (drawing.width - min_x) * scale + 2 * margin;
    const i64 h = (drawing.height - min_y) * scale + 2 * margin;
    auto sx = [&](i64 x) { return (x - min_x) * scale + margin; };
    auto sy = [&](i64 y) { return (drawing.height - y) * scale + margin; };  // flip y
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    out << "<g stroke=\"#334\" stroke-width=\"1\">\n";
    for (int v = 0; v < tree.vertex_count(); ++v) {
        if (v == tree.root()) continue;
        const Vec a = drawing.coords[static_cast<size_t>(tree.parent(v))];
        const Vec b = drawing.coords[static_cast<size_t>(v)];
        out << "<line x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\"" << sx(b.x)
            << "\" y2=\"" << sy(b.y) << "\"/>\n";
    }
    out << "</g>\n<g fill=\"#c22\">\n";
    for (const Vec& p : drawing.coords)
        out << "<circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"2\"/>\n";
    out << "</g>\n</svg>\n";
}

}  // namespace montree
