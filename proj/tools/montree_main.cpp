// montree — monotone grid drawings of rooted trees, with exact verification.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage/input error, 3 internal
// invariant breach.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "montree/bench.hpp"
#include "montree/draw.hpp"
#include "montree/generate.hpp"
#include "montree/io.hpp"
#include "montree/primitive.hpp"
#include "montree/verify.hpp"

namespace {

using namespace montree;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

RootedTree load_tree(const std::string& path) {
    if (path == "-") return parse_tree(std::cin);
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open tree file: " + path);
    return parse_tree(in);
}

// Writes through an ostream chosen by --out ("-" = stdout).
class Output {
public:
    explicit Output(const std::string& path) {
        if (path != "-") {
            file_.open(path);
            if (!file_) throw UsageError("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::pair<i64, i64> parse_pair(const std::string& s) {
    std::istringstream ss(s);
    i64 f, d;
    char comma;
    if (!(ss >> f >> comma >> d) || comma != ',') throw UsageError("expected --pair f,d");
    return {f, d};
}

nlohmann::json stats_to_json(const RootedTree& tree, const Drawing& dr, const std::string& algo,
                             const DrawStats* stats) {
    nlohmann::json j{{"schema", 1},
                     {"algo", algo},
                     {"n", tree.vertex_count()},
                     {"width", dr.width},
                     {"height", dr.height}};
    if (stats) {
        j["f"] = stats->f;
        j["d"] = stats->d;
        j["K"] = stats->K;
        j["pool_size"] = stats->pool_size;
        j["consumed"] = stats->consumed;
        if (stats->bound_den > 0) {
            j["bound_num"] = stats->bound_num;
            j["bound_den"] = stats->bound_den;
            j["bound_ok"] =
                stats->bound_holds(dr.width) && stats->bound_holds(dr.height);
        }
        auto& levels = j["levels"] = nlohmann::json::array();
        for (const LevelStats& ls : stats->levels)
            levels.push_back({{"j", ls.j},
                              {"paths", ls.paths},
                              {"height", ls.height},
                              {"max_vector_size", ls.max_vector_size}});
    }
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"monotone grid drawings of rooted trees"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a tree and print its edge list");
    std::string gen_kind = "random-recursive", gen_out = "-";
    i64 gen_n = 100;
    u64 gen_seed = 0;
    gen->add_option("--kind", gen_kind, "random-recursive|path|star|caterpillar|complete-binary|t0");
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--seed", gen_seed, "PRNG seed");
    gen->add_option("--out", gen_out, "output file (- = stdout)");

    // draw
    auto* draw = app.add_subcommand("draw", "draw a tree and emit coordinates");
    std::string draw_tree, draw_algo = "optimal", draw_out = "-", draw_stats, draw_pair = "3,3";
    u64 draw_perm_seed = 0;
    bool draw_random_perm = false;
    draw->add_option("--tree", draw_tree, "tree file (- = stdin)")->required();
    draw->add_option("--algo", draw_algo, "optimal|path|baseline");
    draw->add_option("--pair", draw_pair, "valid pair f,d for --algo optimal");
    draw->add_flag("--random-perm", draw_random_perm,
                   "path algorithm: decompose along a random leaf permutation");
    draw->add_option("--perm-seed", draw_perm_seed, "seed for --random-perm");
    draw->add_option("--out", draw_out, "coordinates TSV (- = stdout)");
    draw->add_option("--stats", draw_stats, "also write a JSON stats file");

    // decompose
    auto* dec = app.add_subcommand("decompose", "dump the LDPD with c-partition levels");
    std::string dec_tree, dec_out = "-";
    i64 dec_c = 4;
    dec->add_option("--tree", dec_tree)->required();
    dec->add_option("--c", dec_c, "partition base (default 4)");
    dec->add_option("--out", dec_out);

    // vectors
    auto* vec = app.add_subcommand("vectors", "dump a primitive-vector enumeration or a pool");
    std::string vec_pair, vec_out = "-";
    i64 vec_d = 0;
    int vec_levels = 0;
    vec->add_option("--d", vec_d, "enumerate all primitive vectors of size <= d");
    vec->add_option("--pair", vec_pair, "pool mode: valid pair f,d");
    vec->add_option("--levels", vec_levels, "pool mode: level count K");
    vec->add_option("--out", vec_out);

    // certify
    auto* cert = app.add_subcommand("certify", "brute-force a valid-pair certificate");
    std::string cert_pair = "3,3";
    i64 cert_delta = 50;
    cert->add_option("--pair", cert_pair)->required();
    cert->add_option("--delta-max", cert_delta, "check all Delta up to this");

    // verify
    auto* ver = app.add_subcommand("verify", "verify a drawing is monotone");
    std::string ver_tree, ver_coords, ver_mode = "exhaustive";
    ver->add_option("--tree", ver_tree)->required();
    ver->add_option("--coords", ver_coords)->required();
    ver->add_option("--mode", ver_mode, "exhaustive|leaf");

    // bench
    auto* ben = app.add_subcommand("bench", "time the algorithms over random trees");
    std::string ben_sizes = "1000,10000,100000", ben_algos = "optimal,path,baseline";
    std::string ben_pair = "3,3", ben_format = "csv", ben_out = "-";
    u64 ben_seed = 1;
    ben->add_option("--sizes", ben_sizes, "comma-separated vertex counts");
    ben->add_option("--algos", ben_algos, "comma-separated algorithm names");
    ben->add_option("--pair", ben_pair);
    ben->add_option("--seed", ben_seed);
    ben->add_option("--format", ben_format, "csv|json");
    ben->add_option("--out", ben_out);

    // svg
    auto* svg = app.add_subcommand("svg", "render a drawing to SVG");
    std::string svg_tree, svg_coords, svg_out = "-";
    i64 svg_scale = 8;
    svg->add_option("--tree", svg_tree)->required();
    svg->add_option("--coords", svg_coords)->required();
    svg->add_option("--scale", svg_scale, "pixels per grid unit");
    svg->add_option("--out", svg_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help or the parse error
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (gen->parsed()) {
        GeneratorSpec spec{tree_kind_from_name(gen_kind), gen_n, gen_seed};
        Output out(gen_out);
        serialize_tree(out.stream(), generate(spec));
        return kExitOk;
    }

    if (draw->parsed()) {
        const RootedTree tree = load_tree(draw_tree);
        auto [f, d] = parse_pair(draw_pair);
        Drawing dr;
        std::unique_ptr<DrawStats> stats;
        if (draw_algo == "optimal") {
            OptimalResult res = optimal_draw(tree, f, d);
            dr = std::move(res.drawing);
            stats = std::make_unique<DrawStats>(std::move(res.stats));
        } else if (draw_algo == "path") {
            std::vector<int> perm = leaves_ccw(tree);
            if (draw_random_perm) {
                SplitMix64 rng(draw_perm_seed);
                for (size_t i = perm.size(); i > 1; --i)
                    std::swap(perm[i - 1], perm[rng.below(i)]);
            }
            PathDecomposition decomp = path_decomposition(tree, perm);
            dr = path_draw(tree, decomp, baseline_vectors(static_cast<i64>(decomp.size())));
        } else if (draw_algo == "baseline") {
            dr = tree_monotone_draw(tree, baseline_vectors(tree.vertex_count() - 1));
        } else {
            throw UsageError("unknown algorithm: " + draw_algo);
        }
        Output out(draw_out);
        write_coords_tsv(out.stream(), tree, dr, draw_algo,
                         draw_algo == "optimal" ? f : 0, draw_algo == "optimal" ? d : 0);
        if (!draw_stats.empty()) {
            Output sout(draw_stats);
            sout.stream() << stats_to_json(tree, dr, draw_algo, stats.get()).dump(2) << '\n';
        }
        return kExitOk;
    }

    if (dec->parsed()) {
        const RootedTree tree = load_tree(dec_tree);
        if (tree.vertex_count() < 2) throw UsageError("decompose: need n >= 2");
        PathDecomposition decomp = ldpd(tree);
        LevelAssignment levels = c_partition(decomp, dec_c, tree.vertex_count());
        Output out(dec_out);
        write_decomposition_tsv(out.stream(), decomp, levels);
        return kExitOk;
    }

    if (vec->parsed()) {
        Output out(vec_out);
        if (!vec_pair.empty()) {
            if (vec_levels < 1) throw UsageError("vectors: pool mode needs --levels K >= 1");
            auto [f, d] = parse_pair(vec_pair);
            write_pool_tsv(out.stream(), build_pool(f, d, vec_levels));
        } else if (vec_d >= 1) {
            write_vectors_tsv(out.stream(), enumerate_primitive(vec_d));
        } else {
            throw UsageError("vectors: pass --d or --pair/--levels");
        }
        return kExitOk;
    }

    if (cert->parsed()) {
        auto [f, d] = parse_pair(cert_pair);
        ValidPairReport rep = certify_valid_pair(f, d, cert_delta);
        std::cout << "pair=(" << f << ',' << d << ") delta_max=" << rep.delta_max
                  << " f_ge_d=" << (rep.f_ge_d ? "yes" : "no")
                  << " min_gap_count=" << rep.min_gap_count << '\n';
        if (rep.failure) {
            const ValidPairWitness& w = *rep.failure;
            std::cout << "FAIL at delta=" << w.delta << " gap (" << w.lo.y << '/' << w.lo.x
                      << ", " << w.hi.y << '/' << w.hi.x << ") count=" << w.count << '\n';
        }
        std::cout << (rep.pass() ? "PASS" : "FAIL") << '\n';
        return rep.pass() ? kExitOk : kExitVerifyFail;
    }

    if (ver->parsed()) {
        const RootedTree tree = load_tree(ver_tree);
        std::ifstream cin_(ver_coords);
        if (!cin_) throw UsageError("cannot open coords file: " + ver_coords);
        const Drawing dr = drawing_from_coords(tree, read_coords_tsv(cin_, tree.vertex_count()));
        VerifyMode mode;
        if (ver_mode == "exhaustive") mode = VerifyMode::exhaustive;
        else if (ver_mode == "leaf") mode = VerifyMode::leaf_reduced;
        else throw UsageError("unknown mode: " + ver_mode);
        const VerificationReport rep = verify_monotone_drawing(tree, dr, mode);
        if (rep.ok()) {
            std::cout << "monotone: " << rep.pairs_checked << " pairs checked\n";
            return kExitOk;
        }
        std::cout << "NOT monotone: first witness pair (" << rep.failures.front().u << ", "
                  << rep.failures.front().w << "); " << rep.failures.size() << " failing pair(s)\n";
        return kExitVerifyFail;
    }

    if (ben->parsed()) {
        auto [f, d] = parse_pair(ben_pair);
        std::vector<i64> sizes;
        std::vector<std::string> algos;
        {
            std::istringstream ss(ben_sizes);
            std::string tok;
            while (std::getline(ss, tok, ',')) sizes.push_back(std::stoll(tok));
            std::istringstream sa(ben_algos);
            while (std::getline(sa, tok, ',')) algos.push_back(tok);
        }
        const std::vector<BenchRecord> records = run_bench(sizes, algos, f, d, ben_seed);
        for (const BenchRecord& r : records)
            if (!r.bound_ok) throw std::logic_error("bench: grid bound violated");
        Output out(ben_out);
        if (ben_format == "json") write_bench_json(out.stream(), records);
        else write_bench_csv(out.stream(), records);
        return kExitOk;
    }

    if (svg->parsed()) {
        const RootedTree tree = load_tree(svg_tree);
        std::ifstream cin_(svg_coords);
        if (!cin_) throw UsageError("cannot open coords file: " + svg_coords);
        const Drawing dr = drawing_from_coords(tree, read_coords_tsv(cin_, tree.vertex_count()));
        Output out(svg_out);
        write_svg(out.stream(), tree, dr, svg_scale);
        return kExitOk;
    }

    throw UsageError("no subcommand");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const TreeFormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
