#include "montree/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "montree/draw.hpp"
#include "montree/generate.hpp"

namespace montree {

int env_worker_count() {
    const char* env = std::getenv("MONTREE_WORKERS");
    if (!env || !*env) return 1;
    const long v = std::strtol(env, nullptr, 10);
    if (v < 1) return 1;
    return v > 64 ? 64 : static_cast<int>(v);
}

namespace {

BenchRecord run_one(const std::string& algo, i64 n, i64 f, i64 d, u64 seed) {
    BenchRecord rec;
    rec.algo = algo;
    rec.n = n;
    rec.f = f;
    rec.d = d;
    const RootedTree tree = generate({TreeKind::random_recursive, n, seed});
    const auto t0 = std::chrono::steady_clock::now();
    Drawing dr;
    if (algo == "optimal") {
        OptimalResult res = optimal_draw(tree, f, d);
        dr = std::move(res.drawing);
        rec.bound_num = res.stats.bound_num;
        rec.bound_den = res.stats.bound_den;
    } else if (algo == "path") {
        PathDecomposition decomp = ldpd(tree);
        dr = path_draw(tree, decomp, baseline_vectors(static_cast<i64>(decomp.size())));
    } else if (algo == "baseline") {
        dr = tree_monotone_draw(tree, baseline_vectors(n - 1));
    } else {
        throw std::invalid_argument("bench: unknown algorithm " + algo);
    }
    const auto t1 = std::chrono::steady_clock::now();
    rec.seconds = std::chrono::duration<double>(t1 - t0).count();
    rec.width = dr.width;
    rec.height = dr.height;
    if (rec.bound_den > 0)
        rec.bound_ok = rec.width * rec.bound_den <= rec.bound_num &&
                       rec.height * rec.bound_den <= rec.bound_num;
    return rec;
}

}  // namespace

std::vector<BenchRecord> run_bench(const std::vector<i64>& sizes,
                                   const std::vector<std::string>& algos, i64 f, i64 d, u64 seed,
                                   int workers) {
    if (workers <= 0) workers = env_worker_count();
    struct Cell {
        std::string algo;
        i64 n;
        u64 seed;
    };
    std::vector<Cell> cells;
    for (size_t i = 0; i < sizes.size(); ++i)
        for (const std::string& algo : algos) cells.push_back({algo, sizes[i], seed + i});
    std::vector<BenchRecord> records(cells.size());
    if (workers == 1 || cells.size() <= 1) {
        for (size_t i = 0; i < cells.size(); ++i)
            records[i] = run_one(cells[i].algo, cells[i].n, f, d, cells[i].seed);
        return records;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1))
            records[i] = run_one(cells[i].algo, cells[i].n, f, d, cells[i].seed);
    };
    std::vector<std::thread> pool;
    const size_t count = std::min(static_cast<size_t>(workers), cells.size());
    for (size_t i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return records;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << "algo,n,f,d,width,height,bound,bound_ok,seconds\n";
    for (const BenchRecord& r : records) {
        out << r.algo << ',' << r.n << ',' << r.f << ',' << r.d << ',' << r.width << ','
            << r.height << ',';
        if (r.bound_den > 0)
            out << (r.bound_num / r.bound_den);
        out << ',' << (r.bound_ok ? 1 : 0) << ',' << r.seconds << '\n';
    }
}

void write_bench_json(std::ostream& out, const std::vector<BenchRecord>& records) {
    nlohmann::json j;
    j["schema"] = 1;
    auto& arr = j["records"] = nlohmann::json::array();
    for (const BenchRecord& r : records) {
        nlohmann::json rec{{"algo", r.algo},     {"n", r.n},
                           {"f", r.f},           {"d", r.d},
                           {"width", r.width},   {"height", r.height},
                           {"bound_ok", r.bound_ok}, {"seconds", r.seconds}};
        if (r.bound_den > 0) {
            rec["bound_num"] = r.bound_num;
            rec["bound_den"] = r.bound_den;
        }
        arr.push_back(std::move(rec));
    }
    out << j.dump(2) << '\n';
}

}  // namespace montree
