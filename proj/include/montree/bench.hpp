#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "montree/vec.hpp"

namespace montree {

struct BenchRecord {
    std::string algo;
    i64 n = 0;
    i64 f = 0, d = 0;
    i64 width = 0, height = 0;
    // Theoretical extent bound (f+1)d*n/((f+1)-d) for the optimal algorithm;
    // 0 for algorithms without one. bound_ok is the inline inequality check.
    i64 bound_num = 0, bound_den = 0;
    bool bound_ok = true;
    double seconds = 0.0;
};

// Runs every (size, algo) cell on a deterministic random-recursive tree and
// records extents, bound checks and wall time. `workers` <= 0 reads the
// MONTREE_WORKERS environment variable (default 1); instances are independent
// and pure.
std::vector<BenchRecord> run_bench(const std::vector<i64>& sizes,
                                   const std::vector<std::string>& algos, i64 f, i64 d, u64 seed,
                                   int workers = 0);

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);
void write_bench_json(std::ostream& out, const std::vector<BenchRecord>& records);

int env_worker_count();  // MONTREE_WORKERS, clamped to [1, 64]; 1 if unset

}  // namespace montree
