// Benchmark: serial dense reference scan vs the sparse kernel, serial and
// OpenMP-parallel. All three must agree on every prediction.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "docsim/cbr.hpp"
#include "support/brute_force.hpp"
#include "support/fixtures.hpp"

using namespace docsim;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int n_cases = argc > 1 ? std::atoi(argv[1]) : 2000;
    const int n_queries = argc > 2 ? std::atoi(argv[2]) : 200;
    const int dim = argc > 3 ? std::atoi(argv[3]) : 500;

    std::mt19937_64 rng(1);
    std::vector<Case> cases;
    for (int i = 0; i < n_cases; ++i)
        cases.push_back(Case{"c" + std::to_string(i),
                             test::random_sparse_vector(rng, dim, 0.05),
                             i % 3 ? "a" : "b"});
    const CaseBase base = make_case_base(std::move(cases), dim);
    std::vector<FeatureVector> queries;
    for (int i = 0; i < n_queries; ++i)
        queries.push_back(test::random_sparse_vector(rng, dim, 0.05));

    int threads = 1;
#ifdef _OPENMP
#pragma omp parallel
    {
#pragma omp single
        threads = omp_get_num_threads();
    }
#endif
    std::printf("cases=%d queries=%d dim=%d threads=%d\n", n_cases, n_queries, dim,
                threads);

    for (Metric m : {Metric::Euclidean, Metric::Cosine, Metric::TsSs}) {
        auto t0 = Clock::now();
        std::vector<std::string> dense_ref(queries.size());
        for (std::size_t i = 0; i < queries.size(); ++i)
            dense_ref[i] = base.cases[ref::retrieve_index(queries[i], base, m)].label;
        const double t_dense = ms_since(t0);

        t0 = Clock::now();
        const auto serial = classify_batch(queries, base, m, 1);
        const double t_serial = ms_since(t0);

        t0 = Clock::now();
        const auto parallel = classify_batch(queries, base, m, 0);
        const double t_parallel = ms_since(t0);

        const bool agree = serial == dense_ref && parallel == dense_ref;
        std::printf("%-4s dense-ref %8.1f ms | sparse serial %8.1f ms | omp %8.1f ms | "
                    "speedup %.2fx | %s\n",
                    to_string(m).c_str(), t_dense, t_serial, t_parallel,
                    t_serial / t_parallel, agree ? "agree" : "MISMATCH");
        if (!agree) return 1;
    }
    return 0;
}
