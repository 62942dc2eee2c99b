// Compares the hypergraph construction kernels on consecutive rulers:
// the O(n^4) tuple scan, the serial O(n^3) distance-map version and its
// OpenMP variant. The serial builders double as the reference the test
// suite checks the parallel kernel against.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "gsr/hypergraph.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename F>
double time_ms(F&& f, std::size_t& edge_count) {
    const auto start = std::chrono::steady_clock::now();
    const gsr::Hypergraph h = f();
    edge_count = h.edge_count();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

} // namespace

int main(int argc, char** argv) {
    std::size_t max_n = 220;
    std::size_t naive_cap = 90; // the tuple scan gets slow well before the others
    if (argc > 1) max_n = std::strtoull(argv[1], nullptr, 10);
    if (argc > 2) naive_cap = std::strtoull(argv[2], nullptr, 10);

#ifdef _OPENMP
    std::printf("# threads: %d\n", omp_get_max_threads());
#else
    std::printf("# threads: 1 (OpenMP disabled)\n");
#endif
    std::printf("%8s %10s %12s %14s %14s %10s\n", "marks", "edges", "naive-ms", "improved-ms",
                "parallel-ms", "speedup");

    for (std::size_t n = 40; n <= max_n; n += 30) {
        const gsr::Ruler ruler = gsr::consecutive_ruler(n);
        std::size_t edges_naive = 0, edges_serial = 0, edges_parallel = 0;

        double naive_ms = -1.0;
        if (n <= naive_cap) {
            naive_ms = time_ms([&] { return gsr::build_naive(ruler); }, edges_naive);
        }
        const double serial_ms = time_ms([&] { return gsr::build_improved(ruler); }, edges_serial);
        const double parallel_ms =
            time_ms([&] { return gsr::build_improved_parallel(ruler); }, edges_parallel);

        if (edges_serial != edges_parallel || (naive_ms >= 0 && edges_naive != edges_serial)) {
            std::printf("edge-set mismatch at n=%zu\n", n);
            return 1;
        }
        if (naive_ms >= 0) {
            std::printf("%8zu %10zu %12.2f %14.2f %14.2f %9.2fx\n", n, edges_serial, naive_ms,
                        serial_ms, parallel_ms, serial_ms / parallel_ms);
        } else {
            std::printf("%8zu %10zu %12s %14.2f %14.2f %9.2fx\n", n, edges_serial, "-", serial_ms,
                        parallel_ms, serial_ms / parallel_ms);
        }
    }
    return 0;
}
