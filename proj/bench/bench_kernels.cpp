// Timing comparison between the OpenMP kernels and their serial references.
// Build target: kernel_bench. Thread count honors NR_THREADS.

#include <chrono>
#include <cstdio>
#include <string>

#include "tenrange/dense.hpp"
#include "tenrange/generate.hpp"
#include "tenrange/numrange.hpp"
#include "tenrange/tensor.hpp"

namespace {

using namespace tenrange;
using clock_type = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& fn, int reps) {
    const auto t0 = clock_type::now();
    for (int r = 0; r < reps; ++r) fn();
    const auto t1 = clock_type::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-34s %10.2f ms %10.2f ms %8.2fx\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

}  // namespace

int main() {
    std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");
    std::printf("threads: %d\n", kernels::max_threads());

    generate::Rng rng(42);

    {
        const std::size_t n = 512;
        DenseMatrix a(n, n), b(n, n);
        for (scalar& v : a.entries) v = rng.complex_uniform();
        for (scalar& v : b.entries) v = rng.complex_uniform();
        const double ts = time_ms([&] { kernels::matmul_serial(a, b); }, 3);
        const double tp = time_ms([&] { kernels::matmul(a, b); }, 3);
        report("matmul 512x512 complex", ts, tp);
    }

    {
        Tensor a = generate::random_tensor({24, 24, 24}, 1, rng);
        Tensor b = generate::random_tensor({24, 24, 24}, 2, rng);
        const double ts = time_ms([&] { reference::einstein_product(a, b, 2); }, 1);
        const double tp = time_ms([&] { einstein_product(a, b, 2); }, 1);
        report("einstein product 24^3 *_2 24^3", ts, tp);
    }

    {
        Tensor a = generate::random_square({4, 4}, rng);
        const double ts = time_ms([&] { numrange::boundary_serial(a, 500); }, 2);
        const double tp = time_ms([&] { numrange::boundary(a, 500); }, 2);
        report("boundary 16x16 unfold, 500 angles", ts, tp);
    }

    return 0;
}
