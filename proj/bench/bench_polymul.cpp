// Compares the serial reference polynomial product against the OpenMP
// kernel on Chebyshev-sized operands.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "torsionpoly/intpoly.hpp"

using namespace torsionpoly;
using Clock = std::chrono::steady_clock;

namespace {

std::vector<Int> random_coeffs(std::mt19937_64& rng, int n, int bits) {
    std::vector<Int> c(static_cast<std::size_t>(n));
    for (auto& ci : c) {
        Int v = 0;
        for (int b = 0; b < bits; b += 32) v = (v << 32) + static_cast<unsigned long>(rng() & 0xffffffffu);
        ci = (rng() & 1) ? v : -v;
    }
    return c;
}

double time_ms(const std::function<void()>& fn, int reps) {
    const auto t0 = Clock::now();
    for (int i = 0; i < reps; ++i) fn();
    const auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
    std::mt19937_64 rng(42);
    std::printf("%8s %8s %12s %12s %8s\n", "size", "bits", "serial(ms)", "openmp(ms)", "speedup");
    for (int size : {64, 256, 1024, 4096}) {
        for (int bits : {64, 512, 2048}) {
            const auto a = random_coeffs(rng, size, bits);
            const auto b = random_coeffs(rng, size, bits);
            const int reps = size <= 256 ? 20 : 3;

            std::vector<Int> rs, rp;
            const double ts = time_ms([&] { rs = detail::mul_serial(a, b); }, reps);
            const double tp = time_ms([&] { rp = detail::mul_parallel(a, b); }, reps);
            if (rs != rp) {
                std::fprintf(stderr, "MISMATCH at size=%d bits=%d\n", size, bits);
                return 1;
            }
            std::printf("%8d %8d %12.3f %12.3f %7.2fx\n", size, bits, ts, tp, ts / tp);
        }
    }
    return 0;
}
