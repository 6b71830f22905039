// Benchmark: serial reference kernels vs the OpenMP kernels for the
// inversion histogram and the xi summation.  Verifies that both kernels
// agree before reporting timings.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>

#include "tabinv/enumerate.hpp"
#include "tabinv/genfun.hpp"

using namespace tabinv;

namespace {

template <typename F>
double time_seconds(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void bench_case(const Shape& shape, const Content& content) {
    std::string name;
    for (std::size_t i = 0; i < shape.parts.size(); ++i)
        name += (i ? "," : "") + std::to_string(shape.parts[i]);

    InversionHistogram hs, hp;
    double ts_hist = time_seconds([&] { hs = histogram(shape, content, 1 << 20); });
    double tp_hist = time_seconds([&] { hp = histogram_parallel(shape, content, 1 << 20); });
    if (!(hs == hp)) {
        std::fprintf(stderr, "histogram kernels disagree on %s\n", name.c_str());
        std::exit(1);
    }

    QPolynomial xs, xp;
    double ts_xi = time_seconds([&] { xs = xi_by_sum(shape, content); });
    double tp_xi = time_seconds([&] { xp = xi_by_sum_parallel(shape, content); });
    if (!(xs == xp)) {
        std::fprintf(stderr, "xi kernels disagree on %s\n", name.c_str());
        std::exit(1);
    }

    std::printf("%-10s hist serial %8.3fs  parallel %8.3fs  (x%.2f)   "
                "xi serial %8.3fs  parallel %8.3fs  (x%.2f)\n",
                name.c_str(), ts_hist, tp_hist, ts_hist / std::max(tp_hist, 1e-9), ts_xi,
                tp_xi, ts_xi / std::max(tp_xi, 1e-9));
}

}  // namespace

int main(int argc, char** argv) {
    std::printf("threads: %d\n", omp_get_max_threads());
    if (argc > 1) {
        // bench a user-supplied shape with standard content
        Shape shape = parse_shape(argv[1]);
        bench_case(shape, Content::standard(shape.size()));
        return 0;
    }
    bench_case(Shape({4, 4}), Content::standard(8));
    bench_case(Shape({4, 3, 2}), Content::standard(9));
    bench_case(Shape({4, 4, 2}), Content::standard(10));
    bench_case(Shape({3, 3, 3, 2}), Content::standard(11));
    return 0;
}
