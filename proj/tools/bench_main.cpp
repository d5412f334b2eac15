// Timing harness for the quadrature hot loop: OpenMP fill vs the serial
// reference.  The two paths share one summation tree, so the results must
// agree bitwise; this also re-checks that invariant on a large grid.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mdq/kernel.hpp"
#include "mdq/params.hpp"
#include "mdq/rep.hpp"

using mdq::cplx;

namespace {

double wall() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

template <typename F>
double time_best(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        double t0 = wall();
        f();
        best = std::min(best, wall() - t0);
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    int reps = (argc > 1) ? std::atoi(argv[1]) : 5;
    int nx = (argc > 2) ? std::atoi(argv[2]) : 256;
    int ny = (argc > 3) ? std::atoi(argv[3]) : 192;

    mdq::RegimeParams p = mdq::params_from_tau(std::polar(1.0, M_PI / 3.0), mdq::Regime::II);
    mdq::Weight wt = mdq::product_weight(p, 3);
    mdq::Band band;
    band.X = 5.0;
    band.y_lo = p.mu;
    band.y_hi = 2.0 * p.mu;
    band.nx = nx;
    band.ny = ny;

    const double sigma = 2.0;
    const cplx beta0 = 2.0 * sigma * cplx{0.0, 1.5 * p.mu};
    mdq::GEPFunction f(sigma, beta0);
    mdq::GEPFunction g = mdq::GEPFunction(sigma, beta0, 0, cplx{0.7, 0.0}) +
                         mdq::GEPFunction(sigma, beta0, 1, cplx{0.4, 0.0});

#ifdef _OPENMP
    std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
    std::printf("openmp: disabled at build time\n");
#endif
    std::printf("grid: %d x %d nodes, %d reps (best-of)\n\n", nx, ny, reps);

    cplx vp{}, vs{};
    double tp = time_best(reps, [&] { vp = mdq::inner_product(wt, band, f, g); });
    double ts = time_best(reps, [&] { vs = mdq::inner_product_serial(wt, band, f, g); });

    std::printf("inner_product  parallel: %8.2f ms   (%.6g, %.6g)\n", tp * 1e3, vp.real(),
                vp.imag());
    std::printf("inner_product  serial:   %8.2f ms   (%.6g, %.6g)\n", ts * 1e3, vs.real(),
                vs.imag());
    std::printf("speedup: %.2fx\n", ts / tp);

    bool same = std::memcmp(&vp, &vs, sizeof vp) == 0;
    std::printf("bitwise equal: %s\n", same ? "yes" : "NO");

    std::vector<mdq::GEPFunction> basis;
    for (int k = 0; k < 8; ++k) basis.emplace_back(sigma, beta0, k);
    mdq::Band gband = band;
    gband.nx = 96;
    gband.ny = 48;
    double tg = time_best(std::max(1, reps / 2),
                          [&] { (void)mdq::gram_matrix(wt, gband, basis); });
    std::printf("\ngram 8x8 (96x48 nodes): %8.2f ms\n", tg * 1e3);

    return same ? 0 : 1;
}
