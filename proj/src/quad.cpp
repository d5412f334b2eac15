#include "mdq/quad.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace mdq {

namespace {

template <typename T>
T pairwise_range(const T* v, std::size_t n) {
    if (n == 0) return T{};
    if (n <= 8) {
        T s = v[0];
        for (std::size_t i = 1; i < n; ++i) s += v[i];
        return s;
    }
    std::size_t h = n / 2;
    return pairwise_range(v, h) + pairwise_range(v + h, n - h);
}

}  // namespace

double pairwise_sum(const std::vector<double>& v) { return pairwise_range(v.data(), v.size()); }
cplx pairwise_sum(const std::vector<cplx>& v) { return pairwise_range(v.data(), v.size()); }

const GaussLegendre& gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    static std::map<int, GaussLegendre> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    GaussLegendre rule;
    rule.x.resize(n);
    rule.w.resize(n);
    // Roots of P_n by Newton from the Chebyshev-like initial guess; the
    // recurrence gives P_n and P_n' together.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double p1 = 0, dp = 0;
        for (int iter = 0; iter < 100; ++iter) {
            p1 = 1.0;
            double p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * x * p2 - j * p3) / (j + 1.0);
            }
            dp = n * (x * p1 - p2) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.x[i] = -x;
        rule.x[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.w[i] = w;
        rule.w[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.x[n / 2] = 0.0;  // kill the -0.0 from the loop
    auto [pos, inserted] = cache.emplace(n, std::move(rule));
    (void)inserted;
    return pos->second;
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> out;
    if (n <= 0) return out;
    out.resize(n);
    if (n == 1) {
        out[0] = a;
        return out;
    }
    for (int i = 0; i < n; ++i) out[i] = a + (b - a) * i / (n - 1);
    return out;
}

double golden_min(const std::function<double(double)>& f, double a, double b, double xtol) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > xtol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace mdq
