#include "mdq/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "mdq/quad.hpp"

namespace mdq {

namespace {
const cplx I{0.0, 1.0};
constexpr double kEps = 1e-300;
}  // namespace

cplx phi_product(const RegimeParams& p, int n, cplx t) {
    if (n < 1) throw std::invalid_argument("phi_product: n >= 1");
    cplx prod{1.0, 0.0};
    for (int m = 1; m <= n - 1; ++m) {
        cplx arg = t + 2.0 * double(m) * p.omega_pp;
        // Keep the omega'/omega pair together: on the diagonal the two factors
        // are conjugates and their product stays (numerically) nonnegative.
        prod *= std::sin(M_PI * arg / (2.0 * p.omega_p)) * std::sin(M_PI * arg / (2.0 * p.omega));
    }
    return prod;
}

cplx phi_gamma(const QDilog& qd, cplx a, cplx t) {
    const RegimeParams& p = qd.params();
    return std::exp(2.0 * I * M_PI * (a + p.omega_pp)) *
           std::exp(-2.0 * I * M_PI * (a - p.omega_pp) * t) *
           qd.gamma(t - p.omega_pp + 2.0 * a) / qd.gamma(t + p.omega_pp);
}

cplx variant_ratio_constant(const RegimeParams& p, int n) {
    if (n < 1) throw std::invalid_argument("variant_ratio_constant: n >= 1");
    cplx c = std::pow(cplx(-4.0, 0.0), double(n - 1));
    c *= std::exp(2.0 * I * M_PI * double(n + 1) * p.omega_pp);
    c *= std::exp(2.0 * I * M_PI * double(n) * double(n - 1) * p.omega_pp * p.omega_pp);
    return c;
}

cplx Weight::phi(cplx t) const {
    if (variant == WeightVariant::Product) {
        if (!spin.n) throw std::logic_error("product weight needs a discrete spin (a = n*omega'')");
        return phi_product(params, *spin.n, t);
    }
    if (!qd) throw std::logic_error("gamma weight needs a QDilog evaluator");
    return phi_gamma(*qd, spin.a, t);
}

cplx Weight::kernel_S(cplx w, cplx z) const {
    return std::exp(I * M_PI * (z * z - w * w)) * phi(w - z);
}

Weight product_weight(const RegimeParams& p, int n, SpinConvention conv) {
    Weight wt;
    wt.variant = WeightVariant::Product;
    wt.params = p;
    wt.spin = discrete_spin(p, n, conv);
    return wt;
}

Weight gamma_weight(std::shared_ptr<const QDilog> qd, const Spin& spin) {
    if (!qd) throw std::invalid_argument("gamma_weight: null evaluator");
    Weight wt;
    wt.variant = WeightVariant::Gamma;
    wt.params = qd->params();
    wt.spin = spin;
    wt.qd = std::move(qd);
    return wt;
}

double peq1_residual(const Weight& wt, cplx t) {
    const RegimeParams& p = wt.params;
    cplx lhs = wt.phi(t + 2.0 * p.omega_p) / wt.phi(t);
    cplx rhs = std::sin(M_PI * (t + 2.0 * wt.spin.a) / (2.0 * p.omega)) /
               std::sin(M_PI * (t + 2.0 * p.omega_pp) / (2.0 * p.omega));
    return std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs) + kEps);
}

double peq2_residual(const Weight& wt, cplx t) {
    const RegimeParams& p = wt.params;
    cplx lhs = wt.phi(t + 2.0 * p.omega) / wt.phi(t);
    cplx rhs = std::sin(M_PI * (t + 2.0 * wt.spin.a) / (2.0 * p.omega_p)) /
               std::sin(M_PI * (t + 2.0 * p.omega_pp) / (2.0 * p.omega_p));
    return std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs) + kEps);
}

double k_identity_residual(const Weight& wt, cplx w, cplx z) {
    const RegimeParams& p = wt.params;
    cplx L = p.q * wt.kernel_S(w, z - 2.0 * p.omega_p) * std::exp(-I * M_PI * z / p.omega);
    cplx R = (1.0 / p.q) * wt.kernel_S(w + 2.0 * p.omega_p, z) * std::exp(-I * M_PI * w / p.omega);
    return std::abs(L - R) / (std::abs(L) + std::abs(R) + kEps);
}

double k_identity_dual_residual(const Weight& wt, cplx w, cplx z) {
    const RegimeParams& p = wt.params;
    cplx L = p.q_tilde * wt.kernel_S(w, z - 2.0 * p.omega) * std::exp(-I * M_PI * z / p.omega_p);
    cplx R =
        (1.0 / p.q_tilde) * wt.kernel_S(w + 2.0 * p.omega, z) * std::exp(-I * M_PI * w / p.omega_p);
    return std::abs(L - R) / (std::abs(L) + std::abs(R) + kEps);
}

double e_identity_residual(const Weight& wt, cplx w, cplx z) {
    const RegimeParams& p = wt.params;
    cplx S0 = wt.kernel_S(w, z);
    cplx T1 = wt.kernel_S(w, z - 2.0 * p.omega_p);
    cplx T2 = wt.spin.Z * std::exp(I * M_PI * z / p.omega) * S0;
    cplx T3 = wt.kernel_S(w + 2.0 * p.omega_p, z);
    cplx T4 = (1.0 / wt.spin.Z) * std::exp(I * M_PI * w / p.omega) * S0;
    // Normalize by the term magnitudes: at n = 1 both sides vanish identically
    // and a lhs/rhs normalization would be 0/0.
    return std::abs(T1 + T2 - T3 - T4) /
           (std::abs(T1) + std::abs(T2) + std::abs(T3) + std::abs(T4) + kEps);
}

double e_identity_dual_residual(const Weight& wt, cplx w, cplx z) {
    const RegimeParams& p = wt.params;
    cplx S0 = wt.kernel_S(w, z);
    cplx T1 = wt.kernel_S(w, z - 2.0 * p.omega);
    cplx T2 = wt.spin.Z_tilde * std::exp(I * M_PI * z / p.omega_p) * S0;
    cplx T3 = wt.kernel_S(w + 2.0 * p.omega, z);
    cplx T4 = (1.0 / wt.spin.Z_tilde) * std::exp(I * M_PI * w / p.omega_p) * S0;
    return std::abs(T1 + T2 - T3 - T4) /
           (std::abs(T1) + std::abs(T2) + std::abs(T3) + std::abs(T4) + kEps);
}

// ---- diagonal zero structure ------------------------------------------------

int DiagonalProfile::band(double y) const {
    return static_cast<int>(std::upper_bound(zero_heights.begin(), zero_heights.end(), y) -
                            zero_heights.begin());
}

DiagonalProfile diagonal_profile(const Weight& wt, double y_lo, double y_hi, double locate_tol) {
    if (!wt.spin.n)
        throw std::invalid_argument("diagonal_profile: needs a discrete spin (a = n*omega'')");
    const RegimeParams& p = wt.params;
    const int n = *wt.spin.n;

    std::vector<double> cand;
    auto add_line = [&](double y) {
        if (y > y_lo + 1e-12 && y < y_hi - 1e-12) cand.push_back(y);
    };
    for (int m = 1; m <= n - 1; ++m) {
        double base = double(m) * p.mu;
        if (p.regime == Regime::II) {
            // omega, omega' have nonzero real parts: only the principal zero.
            add_line(base);
        } else {
            // Pure imaginary half-periods: the sine arguments are real along
            // the diagonal, so every integer translate lands a zero too.
            for (double s : {p.omega.imag(), p.omega_p.imag()}) {
                int k_lo = static_cast<int>(std::floor((base - y_hi) / s)) - 1;
                int k_hi = static_cast<int>(std::ceil((base - y_lo) / s)) + 1;
                for (int k = k_lo; k <= k_hi; ++k) add_line(base - double(k) * s);
            }
        }
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-9; }),
               cand.end());

    DiagonalProfile prof;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        double delta = 0.05 * p.mu;
        if (i > 0) delta = std::min(delta, 0.45 * (cand[i] - cand[i - 1]));
        if (i + 1 < cand.size()) delta = std::min(delta, 0.45 * (cand[i + 1] - cand[i]));
        auto absphi = [&](double y) { return std::abs(wt.phi(cplx(0.0, -2.0 * y))); };
        double lo = cand[i] - delta, hi = cand[i] + delta;
        double y_min = golden_min(absphi, lo, hi, locate_tol);
        double edge = std::max(absphi(lo), absphi(hi));
        if (absphi(y_min) < 1e-6 * (edge + kEps)) prof.zero_heights.push_back(y_min);
    }
    return prof;
}

PositivityScan phi_positivity_scan(const Weight& wt, int samples, double s_lo, double s_hi) {
    if (samples < 2) throw std::invalid_argument("phi_positivity_scan: need >= 2 samples");
    PositivityScan out;
    out.min_value = std::numeric_limits<double>::infinity();
    out.samples.reserve(samples);
    for (int k = 0; k < samples; ++k) {
        double s = s_lo + (s_hi - s_lo) * double(k) / double(samples - 1);
        cplx v = wt.phi(cplx(0.0, s));
        PhiSample smp;
        smp.s = s;
        smp.value = v.real();
        smp.imag_leak = std::abs(v.imag()) / (std::abs(v) + kEps);
        if (smp.value < out.min_value) {
            out.min_value = smp.value;
            out.argmin = smp;
        }
        out.max_imag_leak = std::max(out.max_imag_leak, smp.imag_leak);
        out.samples.push_back(smp);
    }
    return out;
}

}  // namespace mdq
