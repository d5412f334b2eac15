#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>
#include <vector>

#include "doctest.h"
#include "mdq/kernel.hpp"
#include "mdq/quad.hpp"

using mdq::cplx;
using namespace std::complex_literals;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / (std::abs(b) + 1e-300); }

mdq::RegimeParams circle(double theta) {
    return mdq::params_from_tau(std::polar(1.0, theta), mdq::Regime::II);
}

std::vector<mdq::Weight> probe_weights(const mdq::RegimeParams& p) {
    std::vector<mdq::Weight> out;
    for (int n = 1; n <= 3; ++n) out.push_back(mdq::product_weight(p, n));
    auto qd = std::make_shared<mdq::QDilog>(p);
    out.push_back(mdq::gamma_weight(qd, mdq::make_spin(p, 1.5 * p.omega_pp,
                                                       mdq::SpinConvention::Minus)));
    out.push_back(mdq::gamma_weight(qd, mdq::discrete_spin(p, 2, mdq::SpinConvention::Minus)));
    return out;
}

}  // namespace

TEST_CASE("kernel_S is the phase-dressed weight") {
    mdq::Weight wt = mdq::product_weight(circle(M_PI / 3), 3);
    for (cplx w : {cplx{0.4, 0.1}, cplx{-0.9, -0.2}}) {
        for (cplx z : {cplx{0.2, -0.3}, cplx{1.1, 0.25}}) {
            cplx expect = std::exp(1.0i * M_PI * (z * z - w * w)) * wt.phi(w - z);
            CHECK(rel(wt.kernel_S(w, z), expect) < 1e-14);
        }
    }
}

TEST_CASE("weight shift equations hold for every realization") {
    for (double theta : {M_PI / 3, M_PI / 2}) {
        for (const mdq::Weight& wt : probe_weights(circle(theta))) {
            for (double x : mdq::linspace(-1.1, 1.2, 12)) {
                cplx t{x, 0.04};
                CHECK(mdq::peq1_residual(wt, t) < 1e-10);
                CHECK(mdq::peq2_residual(wt, t) < 1e-10);
            }
        }
    }
}

TEST_CASE("transport identities and their duals") {
    for (double theta : {M_PI / 3, M_PI / 2}) {
        for (const mdq::Weight& wt : probe_weights(circle(theta))) {
            double worst = 0;
            for (double xw : mdq::linspace(-1.2, 1.1, 8)) {
                for (double xz : mdq::linspace(-1.0, 1.3, 8)) {
                    cplx w{xw, 0.05}, z{xz, -0.03};
                    worst = std::max({worst, mdq::k_identity_residual(wt, w, z),
                                      mdq::e_identity_residual(wt, w, z),
                                      mdq::k_identity_dual_residual(wt, w, z),
                                      mdq::e_identity_dual_residual(wt, w, z)});
                }
            }
            CHECK(worst < 1e-8);
        }
    }
}

TEST_CASE("the two realizations differ by the predicted constant") {
    for (double theta : {M_PI / 3, M_PI / 2}) {
        mdq::RegimeParams p = circle(theta);
        auto qd = std::make_shared<mdq::QDilog>(p);
        for (int n = 2; n <= 4; ++n) {
            mdq::Weight prod = mdq::product_weight(p, n);
            mdq::Weight gam =
                mdq::gamma_weight(qd, mdq::discrete_spin(p, n, mdq::SpinConvention::Minus));
            cplx expect = mdq::variant_ratio_constant(p, n);
            for (cplx t : {cplx{0.3, 0.1}, cplx{-0.7, -0.2}, cplx{1.2, 0.35}}) {
                CHECK(rel(gam.phi(t) / prod.phi(t), expect) < 1e-9);
            }
        }
    }
    // Frozen spot value: n = 2 on tau = i gives -4 e^{-6 pi mu}, purely real.
    cplx c2 = mdq::variant_ratio_constant(circle(M_PI / 2), 2);
    CHECK(std::abs(c2.real() - (-6.5088064904290037e-6)) < 1e-17);
    CHECK(std::abs(c2.imag()) < 1e-19);
}

TEST_CASE("n = 1 weight is identically one") {
    mdq::Weight wt = mdq::product_weight(circle(M_PI / 3), 1);
    for (cplx t : {cplx{0.0, 0.0}, cplx{0.7, -1.3}, cplx{-2.1, 0.4}}) {
        CHECK(std::abs(wt.phi(t) - cplx{1.0, 0.0}) == 0.0);
    }
}

TEST_CASE("diagonal zero lines split the strip, unit-modulus case") {
    mdq::RegimeParams p = circle(M_PI / 3);
    mdq::Weight wt = mdq::product_weight(p, 3);
    mdq::DiagonalProfile prof = mdq::diagonal_profile(wt, 0.1 * p.mu, 3.5 * p.mu);

    REQUIRE(prof.zero_heights.size() == 2);
    CHECK(std::abs(prof.zero_heights[0] - p.mu) < 1e-8);
    CHECK(std::abs(prof.zero_heights[1] - 2 * p.mu) < 1e-8);
    CHECK(prof.bands() == 3);
    CHECK(prof.band(0.5 * p.mu) == 0);
    CHECK(prof.band(1.5 * p.mu) == 1);
    CHECK(prof.band(2.5 * p.mu) == 2);
}

TEST_CASE("diagonal zero lines on the real ray pick up half-period translates") {
    mdq::RegimeParams p = mdq::params_from_tau(cplx{2.0, 0.0}, mdq::Regime::I);
    mdq::Weight wt = mdq::product_weight(p, 2);
    mdq::DiagonalProfile prof = mdq::diagonal_profile(wt, 0.1, 2.0);

    // Phi_2(-2iy) = sin(sqrt2 pi (mu - y)) sin(2 sqrt2 pi (mu - y)):
    // zeros at y = mu - k/(2 sqrt2) for every integer k.
    std::vector<double> expect;
    for (int k = -2; k <= 2; ++k) expect.push_back(p.mu - k / (2.0 * std::sqrt(2.0)));
    std::sort(expect.begin(), expect.end());
    REQUIRE(prof.zero_heights.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i)
        CHECK(std::abs(prof.zero_heights[i] - expect[i]) < 1e-8);
}

TEST_CASE("imaginary-axis scan: nonnegative on the circle, signed on the ray") {
    mdq::RegimeParams p2 = circle(M_PI / 3);
    for (int n = 2; n <= 4; ++n) {
        mdq::Weight wt = mdq::product_weight(p2, n);
        double span = 2.0 * (n + 0.5) * p2.mu;
        mdq::PositivityScan scan = mdq::phi_positivity_scan(wt, 1000, -span, span);
        CHECK(scan.samples.size() == 1000);
        CHECK(scan.min_value >= -1e-12);
        CHECK(scan.max_imag_leak < 1e-10);
    }

    mdq::RegimeParams p1 = mdq::params_from_tau(cplx{2.0, 0.0}, mdq::Regime::I);
    mdq::Weight wt1 = mdq::product_weight(p1, 2);
    mdq::PositivityScan scan1 = mdq::phi_positivity_scan(wt1, 1000, -5 * p1.mu, 5 * p1.mu);
    CHECK(scan1.min_value < -1e-3);  // genuinely changes sign off the circle
}
