#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "mdq/params.hpp"
#include "mdq/qdilog.hpp"

using mdq::cplx;
using namespace std::complex_literals;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / (std::abs(b) + 1e-300); }

mdq::RegimeParams circle(double theta) {
    return mdq::params_from_tau(std::polar(1.0, theta), mdq::Regime::II);
}

struct Golden {
    cplx zeta;
    cplx value;
};

// Frozen reference values from an independent high-node evaluation of the
// defining contour integral (plain trapezoid on mpmath-checked integrands).
const std::vector<Golden> kGoldenCircle3 = {
    {{0.0, 0.0}, {0.99144486137381041, 0.13052619222005159}},
    {{0.25, 0.1}, {1.0191537453799422, 0.017603775414929503}},
    {{0.3, 1.7}, {-0.85621688937245867, -1.9538385908943058}},
    {{0.3, -1.2}, {0.64829154242587175, 0.088373683766816174}},
    {{-0.8, 0.9}, {89.793320751026415, -25.652593766353404}},
};
const std::vector<Golden> kGoldenCircle2 = {
    {{0.0, 0.0}, {1.0, 0.0}},
    {{0.25, 0.1}, {0.99305673582120486, -0.027645226021904951}},
    {{0.3, 1.7}, {-17.261427218467053, -10.393877655332251}},
    {{0.3, -1.2}, {0.29037920569624119, -0.080376056070912663}},
    {{-0.8, 0.9}, {83.967323600507527, -42.752818953642602}},
};
const std::vector<Golden> kGoldenRay2 = {
    {{0.0, 0.0}, {0.94693012949510566, 0.32143946530316158}},
    {{0.25, 0.1}, {1.0430347812327869, 0.12977645386957811}},
    {{0.3, 1.7}, {1.0468656667494256, 0.0087549202802736039}},
    {{0.3, -1.2}, {1.098825777028904, 0.15771926811306714}},
    {{-0.8, 0.9}, {90.376550731332458, 11.837087137468494}},
};

}  // namespace

TEST_CASE("golden values across both regimes") {
    struct Set {
        mdq::RegimeParams p;
        const std::vector<Golden>* g;
    };
    const Set sets[] = {
        {circle(M_PI / 3), &kGoldenCircle3},
        {circle(M_PI / 2), &kGoldenCircle2},
        {mdq::params_from_tau(cplx{2.0, 0.0}, mdq::Regime::I), &kGoldenRay2},
    };
    for (const Set& s : sets) {
        mdq::QDilog qd(s.p);
        for (const Golden& g : *s.g) {
            CAPTURE(g.zeta.real());
            CAPTURE(g.zeta.imag());
            CHECK(rel(qd.gamma(g.zeta), g.value) < 5e-12);
        }
    }
}

TEST_CASE("value at the origin matches the closed form") {
    // gamma(0) = exp(i pi (b^2 + b^{-2}) / 24) with b = -2i omega'.
    for (double theta : {M_PI / 3, M_PI / 2, 2 * M_PI / 5}) {
        mdq::RegimeParams p = circle(theta);
        mdq::QDilog qd(p);
        cplx b2 = -4.0 * p.omega_p * p.omega_p;
        cplx b2inv = -4.0 * p.omega * p.omega;
        cplx expect = std::exp(1.0i * M_PI * (b2 + b2inv) / 24.0);
        CHECK(rel(qd.gamma(cplx{0.0, 0.0}), expect) < 1e-12);
    }
    // Spot value for theta = 2 pi / 5.
    mdq::QDilog qd(circle(2 * M_PI / 5));
    CHECK(std::abs(qd.gamma(cplx{0.0, 0.0}) -
                   cplx{0.996729342213859, 0.080812241460859}) < 1e-12);
}

TEST_CASE("node doubling leaves values fixed") {
    mdq::RegimeParams p = circle(M_PI / 3);
    mdq::QDilog coarse(p, 2048), fine(p, 4096);
    for (cplx z : {cplx{0.3, 0.2}, cplx{-0.7, -0.35}, cplx{1.1, 1.3}, cplx{0.05, -2.2}}) {
        CHECK(rel(coarse.gamma(z), fine.gamma(z)) < 1e-10);
    }
}

TEST_CASE("evaluator is symmetric under the half-period swap") {
    for (auto p : {circle(M_PI / 3), mdq::params_from_tau(cplx{3.0, 0.0}, mdq::Regime::I)}) {
        mdq::QDilog qd(p), qd_dual(mdq::dual(p));
        for (cplx z : {cplx{0.2, 0.3}, cplx{-0.6, 1.4}, cplx{0.9, -0.8}}) {
            CHECK(rel(qd.gamma(z), qd_dual.gamma(z)) < 1e-10);
        }
    }
}

TEST_CASE("shift equations hold at high precision") {
    for (auto p : {circle(M_PI / 3), circle(M_PI / 2),
                   mdq::params_from_tau(cplx{2.0, 0.0}, mdq::Regime::I)}) {
        mdq::QDilog qd(p);
        CHECK(qd.calibration().base_residual < 1e-10);
        CHECK(qd.calibration().contour_height > 0);
        CHECK(qd.calibration().contour_halfwidth > 0);
        for (cplx z : {cplx{0.11, 0.23}, cplx{-0.42, -0.31}, cplx{0.77, 0.05}}) {
            CHECK(qd.d1_residual(z) < 1e-10);
            CHECK(qd.d2_residual(z) < 1e-10);
            CHECK(qd.shift_relation_residual(z) < 1e-8);
        }
    }
}

TEST_CASE("ladder bookkeeping and proximity flags") {
    mdq::RegimeParams p = circle(M_PI / 3);
    mdq::QDilog qd(p);

    mdq::GammaResult base = qd.gamma_full(cplx{0.3, 0.1});
    CHECK(base.ladder_steps == 0);
    CHECK_FALSE(base.near_zero);
    CHECK_FALSE(base.near_pole);

    mdq::GammaResult far = qd.gamma_full(cplx{0.3, 1.7});
    CHECK(far.ladder_steps > 0);

    mdq::GammaResult nz = qd.gamma_full(p.omega_pp + cplx{1e-8, 0.0});
    CHECK(nz.near_zero);
    CHECK(nz.lattice_dist < 1e-6);
    mdq::GammaResult np = qd.gamma_full(-p.omega_pp + cplx{1e-8, 0.0});
    CHECK(np.near_pole);

    // Four steps cannot bridge five strip widths.
    mdq::QDilog short_ladder(p, 2048, -1.0, 4);
    CHECK_THROWS_AS(short_ladder.gamma(cplx{0.3, 5.0}), std::runtime_error);
}

TEST_CASE("constructor rejects bad configuration") {
    mdq::RegimeParams p = circle(M_PI / 3);
    CHECK_THROWS_AS(mdq::QDilog(p, 32), std::invalid_argument);
    CHECK_THROWS_AS(mdq::QDilog(p, 2048, 0.96 * p.mu), std::invalid_argument);
    CHECK_THROWS_AS(mdq::QDilog(p, 2048, -1.0, 2), std::invalid_argument);
}

TEST_CASE("zero lattice levels and winding counts") {
    mdq::RegimeParams p = circle(M_PI / 3);
    mdq::QDilog qd(p);

    std::vector<cplx> zeros = qd.zero_lattice(3);
    CHECK(zeros.size() == 6);  // 1 + 2 + 3
    for (cplx z : zeros) {
        double level = z.imag() / p.mu;
        CHECK(std::abs(level - std::round(level)) < 1e-12);
        CHECK(std::round(level) >= 1);
        CHECK(std::round(level) <= 3);
    }
    std::vector<cplx> poles = qd.pole_lattice(2);
    CHECK(poles.size() == 3);
    for (std::size_t i = 0; i < poles.size(); ++i) CHECK(poles[i] == -zeros[i]);

    for (int n = 1; n <= 3; ++n) CHECK(qd.count_zeros_on_level(n) == n);

    CHECK(qd.winding_number(cplx{0.2, 0.1}, 0.05) == 0);
    CHECK(qd.winding_number(p.omega_pp, 0.1 * p.mu, 128) == 1);
    CHECK_THROWS_AS(mdq::QDilog(p).winding_number(cplx{0, 0}, 0.1, 8), std::invalid_argument);
}

TEST_CASE("no zeros below the axis: rectangle winding counts poles") {
    mdq::RegimeParams p = circle(M_PI / 3);
    mdq::QDilog qd(p);
    // Level 1 pole only.  (Wider rectangles trip the magnitude guard: gamma
    // decays exponentially in the far lower half plane.)
    CHECK(qd.rectangle_winding(-1.1, 1.1, -1.9 * p.mu, -0.1 * p.mu) == -1);
    // Levels 1 and 2: three poles.
    CHECK(qd.rectangle_winding(-1.1, 1.1, -2.2 * p.mu, -0.1 * p.mu) == -3);
    // Empty rectangle.
    CHECK(qd.rectangle_winding(-0.4, 0.4, -0.6 * p.mu, -0.1 * p.mu) == 0);
}
