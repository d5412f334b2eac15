#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "mdq/rep.hpp"

using mdq::cplx;
using mdq::GEPFunction;
using namespace std::complex_literals;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / (std::abs(b) + 1e-300); }

mdq::RegimeParams circle3() {
    return mdq::params_from_tau(std::polar(1.0, M_PI / 3), mdq::Regime::II);
}

const std::vector<cplx> kProbes = {{0.31, 0.12}, {-0.64, 0.57}, {1.2, -0.33}, {-0.05, 1.41}};

}  // namespace

TEST_CASE("test functions evaluate and combine") {
    GEPFunction f(1.0, cplx{0.0, 0.0});  // e^{-z^2}
    for (cplx z : kProbes) CHECK(rel(f(z), std::exp(-z * z)) < 1e-15);

    GEPFunction g(2.0, cplx{0.3, -0.1}, 2, cplx{0.5, 0.25});
    for (cplx z : kProbes) {
        cplx expect = cplx{0.5, 0.25} * std::exp(-2.0 * z * z + cplx{0.3, -0.1} * z) * z * z;
        CHECK(rel(g(z), expect) < 1e-14);
    }

    // Same-beta terms merge; doubling equals scaling.
    GEPFunction s = g + g;
    CHECK(s.size() == g.size());
    for (cplx z : kProbes) CHECK(rel(s(z), g.scaled(cplx{2.0, 0.0})(z)) < 1e-15);

    for (cplx z : kProbes) {
        CHECK(rel(g.mult_z()(z), z * g(z)) < 1e-14);
        CHECK(rel(g.mult_exp(cplx{0.2, 0.7})(z), std::exp(cplx{0.2, 0.7} * z) * g(z)) < 1e-14);
        CHECK(rel(g.shifted(cplx{0.4, -0.6})(z), g(z + cplx{0.4, -0.6})) < 1e-12);
        CHECK(rel(g.conj_partner()(z), std::conj(g(std::conj(z)))) < 1e-14);
        CHECK(rel((g - g.scaled(cplx{0.5, 0.0}))(z), 0.5 * g(z)) < 1e-14);
    }
}

TEST_CASE("operator actions match their defining formulas") {
    mdq::RegimeParams p = circle3();
    mdq::Spin s = mdq::discrete_spin(p, 2, mdq::SpinConvention::Minus);
    GEPFunction f = mdq::random_gep(1.0, 3, 777);
    const cplx iq = 1.0i / (p.q - 1.0 / p.q);

    for (cplx z : kProbes) {
        cplx Kf = (1.0 / p.q) * std::exp(-1.0i * M_PI * z / p.omega) * f(z + 2.0 * p.omega_p);
        CHECK(rel(mdq::apply_op(mdq::Op::K, p, s, f)(z), Kf) < 1e-12);

        cplx Ef = iq * (f(z + 2.0 * p.omega_p) +
                        s.Z * std::exp(1.0i * M_PI * z / p.omega) * f(z));
        CHECK(rel(mdq::apply_op(mdq::Op::E, p, s, f)(z), Ef) < 1e-12);

        cplx Ff = iq * (std::exp(-1.0i * M_PI * z / p.omega) * f(z) +
                        (1.0 / s.Z) * f(z - 2.0 * p.omega_p));
        CHECK(rel(mdq::apply_op(mdq::Op::F, p, s, f)(z), Ff) < 1e-12);

        // Tilde operators swap the half-periods.
        cplx Ktf = (1.0 / p.q_tilde) * std::exp(-1.0i * M_PI * z / p.omega_p) *
                   f(z + 2.0 * p.omega);
        CHECK(rel(mdq::apply_op(mdq::Op::Kt, p, s, f)(z), Ktf) < 1e-12);

        // u multiplies, v shifts; they invert cleanly.
        CHECK(rel(mdq::apply_op(mdq::Op::U, p, s, f)(z),
                  std::exp(-1.0i * M_PI * z / p.omega) * f(z)) < 1e-12);
        CHECK(rel(mdq::apply_op(mdq::Op::V, p, s, f)(z), f(z + 2.0 * p.omega_p)) < 1e-12);
    }

    GEPFunction id1 = mdq::apply_op(mdq::Op::V, p, s, mdq::apply_op(mdq::Op::Vinv, p, s, f));
    GEPFunction id2 = mdq::apply_op(mdq::Op::Uinv, p, s, mdq::apply_op(mdq::Op::U, p, s, f));
    GEPFunction kk = mdq::apply_op(mdq::Op::Kinv, p, s, mdq::apply_op(mdq::Op::K, p, s, f));
    for (cplx z : kProbes) {
        CHECK(rel(id1(z), f(z)) < 1e-12);
        CHECK(rel(id2(z), f(z)) < 1e-12);
        CHECK(rel(kk(z), f(z)) < 1e-12);
    }
}

TEST_CASE("weyl pair, modular commutativity, casimir") {
    mdq::RegimeParams p = circle3();
    mdq::Spin s = mdq::discrete_spin(p, 2, mdq::SpinConvention::Minus);
    GEPFunction f = mdq::random_gep(1.0, 3, 31415);

    // u v = q^2 v u as unbounded operators on the test class.
    GEPFunction uv = mdq::apply_op(mdq::Op::U, p, s, mdq::apply_op(mdq::Op::V, p, s, f));
    GEPFunction vu = mdq::apply_op(mdq::Op::V, p, s, mdq::apply_op(mdq::Op::U, p, s, f));
    for (cplx z : kProbes) CHECK(rel(uv(z), p.q * p.q * vu(z)) < 1e-12);

    for (mdq::Op a : {mdq::Op::E, mdq::Op::F, mdq::Op::K}) {
        for (mdq::Op b : {mdq::Op::Et, mdq::Op::Ft, mdq::Op::Kt}) {
            for (cplx z : kProbes) CHECK(mdq::commutator_residual(a, b, p, s, f, z) < 1e-10);
        }
    }

    for (cplx z : kProbes) CHECK(mdq::casimir_pointwise_residual(p, s, f, z) < 1e-12);

    // Generic (non-discrete) spin obeys the same algebra.
    mdq::Spin gs = mdq::make_spin(p, cplx{0.37, 0.21}, mdq::SpinConvention::Minus);
    for (cplx z : kProbes) {
        CHECK(mdq::casimir_pointwise_residual(p, gs, f, z) < 1e-12);
        CHECK(mdq::commutator_residual(mdq::Op::E, mdq::Op::Ft, p, gs, f, z) < 1e-10);
    }
}

TEST_CASE("band inner product: symmetry and quadrature saturation") {
    mdq::RegimeParams p = circle3();
    mdq::Weight wt = mdq::product_weight(p, 3);
    mdq::Band band;
    band.X = 5.0;
    band.y_lo = p.mu;
    band.y_hi = 2.0 * p.mu;

    const double sigma = 2.0;
    const cplx beta0 = 2.0 * sigma * cplx{0.0, 1.5 * p.mu};
    GEPFunction f(sigma, beta0);
    GEPFunction g = GEPFunction(sigma, beta0, 0, cplx{0.7, 0.0}) +
                    GEPFunction(sigma, beta0, 1, cplx{0.4, 0.0});

    cplx fg = mdq::inner_product(wt, band, f, g);
    cplx gf = mdq::inner_product(wt, band, g, f);
    CHECK(rel(fg, std::conj(gf)) < 1e-13);  // S(conj z, z) is real here

    cplx ff = mdq::inner_product(wt, band, f, f);
    CHECK(std::abs(ff.imag()) < 1e-12 * std::abs(ff));

    mdq::Band fine = band;
    fine.nx = 2 * band.nx;
    fine.ny = 2 * band.ny;
    CHECK(rel(mdq::inner_product(wt, fine, f, g), fg) < 1e-8);

    double r = mdq::hermiticity_residual(wt, band, mdq::Op::Kt, mdq::Op::K, f, g);
    CHECK(r < 1e-3);
}

TEST_CASE("gram matrix of a single normalized vector") {
    mdq::RegimeParams p = circle3();
    mdq::Weight wt = mdq::product_weight(p, 3);
    mdq::Band band;
    band.X = 5.0;
    band.y_lo = p.mu;
    band.y_hi = 2.0 * p.mu;

    GEPFunction b0(2.0, 2.0 * 2.0 * cplx{0.0, 1.5 * p.mu});
    double nrm = std::sqrt(std::abs(mdq::inner_product(wt, band, b0, b0)));
    std::vector<GEPFunction> basis = {b0.scaled(cplx{1.0 / nrm, 0.0})};

    mdq::GramResult gr = mdq::gram_matrix(wt, band, basis);
    REQUIRE(gr.n == 1);
    REQUIRE(gr.matrix.size() == 1);
    REQUIRE(gr.eigenvalues.size() == 1);
    CHECK(std::abs(gr.matrix[0] - cplx{1.0, 0.0}) < 1e-12);
    CHECK(gr.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(gr.hermiticity_defect < 1e-15);
}

TEST_CASE("degenerate series on the real ray") {
    mdq::RegimeParams p = mdq::params_from_tau(cplx{4.0, 0.0}, mdq::Regime::I);
    mdq::ContinuousCheck cc = mdq::continuous_series_check(p);

    CHECK(cc.u_residual < 1e-12);
    CHECK(cc.v_residual < 1e-12);
    // (f0, f0) = integral e^{-2x^2} dx = sqrt(pi/2).
    CHECK(rel(cplx{cc.norm_value, 0.0}, cplx{1.2533141373155003, 0.0}) < 1e-12);
    // (f0, u f0) = integral e^{-2x^2 - i pi x / omega} dx with omega = i/4:
    // pure Gaussian moment e^{2 pi^2} sqrt(pi/2).
    CHECK(rel(cplx{cc.u_matrix_value, 0.0}, cplx{468478212.9987592, 0.0}) < 1e-10);

    CHECK_THROWS_AS(mdq::continuous_series_check(circle3()), std::invalid_argument);
}
