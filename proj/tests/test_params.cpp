#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>

#include "doctest.h"
#include "mdq/params.hpp"

using mdq::cplx;
using namespace std::complex_literals;

namespace {
double rel(cplx a, cplx b) { return std::abs(a - b) / (std::abs(b) + 1e-300); }
}  // namespace

TEST_CASE("regime II branch values on the unit circle") {
    const double theta = M_PI / 3.0;
    mdq::RegimeParams p = mdq::params_from_tau(std::polar(1.0, theta), mdq::Regime::II);

    CHECK(p.regime == mdq::Regime::II);
    CHECK(rel(p.omega, 0.5 * std::polar(1.0, (M_PI - theta) / 2)) < 1e-15);
    CHECK(rel(p.omega_p, 0.5 * std::polar(1.0, (M_PI + theta) / 2)) < 1e-15);
    CHECK(p.mu == doctest::Approx(std::cos(theta / 2)).epsilon(1e-15));
    CHECK(p.mu == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-15));

    // omega * omega' = -1/4 and omega'' = i mu exactly as stored.
    CHECK(std::abs(p.omega * p.omega_p - cplx{-0.25, 0.0}) < 1e-16);
    CHECK(p.omega_pp.real() == 0.0);
    CHECK(p.omega_pp.imag() == p.mu);
    // On the circle conj(omega) = -omega'.
    CHECK(std::abs(std::conj(p.omega) + p.omega_p) < 1e-16);

    CHECK(rel(p.q, std::exp(1.0i * M_PI * p.tau)) < 1e-15);
    CHECK(rel(p.q_tilde, std::exp(1.0i * M_PI * p.tau_inv)) < 1e-15);
    CHECK(rel(p.tau_inv, std::conj(p.tau)) < 1e-15);
}

TEST_CASE("regime I branch values on the real ray") {
    mdq::RegimeParams p = mdq::params_from_tau(cplx{2.0, 0.0}, mdq::Regime::I);

    CHECK(p.regime == mdq::Regime::I);
    CHECK(rel(p.omega, cplx{0.0, 1.0 / (2.0 * std::sqrt(2.0))}) < 1e-15);
    CHECK(rel(p.omega_p, cplx{0.0, std::sqrt(2.0) / 2.0}) < 1e-15);
    CHECK(p.mu == doctest::Approx(3.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-15));
    CHECK(std::abs(p.omega * p.omega_p - cplx{-0.25, 0.0}) < 1e-16);
    CHECK(rel(p.tau_inv, cplx{0.5, 0.0}) < 1e-15);
    // q = e^{2 pi i} for tau = 2: lands back on 1.
    CHECK(std::abs(p.q - cplx{1.0, 0.0}) < 1e-14);
}

TEST_CASE("off-locus parameters are rejected") {
    CHECK_THROWS_AS(mdq::params_from_tau(cplx{-3.0, 0.0}, mdq::Regime::I), std::invalid_argument);
    CHECK_THROWS_AS(mdq::params_from_tau(cplx{0.0, 0.0}, mdq::Regime::I), std::invalid_argument);
    CHECK_THROWS_AS(mdq::params_from_tau(cplx{0.0, 1.0}, mdq::Regime::I), std::invalid_argument);
    CHECK_THROWS_AS(mdq::params_from_tau(cplx{2.0, 0.0}, mdq::Regime::II), std::invalid_argument);
    CHECK_THROWS_AS(mdq::params_from_tau(cplx{1.0, 0.0}, mdq::Regime::II), std::invalid_argument);
    CHECK_THROWS_AS(mdq::params_from_tau(std::polar(1.0, -M_PI / 3), mdq::Regime::II),
                    std::invalid_argument);
}

TEST_CASE("dual is an exact field swap and an involution") {
    mdq::RegimeParams p = mdq::params_from_tau(std::polar(1.0, 2 * M_PI / 5), mdq::Regime::II);
    mdq::RegimeParams d = mdq::dual(p);

    CHECK(d.omega == p.omega_p);
    CHECK(d.omega_p == p.omega);
    CHECK(d.tau == p.tau_inv);
    CHECK(d.q == p.q_tilde);
    CHECK(d.q_tilde == p.q);
    CHECK(d.omega_pp == p.omega_pp);
    CHECK(d.mu == p.mu);

    mdq::RegimeParams dd = mdq::dual(d);
    CHECK(dd.tau == p.tau);
    CHECK(dd.omega == p.omega);
    CHECK(dd.omega_p == p.omega_p);
    CHECK(dd.q == p.q);
}

TEST_CASE("spin records both sign conventions") {
    mdq::RegimeParams p = mdq::params_from_tau(std::polar(1.0, M_PI / 3), mdq::Regime::II);

    mdq::Spin s3 = mdq::discrete_spin(p, 2, mdq::SpinConvention::Minus);
    CHECK(s3.n.has_value());
    CHECK(*s3.n == 2);
    CHECK(rel(s3.a, 2.0 * p.omega_pp) < 1e-15);
    CHECK(rel(s3.Z, std::exp(-1.0i * M_PI * s3.a / p.omega)) < 1e-13);
    CHECK(rel(s3.Z_tilde, std::exp(-1.0i * M_PI * s3.a / p.omega_p)) < 1e-13);

    mdq::Spin s2 = mdq::discrete_spin(p, 2, mdq::SpinConvention::Plus);
    CHECK(rel(s2.Z, std::exp(+1.0i * M_PI * s2.a / p.omega)) < 1e-13);
    CHECK(rel(s2.Z * s3.Z, cplx{1.0, 0.0}) < 1e-12);  // opposite signs invert Z

    CHECK_THROWS_AS(mdq::discrete_spin(p, 0, mdq::SpinConvention::Minus), std::invalid_argument);

    // Generic spin: n only recorded on the discrete set.
    mdq::Spin g = mdq::make_spin(p, 1.5 * p.omega_pp, mdq::SpinConvention::Minus);
    CHECK_FALSE(g.n.has_value());
    mdq::Spin h = mdq::make_spin(p, 3.0 * p.omega_pp, mdq::SpinConvention::Minus);
    CHECK(h.n.has_value());
    CHECK(*h.n == 3);
    mdq::Spin w = mdq::make_spin(p, cplx{0.3, 0.2}, mdq::SpinConvention::Plus);
    CHECK_FALSE(w.n.has_value());
    CHECK(rel(w.Z, std::exp(1.0i * M_PI * cplx{0.3, 0.2} / p.omega)) < 1e-13);
}

TEST_CASE("central charge closed form") {
    CHECK(mdq::central_charge(cplx{1.0, 0.0}).real() == doctest::Approx(25.0).epsilon(1e-14));
    CHECK(mdq::central_charge(cplx{4.0, 0.0}).real() == doctest::Approx(38.5).epsilon(1e-14));
    // tau + 1/tau = 2 cos(pi/3) = 1 on the circle: c = 19, purely real.
    cplx c = mdq::central_charge(std::polar(1.0, M_PI / 3));
    CHECK(c.real() == doctest::Approx(19.0).epsilon(1e-13));
    CHECK(std::abs(c.imag()) < 1e-14);
    CHECK_THROWS_AS(mdq::central_charge(cplx{0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("name helpers and json serialization") {
    CHECK(std::string(mdq::regime_name(mdq::Regime::I)) == "I");
    CHECK(std::string(mdq::regime_name(mdq::Regime::II)) == "II");
    CHECK(std::string(mdq::convention_name(mdq::SpinConvention::Plus)) == "plus");
    CHECK(std::string(mdq::convention_name(mdq::SpinConvention::Minus)) == "minus");

    mdq::RegimeParams p = mdq::params_from_tau(std::polar(1.0, M_PI / 3), mdq::Regime::II);
    std::string j = mdq::to_json(p);
    CHECK(j.find("\"regime\": \"II\"") != std::string::npos);
    CHECK(j.find("\"tau\"") != std::string::npos);
    std::string js = mdq::to_json(p, mdq::discrete_spin(p, 1, mdq::SpinConvention::Minus));
    CHECK(js.find("\"spin\"") != std::string::npos);
    CHECK(js.find("\"n\": 1") != std::string::npos);
}
