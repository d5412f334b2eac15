#include "mdq/params.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace mdq {

namespace {

const cplx I{0.0, 1.0};

void check_invariants(const RegimeParams& p) {
    // Construction-time self-check of the defining relations.
    if (std::abs(p.omega * p.omega_p + 0.25) > 1e-14)
        throw std::logic_error("params: omega * omega' != -1/4");
    if (std::abs(p.omega_p / p.omega - p.tau) > 1e-12)
        throw std::logic_error("params: omega'/omega != tau");
    if (std::abs(p.omega_pp.real()) > 1e-14)
        throw std::logic_error("params: omega'' not pure imaginary");
    if (!(p.mu > 0)) throw std::logic_error("params: mu must be positive");
    if (std::abs(p.q - std::exp(I * M_PI * p.tau)) > 1e-12)
        throw std::logic_error("params: q != exp(i pi tau)");
}

nlohmann::json jc(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

}  // namespace

RegimeParams params_from_tau(cplx tau, Regime regime) {
    RegimeParams p;
    p.regime = regime;
    if (regime == Regime::I) {
        if (std::abs(tau.imag()) > 1e-12 * std::max(1.0, std::abs(tau)) || tau.real() <= 0.0)
            throw std::invalid_argument("regime I needs real tau > 0");
        double t = tau.real();
        double rt = std::sqrt(t);
        p.tau = cplx(t, 0.0);
        p.tau_inv = cplx(1.0 / t, 0.0);
        p.omega = cplx(0.0, 0.5 / rt);
        p.omega_p = cplx(0.0, 0.5 * rt);
    } else {
        if (std::abs(std::abs(tau) - 1.0) > 1e-12)
            throw std::invalid_argument("regime II needs |tau| = 1");
        if (tau.imag() <= 0.0)
            throw std::invalid_argument("regime II needs tau = exp(i theta), theta in (0, pi)");
        double theta = std::arg(tau);
        p.tau = tau;
        p.tau_inv = std::conj(tau);
        p.omega = 0.5 * std::exp(I * (0.5 * (M_PI - theta)));
        p.omega_p = 0.5 * std::exp(I * (0.5 * (M_PI + theta)));
    }
    p.omega_pp = p.omega + p.omega_p;
    // omega'' is pure imaginary in both regimes; store it that way exactly.
    p.mu = p.omega_pp.imag();
    p.omega_pp = cplx(0.0, p.mu);
    p.q = std::exp(I * M_PI * p.tau);
    p.q_tilde = std::exp(I * M_PI * p.tau_inv);
    check_invariants(p);
    return p;
}

RegimeParams dual(const RegimeParams& p) {
    RegimeParams d = p;
    std::swap(d.omega, d.omega_p);
    std::swap(d.tau, d.tau_inv);
    std::swap(d.q, d.q_tilde);
    return d;
}

Spin discrete_spin(const RegimeParams& p, int n, SpinConvention convention) {
    if (n < 1) throw std::invalid_argument("discrete spin needs n >= 1");
    Spin s = make_spin(p, static_cast<double>(n) * p.omega_pp, convention);
    s.n = n;
    return s;
}

Spin make_spin(const RegimeParams& p, cplx a, SpinConvention convention) {
    Spin s;
    s.convention = convention;
    s.a = a;
    double sign = (convention == SpinConvention::Plus) ? 1.0 : -1.0;
    s.Z = std::exp(sign * I * M_PI * a / p.omega);
    s.Z_tilde = std::exp(sign * I * M_PI * a / p.omega_p);
    cplx ratio = a / p.omega_pp;
    double nr = std::round(ratio.real());
    if (std::abs(ratio - nr) < 1e-9 && nr >= 1.0) s.n = static_cast<int>(nr);
    return s;
}

cplx central_charge(cplx tau) {
    if (std::abs(tau) == 0.0) throw std::invalid_argument("central_charge: tau = 0");
    return 1.0 + 6.0 * (tau + 1.0 / tau + 2.0);
}

std::string to_json(const RegimeParams& p) {
    nlohmann::json j;
    j["regime"] = regime_name(p.regime);
    j["tau"] = jc(p.tau);
    j["tau_inv"] = jc(p.tau_inv);
    j["omega"] = jc(p.omega);
    j["omega_p"] = jc(p.omega_p);
    j["omega_pp"] = jc(p.omega_pp);
    j["q"] = jc(p.q);
    j["q_tilde"] = jc(p.q_tilde);
    j["mu"] = p.mu;
    return j.dump(2);
}

std::string to_json(const RegimeParams& p, const Spin& s) {
    nlohmann::json j = nlohmann::json::parse(to_json(p));
    j["spin"]["convention"] = convention_name(s.convention);
    j["spin"]["a"] = jc(s.a);
    j["spin"]["Z"] = jc(s.Z);
    j["spin"]["Z_tilde"] = jc(s.Z_tilde);
    if (s.n)
        j["spin"]["n"] = *s.n;
    else
        j["spin"]["n"] = nullptr;
    return j.dump(2);
}

const char* regime_name(Regime r) { return r == Regime::I ? "I" : "II"; }

const char* convention_name(SpinConvention c) {
    return c == SpinConvention::Plus ? "plus" : "minus";
}

}  // namespace mdq
