// Half-period parameter sets (omega, omega', tau, q, mu) for the two real
// regimes, spin records with both sign conventions, and the central charge.
#pragma once

#include <complex>
#include <optional>
#include <string>

namespace mdq {

using cplx = std::complex<double>;

enum class Regime { I, II };
enum class SpinConvention { Plus, Minus };

struct RegimeParams {
    Regime regime = Regime::II;
    cplx tau;
    cplx tau_inv;  // stored so that dual() is an exact field swap
    cplx omega;
    cplx omega_p;
    cplx omega_pp;  // omega + omega_p, pure imaginary
    cplx q;
    cplx q_tilde;
    double mu = 0;  // omega_pp / i > 0
};

struct Spin {
    SpinConvention convention = SpinConvention::Minus;
    cplx a;
    cplx Z;
    cplx Z_tilde;
    std::optional<int> n;  // set when a = n * omega_pp
};

// Branch rules: Regime I takes omega = i/(2 sqrt(tau)) with the positive root;
// Regime II takes omega = (1/2) exp(i(pi-theta)/2) for tau = exp(i theta).
// Throws std::invalid_argument off the regime locus (including tau = +-1 in II).
RegimeParams params_from_tau(cplx tau, Regime regime);

// omega <-> omega', tau -> 1/tau, q <-> q_tilde.  Pure field swap, so
// dual(dual(p)) == p bitwise.  Never re-validates the locus: the dual of a
// Regime II set has Im tau < 0 by construction.
RegimeParams dual(const RegimeParams& p);

// a = n * omega_pp, n >= 1 (throws otherwise).
Spin discrete_spin(const RegimeParams& p, int n, SpinConvention convention);

// Generic complex spin a; n is recorded only if a lands on the discrete set.
Spin make_spin(const RegimeParams& p, cplx a, SpinConvention convention);

// c = 1 + 6(tau + 1/tau + 2); throws on tau = 0.
cplx central_charge(cplx tau);

std::string to_json(const RegimeParams& p);
std::string to_json(const RegimeParams& p, const Spin& s);

const char* regime_name(Regime r);
const char* convention_name(SpinConvention c);

}  // namespace mdq
