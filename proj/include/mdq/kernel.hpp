// Kernel weight Phi(t) in its two realizations (finite trig product for the
// discrete spins, gamma-quotient for generic spin), the integral kernel
// S(w, z) = e^{i pi (z^2 - w^2)} Phi(w - z), and the pointwise identities the
// operator actions rest on: the K/E transport identities, their duals, and the
// two first-order shift equations for Phi.
#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "mdq/params.hpp"
#include "mdq/qdilog.hpp"

namespace mdq {

enum class WeightVariant { Product, Gamma };

// A concrete weight: the spin (discrete a = n*omega'' or generic a) plus the
// variant used to evaluate Phi.  The Gamma variant needs a QDilog evaluator.
struct Weight {
    WeightVariant variant = WeightVariant::Product;
    RegimeParams params;
    Spin spin;
    std::shared_ptr<const QDilog> qd;  // required for WeightVariant::Gamma

    cplx phi(cplx t) const;
    cplx kernel_S(cplx w, cplx z) const;  // e^{i pi (z^2 - w^2)} phi(w - z)
};

Weight product_weight(const RegimeParams& p, int n, SpinConvention conv = SpinConvention::Minus);
Weight gamma_weight(std::shared_ptr<const QDilog> qd, const Spin& spin);

// Finite product Phi_n(t) = prod_{m=1}^{n-1} sin(pi(t + 2m omega'')/(2 omega'))
//                                          * sin(pi(t + 2m omega'')/(2 omega)).
cplx phi_product(const RegimeParams& p, int n, cplx t);

// Gamma-quotient solution of the same shift equations for spin a:
//   e^{2 pi i (a + omega'')} e^{-2 pi i (a - omega'') t}
//     * gamma(t - omega'' + 2a) / gamma(t + omega'').
cplx phi_gamma(const QDilog& qd, cplx a, cplx t);

// For a = n*omega'' the two variants agree up to a t-independent constant:
//   phi_gamma / phi_product = (-4)^{n-1} e^{2 pi i (n+1) omega''}
//                                       e^{2 pi i n (n-1) omega''^2}.
cplx variant_ratio_constant(const RegimeParams& p, int n);

// Shift-equation residuals for Phi itself, |lhs - rhs| / (|lhs| + |rhs| + eps):
//   (1) Phi(t + 2 omega') / Phi(t) = sin(pi(t + 2a)/2omega) / sin(pi(t + 2omega'')/2omega)
//   (2) the omega <-> omega' mirror.
double peq1_residual(const Weight& wt, cplx t);
double peq2_residual(const Weight& wt, cplx t);

// Transport identities coupling kernel shifts in the two slots; residuals are
// normalized by the sum of all term magnitudes (both sides can vanish).
//   K:  q  S(w, z - 2omega') e^{-i pi z / omega}
//     = q^{-1} S(w + 2omega', z) e^{-i pi w / omega}
//   E:  S(w, z - 2omega') + Z e^{ i pi z / omega} S(w, z)
//     = S(w + 2omega', z) + Z^{-1} e^{ i pi w / omega} S(w, z)
// Duals swap omega <-> omega', q -> q~, Z -> Z~.
double k_identity_residual(const Weight& wt, cplx w, cplx z);
double e_identity_residual(const Weight& wt, cplx w, cplx z);
double k_identity_dual_residual(const Weight& wt, cplx w, cplx z);
double e_identity_dual_residual(const Weight& wt, cplx w, cplx z);

// ---- zero structure of the diagonal weight ----------------------------------

// On the diagonal the kernel reduces to S(conj z, z) = e^{-4 pi x y} Phi(-2iy),
// real for Regime II spins.  The zero lines of y -> Phi(-2iy) split the (x, y)
// plane into horizontal bands.
struct DiagonalProfile {
    std::vector<double> zero_heights;  // y with Phi(-2iy) = 0, ascending
    // Band index for a given y (0 = below first zero line, ...).
    int band(double y) const;
    int bands() const { return static_cast<int>(zero_heights.size()) + 1; }
};

// Zero heights inside [y_lo, y_hi].  Candidates come from the product
// structure (y = m*mu for unit-modulus tau; additional imaginary-half-period
// translates for real tau) and each is polished by golden-section minimization
// of |Phi(-2iy)| and kept only if the minimum is numerically zero.
DiagonalProfile diagonal_profile(const Weight& wt, double y_lo, double y_hi,
                                 double locate_tol = 1e-10);

// Sample of Phi on the imaginary axis, t = i*s; for unit-modulus tau the
// omega/omega' factor pairs are conjugate there, so Phi is real and (for the
// discrete spins) nonnegative.
struct PhiSample {
    double s = 0;          // t = i * s
    double value = 0;      // Re Phi(i s)
    double imag_leak = 0;  // |Im| / (|Phi| + eps)
};

struct PositivityScan {
    std::vector<PhiSample> samples;
    double min_value = 0;
    double max_imag_leak = 0;
    PhiSample argmin;
};

// Uniform scan of Phi(i*s) over s in [s_lo, s_hi]; deterministic.
PositivityScan phi_positivity_scan(const Weight& wt, int samples, double s_lo, double s_hi);

}  // namespace mdq
