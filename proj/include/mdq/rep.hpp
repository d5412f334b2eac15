// Finite-difference operator actions on Gaussian-exponential-polynomial test
// functions, the band-restricted sesquilinear form with kernel S, Hermiticity
// residuals, Gram matrices, and the multiplicative/shift pair of the
// degenerate (real tau) series.
#pragma once

#include <string>
#include <vector>

#include "mdq/kernel.hpp"
#include "mdq/params.hpp"

namespace mdq {

// Finite combinations  f(z) = sum_j c_j e^{-sigma z^2 + beta_j z} z^{k_j},
// closed under every operator below (shifts and exponential multipliers).
class GEPFunction {
  public:
    GEPFunction() = default;
    // Single term c * e^{-sigma z^2 + beta z} z^k.
    GEPFunction(double sigma, cplx beta, int k = 0, cplx coeff = {1.0, 0.0});

    double sigma() const { return sigma_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    cplx operator()(cplx z) const;

    GEPFunction operator+(const GEPFunction& o) const;
    GEPFunction operator-(const GEPFunction& o) const;
    GEPFunction scaled(cplx c) const;
    GEPFunction mult_exp(cplx gamma) const;   // multiply by e^{gamma z}
    GEPFunction mult_z() const;               // multiply by z
    GEPFunction shifted(cplx h) const;        // z -> z + h
    // Term-wise conjugate partner: f_star(w) = conj(f(conj w)) as a GEP again.
    GEPFunction conj_partner() const;

    std::string str() const;

  private:
    struct Term {
        cplx beta;
        int k = 0;
        cplx coeff;
    };
    void add_term(cplx beta, int k, cplx coeff);
    double sigma_ = 1.0;
    std::vector<Term> terms_;
    friend GEPFunction random_gep(double sigma, int terms, unsigned seed);
};

// Random GEP with the given number of terms (betas and coefficients from a
// seeded mt19937); used by the operator-algebra spot checks.
GEPFunction random_gep(double sigma, int terms, unsigned seed);

enum class Op { E, F, K, Kinv, Et, Ft, Kt, Ktinv, U, Uinv, V, Vinv };

// Action of the named operator for parameter set p and spin s:
//   (K f)(z)  = q^{-1} e^{-i pi z / omega} f(z + 2 omega')
//   (E f)(z)  = i/(q - q^{-1}) [ f(z + 2 omega') + Z e^{ i pi z / omega} f(z) ]
//   (F f)(z)  = i/(q - q^{-1}) [ e^{-i pi z / omega} f(z) + Z^{-1} f(z - 2 omega') ]
// tilde operators swap omega <-> omega', q -> q~, Z -> Z~.
GEPFunction apply_op(Op op, const RegimeParams& p, const Spin& s, const GEPFunction& f);

const char* op_name(Op op);

// |(C f)(z) + (Z + Z^{-1}) f(z)| at a probe point, normalized by the summed
// term magnitudes (the identity is a cancellation between terms that can dwarf
// the remainder), with C = q K + q^{-1} K^{-1} + (q - q^{-1})^2 F E.
double casimir_pointwise_residual(const RegimeParams& p, const Spin& s, const GEPFunction& f,
                                  cplx z);

// Commutativity of a plain/tilde pair at a probe point, normalized.
double commutator_residual(Op a, Op b, const RegimeParams& p, const Spin& s,
                           const GEPFunction& f, cplx z);

// ---- sesquilinear form ------------------------------------------------------

// Integration band [-X, X] x [y_lo, y_hi] with tensor Gauss-Legendre orders.
struct Band {
    double X = 5.0;
    double y_lo = 0.0;
    double y_hi = 1.0;
    int nx = 96;
    int ny = 48;
};

// (f, g) = (1/pi) * integral over the band of f*(conj z) S(conj z, z) g(z),
// with f*(w) = conj-coefficient partner so f*(conj z) = conj(f(z)).
// The parallel version fills samples with OpenMP and reduces with the same
// fixed pairwise tree as the serial one: results are bitwise identical.
cplx inner_product(const Weight& wt, const Band& band, const GEPFunction& f,
                   const GEPFunction& g);
cplx inner_product_serial(const Weight& wt, const Band& band, const GEPFunction& f,
                          const GEPFunction& g);

// r = |(Of~, g) - (f, Og)| / (|(Of~, g)| + |(f, Og)| + eps) for a dual pair,
// e.g. op_left = Kt, op_right = K.
double hermiticity_residual(const Weight& wt, const Band& band, Op op_left, Op op_right,
                            const GEPFunction& f, const GEPFunction& g);

// Gram matrix G_ij = (f_i, f_j); returned row-major with its eigenvalues
// (ascending) from a self-adjoint solve of the Hermitized matrix.
struct GramResult {
    int n = 0;
    std::vector<cplx> matrix;
    std::vector<double> eigenvalues;
    double hermiticity_defect = 0;  // max |G - G^dagger| entry
};

GramResult gram_matrix(const Weight& wt, const Band& band,
                       const std::vector<GEPFunction>& basis);

// ---- degenerate series (real tau) -------------------------------------------

// For real tau the form collapses to a line integral with trivial weight and
// u, v become a real multiplier and a real shift:
//   (f, g) = integral f(conj x)~ g(x) dx,   u f = e^{-i pi x / omega} f,
//   v f = f(x + 2 omega'),  both self-adjoint.
struct ContinuousCheck {
    double u_residual = 0;       // |(u f, g) - (f, u g)| normalized
    double v_residual = 0;
    double norm_value = 0;       // (f0, f0) for f0 = e^{-x^2}
    double u_matrix_value = 0;   // (f0, u f0)
};

ContinuousCheck continuous_series_check(const RegimeParams& p, double X = 8.0, int nodes = 256);

}  // namespace mdq
