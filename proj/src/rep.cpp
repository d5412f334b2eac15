#include "mdq/rep.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mdq/quad.hpp"

namespace mdq {

namespace {
const cplx I{0.0, 1.0};
constexpr double kEps = 1e-300;
constexpr double kBetaMergeTol = 1e-12;

double binomial(int n, int k) {
    double r = 1.0;
    for (int j = 1; j <= k; ++j) r = r * double(n - k + j) / double(j);
    return r;
}
}  // namespace

// ---- GEPFunction ------------------------------------------------------------

GEPFunction::GEPFunction(double sigma, cplx beta, int k, cplx coeff) : sigma_(sigma) {
    if (k < 0) throw std::invalid_argument("GEPFunction: power must be >= 0");
    if (coeff != cplx{0.0, 0.0}) terms_.push_back({beta, k, coeff});
}

void GEPFunction::add_term(cplx beta, int k, cplx coeff) {
    if (coeff == cplx{0.0, 0.0}) return;
    for (auto& t : terms_) {
        if (t.k == k && std::abs(t.beta - beta) < kBetaMergeTol) {
            t.coeff += coeff;
            return;
        }
    }
    terms_.push_back({beta, k, coeff});
}

cplx GEPFunction::operator()(cplx z) const {
    cplx acc{0.0, 0.0};
    for (const auto& t : terms_) {
        cplx zp{1.0, 0.0};
        for (int j = 0; j < t.k; ++j) zp *= z;
        acc += t.coeff * std::exp(-sigma_ * z * z + t.beta * z) * zp;
    }
    return acc;
}

GEPFunction GEPFunction::operator+(const GEPFunction& o) const {
    if (empty()) return o;
    if (o.empty()) return *this;
    if (std::abs(sigma_ - o.sigma_) > kBetaMergeTol)
        throw std::invalid_argument("GEPFunction: mixed Gaussian widths");
    GEPFunction r = *this;
    for (const auto& t : o.terms_) r.add_term(t.beta, t.k, t.coeff);
    return r;
}

GEPFunction GEPFunction::operator-(const GEPFunction& o) const {
    return *this + o.scaled(cplx{-1.0, 0.0});
}

GEPFunction GEPFunction::scaled(cplx c) const {
    GEPFunction r;
    r.sigma_ = sigma_;
    if (c == cplx{0.0, 0.0}) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

GEPFunction GEPFunction::mult_exp(cplx gamma) const {
    GEPFunction r;
    r.sigma_ = sigma_;
    for (const auto& t : terms_) r.add_term(t.beta + gamma, t.k, t.coeff);
    return r;
}

GEPFunction GEPFunction::mult_z() const {
    GEPFunction r;
    r.sigma_ = sigma_;
    for (const auto& t : terms_) r.add_term(t.beta, t.k + 1, t.coeff);
    return r;
}

GEPFunction GEPFunction::shifted(cplx h) const {
    // f(z+h): e^{-s(z+h)^2 + b(z+h)} (z+h)^k
    //       = e^{-s h^2 + b h} e^{(b - 2 s h) z} sum_j C(k,j) h^{k-j} z^j e^{-s z^2}.
    GEPFunction r;
    r.sigma_ = sigma_;
    for (const auto& t : terms_) {
        cplx base = t.coeff * std::exp(-sigma_ * h * h + t.beta * h);
        cplx beta2 = t.beta - 2.0 * sigma_ * h;
        cplx hpow{1.0, 0.0};  // h^{k-j}, built from j = k downward
        for (int j = t.k; j >= 0; --j) {
            r.add_term(beta2, j, base * binomial(t.k, j) * hpow);
            hpow *= h;
        }
    }
    return r;
}

GEPFunction GEPFunction::conj_partner() const {
    GEPFunction r;
    r.sigma_ = sigma_;
    for (const auto& t : terms_) r.add_term(std::conj(t.beta), t.k, std::conj(t.coeff));
    return r;
}

std::string GEPFunction::str() const {
    std::ostringstream out;
    out << "GEP[sigma=" << sigma_;
    for (const auto& t : terms_)
        out << "; (" << t.coeff.real() << "," << t.coeff.imag() << ") b=(" << t.beta.real() << ","
            << t.beta.imag() << ") k=" << t.k;
    out << "]";
    return out.str();
}

GEPFunction random_gep(double sigma, int terms, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<int> uk(0, 2);
    GEPFunction f;
    f.sigma_ = sigma;
    for (int t = 0; t < terms; ++t) {
        cplx beta{u(rng), u(rng)};
        int k = uk(rng);
        cplx coeff{u(rng), u(rng)};
        f.add_term(beta, k, coeff);
    }
    return f;
}

// ---- operator actions -------------------------------------------------------

GEPFunction apply_op(Op op, const RegimeParams& p, const Spin& s, const GEPFunction& f) {
    const cplx ipi = I * M_PI;
    const bool tilde = (op == Op::Et || op == Op::Ft || op == Op::Kt || op == Op::Ktinv);
    const cplx om = tilde ? p.omega_p : p.omega;   // half-period in the multiplier
    const cplx os = tilde ? p.omega : p.omega_p;   // half-period in the shift
    const cplx q = tilde ? p.q_tilde : p.q;
    const cplx Z = tilde ? s.Z_tilde : s.Z;
    switch (op) {
        case Op::U:
            return f.mult_exp(-ipi / p.omega);
        case Op::Uinv:
            return f.mult_exp(ipi / p.omega);
        case Op::V:
            return f.shifted(2.0 * p.omega_p);
        case Op::Vinv:
            return f.shifted(-2.0 * p.omega_p);
        case Op::K:
        case Op::Kt:
            return f.shifted(2.0 * os).mult_exp(-ipi / om).scaled(1.0 / q);
        case Op::Kinv:
        case Op::Ktinv:
            return f.shifted(-2.0 * os).mult_exp(ipi / om).scaled(1.0 / q);
        case Op::E:
        case Op::Et: {
            cplx pref = I / (q - 1.0 / q);
            return (f.shifted(2.0 * os) + f.mult_exp(ipi / om).scaled(Z)).scaled(pref);
        }
        case Op::F:
        case Op::Ft: {
            cplx pref = I / (q - 1.0 / q);
            return (f.mult_exp(-ipi / om) + f.shifted(-2.0 * os).scaled(1.0 / Z)).scaled(pref);
        }
    }
    throw std::logic_error("apply_op: unknown operator");
}

const char* op_name(Op op) {
    switch (op) {
        case Op::E: return "E";
        case Op::F: return "F";
        case Op::K: return "K";
        case Op::Kinv: return "K^-1";
        case Op::Et: return "E~";
        case Op::Ft: return "F~";
        case Op::Kt: return "K~";
        case Op::Ktinv: return "K~^-1";
        case Op::U: return "u";
        case Op::Uinv: return "u^-1";
        case Op::V: return "v";
        case Op::Vinv: return "v^-1";
    }
    return "?";
}

double casimir_pointwise_residual(const RegimeParams& p, const Spin& s, const GEPFunction& f,
                                  cplx z) {
    cplx q = p.q;
    cplx fac = q - 1.0 / q;
    cplx t1 = q * apply_op(Op::K, p, s, f)(z);
    cplx t2 = apply_op(Op::Kinv, p, s, f)(z) / q;
    cplx t3 = fac * fac * apply_op(Op::F, p, s, apply_op(Op::E, p, s, f))(z);
    cplx t4 = (s.Z + 1.0 / s.Z) * f(z);
    // Backward-error style: the identity cancels the four terms against each
    // other, so normalize by what is actually summed, not by the remainder.
    return std::abs(t1 + t2 + t3 + t4) /
           (std::abs(t1) + std::abs(t2) + std::abs(t3) + std::abs(t4) + kEps);
}

double commutator_residual(Op a, Op b, const RegimeParams& p, const Spin& s, const GEPFunction& f,
                           cplx z) {
    cplx ab = apply_op(a, p, s, apply_op(b, p, s, f))(z);
    cplx ba = apply_op(b, p, s, apply_op(a, p, s, f))(z);
    return std::abs(ab - ba) / (std::abs(ab) + std::abs(ba) + kEps);
}

// ---- sesquilinear form ------------------------------------------------------

namespace {

// Shared grid fill; the reduction is always the same pairwise tree over the
// node-major buffer, so thread count never changes the result.
cplx band_integral(const Weight& wt, const Band& band, const GEPFunction& f, const GEPFunction& g,
                   bool parallel) {
    const GaussLegendre& gx = gauss_legendre(band.nx);
    const GaussLegendre& gy = gauss_legendre(band.ny);
    const GEPFunction fs = f.conj_partner();
    const double half = 0.5 * (band.y_hi - band.y_lo);
    const double mid = 0.5 * (band.y_hi + band.y_lo);
    std::vector<cplx> vals(static_cast<std::size_t>(band.nx) * band.ny);

#pragma omp parallel for schedule(static) collapse(2) if (parallel)
    for (int i = 0; i < band.nx; ++i)
        for (int j = 0; j < band.ny; ++j) {
            double x = band.X * gx.x[i];
            double y = mid + half * gy.x[j];
            double wgt = gx.w[i] * band.X * gy.w[j] * half;
            cplx z{x, y};
            cplx zb = std::conj(z);
            vals[static_cast<std::size_t>(i) * band.ny + j] =
                wgt * fs(zb) * wt.kernel_S(zb, z) * g(z);
        }
    return pairwise_sum(vals) / M_PI;
}

}  // namespace

cplx inner_product(const Weight& wt, const Band& band, const GEPFunction& f,
                   const GEPFunction& g) {
    return band_integral(wt, band, f, g, true);
}

cplx inner_product_serial(const Weight& wt, const Band& band, const GEPFunction& f,
                          const GEPFunction& g) {
    return band_integral(wt, band, f, g, false);
}

double hermiticity_residual(const Weight& wt, const Band& band, Op op_left, Op op_right,
                            const GEPFunction& f, const GEPFunction& g) {
    cplx A = inner_product(wt, band, apply_op(op_left, wt.params, wt.spin, f), g);
    cplx B = inner_product(wt, band, f, apply_op(op_right, wt.params, wt.spin, g));
    return std::abs(A - B) / (std::abs(A) + std::abs(B) + kEps);
}

GramResult gram_matrix(const Weight& wt, const Band& band, const std::vector<GEPFunction>& basis) {
    const int n = static_cast<int>(basis.size());
    GramResult out;
    out.n = n;
    out.matrix.assign(static_cast<std::size_t>(n) * n, cplx{0.0, 0.0});

#pragma omp parallel for schedule(static) collapse(2)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.matrix[static_cast<std::size_t>(i) * n + j] =
                inner_product_serial(wt, band, basis[i], basis[j]);

    Eigen::MatrixXcd G(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) G(i, j) = out.matrix[static_cast<std::size_t>(i) * n + j];
    out.hermiticity_defect = (G - G.adjoint()).cwiseAbs().maxCoeff();
    Eigen::MatrixXcd H = 0.5 * (G + G.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(H);
    out.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    return out;
}

// ---- degenerate series ------------------------------------------------------

ContinuousCheck continuous_series_check(const RegimeParams& p, double X, int nodes) {
    if (p.regime != Regime::I)
        throw std::invalid_argument("continuous_series_check: needs a real-tau parameter set");
    const GaussLegendre& gl = gauss_legendre(nodes);

    auto line_ip = [&](const GEPFunction& a, const GEPFunction& b) {
        std::vector<cplx> vals(gl.x.size());
        for (std::size_t k = 0; k < gl.x.size(); ++k) {
            double x = X * gl.x[k];
            vals[k] = gl.w[k] * X * std::conj(a(cplx{x, 0.0})) * b(cplx{x, 0.0});
        }
        return pairwise_sum(vals);
    };

    GEPFunction f0(1.0, cplx{0.0, 0.0});
    GEPFunction g0 = GEPFunction(1.0, cplx{0.0, 0.0}, 0, cplx{0.3, 0.0}) +
                     GEPFunction(1.0, cplx{0.0, 0.0}, 1, cplx{0.2, 0.0});

    const cplx umul = -I * M_PI / p.omega;  // real for regime I
    auto apply_u = [&](const GEPFunction& h) { return h.mult_exp(umul); };
    auto apply_v = [&](const GEPFunction& h) { return h.shifted(2.0 * p.omega_p); };

    ContinuousCheck out;
    {
        cplx A = line_ip(apply_u(f0), g0), B = line_ip(f0, apply_u(g0));
        out.u_residual = std::abs(A - B) / (std::abs(A) + std::abs(B) + kEps);
    }
    {
        cplx A = line_ip(apply_v(f0), g0), B = line_ip(f0, apply_v(g0));
        out.v_residual = std::abs(A - B) / (std::abs(A) + std::abs(B) + kEps);
    }
    out.norm_value = line_ip(f0, f0).real();
    out.u_matrix_value = line_ip(f0, apply_u(f0)).real();
    return out;
}

}  // namespace mdq
