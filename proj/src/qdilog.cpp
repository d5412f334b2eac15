#include "mdq/qdilog.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "mdq/quad.hpp"

namespace mdq {

namespace {
const cplx I{0.0, 1.0};
constexpr double kWindingGuard = 1e-10;
constexpr double kLatticeGuard = 1e-6;
}  // namespace

QDilog::QDilog(const RegimeParams& p, int nodes, double base_halfwidth, int max_ladder)
    : params_(p), nodes_(nodes), max_ladder_(max_ladder) {
    if (nodes_ < 64) throw std::invalid_argument("qdilog: need at least 64 contour nodes");
    if (max_ladder_ < 4) throw std::invalid_argument("qdilog: max_ladder too small");
    base_halfwidth_ = (base_halfwidth > 0) ? base_halfwidth : 0.5 * p.mu;
    if (!(base_halfwidth_ > 0) || base_halfwidth_ >= 0.95 * p.mu)
        throw std::invalid_argument("qdilog: base strip half-width must lie in (0, 0.95*mu)");

    b_ = -2.0 * I * p.omega_p;
    b_inv_ = -2.0 * I * p.omega;
    // Contour height: halfway between the real axis and the first integrand
    // pole above it.
    contour_d_ = 0.5 * M_PI * std::min(b_.real(), b_inv_.real());
    if (!(contour_d_ > 0)) throw std::invalid_argument("qdilog: parameter set has no contour gap");
    // Worst-case integrand decay over the base strip is 2(mu - halfwidth);
    // truncate where the tail is ~1e-18 of the peak.
    double rho = 2.0 * (p.mu - base_halfwidth_);
    contour_T_ = std::log(1e18) / rho;

    tnodes_ = linspace(-contour_T_, contour_T_, nodes_ + 1);
    den_inv_.resize(tnodes_.size());
    for (std::size_t k = 0; k < tnodes_.size(); ++k) {
        cplx w(tnodes_[k], contour_d_);
        den_inv_[k] = 1.0 / (std::sinh(w * b_) * std::sinh(w * b_inv_) * w);
    }

    calib_.contour_height = contour_d_;
    calib_.contour_halfwidth = contour_T_;
    calib_.decay_rate = rho;
    double worst = 0;
    for (double xr : {-0.77, 0.0137, 0.81})
        for (double yf : {-0.31, 0.0061, 0.27}) {
            cplx z(xr, yf * p.mu);
            worst = std::max({worst, d1_residual(z), d2_residual(z)});
        }
    calib_.base_residual = worst;
    if (worst > 1e-10)
        throw std::runtime_error("qdilog calibration failed: shift-equation residual " +
                                 std::to_string(worst));
    if (winding_number(p.omega_pp, 0.1 * p.mu, 64) != 1)
        throw std::runtime_error("qdilog calibration failed: no simple zero at omega''");
}

cplx QDilog::log_gamma_base(cplx z) const {
    // (1/4) * integral over Im w = d of e^{2izw} / (sinh(wb) sinh(w/b) w) dw,
    // trapezoid on the cached abscissae.  The exponential is advanced by a
    // short multiplicative recurrence restarted every 64 nodes so the phase
    // roundoff never accumulates past ~64 eps.
    thread_local std::vector<cplx> buf;
    const std::size_t n = den_inv_.size();
    buf.resize(n);
    const cplx two_iz = 2.0 * I * z;
    const double h = tnodes_[1] - tnodes_[0];
    const cplx r = std::exp(two_iz * h);
    constexpr std::size_t kBlock = 64;
    for (std::size_t start = 0; start < n; start += kBlock) {
        cplx e = std::exp(two_iz * cplx(tnodes_[start], contour_d_));
        std::size_t end = std::min(start + kBlock, n);
        for (std::size_t k = start; k < end; ++k) {
            buf[k] = e * den_inv_[k];
            e *= r;
        }
    }
    cplx s = pairwise_sum(buf) - 0.5 * (buf.front() + buf.back());
    return s * (h / 4.0);
}

cplx QDilog::gamma_impl(cplx z, int* steps) const {
    cplx val{1.0, 0.0};
    const RegimeParams& p = params_;
    const cplx s1 = 2.0 * p.omega;
    const cplx s2 = 2.0 * p.omega_p;
    for (int it = 0; it < max_ladder_; ++it) {
        if (std::abs(z.imag()) <= base_halfwidth_) {
            if (steps) *steps = it;
            return val * std::exp(log_gamma_base(z));
        }
        double dir = (z.imag() > 0) ? 1.0 : -1.0;
        cplx c1 = z - dir * s1;
        cplx c2 = z - dir * s2;
        auto key = [](cplx c) { return std::make_pair(std::abs(c.imag()), std::abs(c.real())); };
        bool use1 = key(c1) <= key(c2);
        cplx step = use1 ? s1 : s2;
        cplx c = use1 ? c1 : c2;
        cplx oo = use1 ? p.omega_p : p.omega;  // the *other* half-period
        if (z.imag() > 0)
            val *= 1.0 + std::exp(-I * M_PI * (z - 0.5 * step) / oo);
        else
            val /= 1.0 + std::exp(-I * M_PI * (z + 0.5 * step) / oo);
        z = c;
    }
    throw std::runtime_error("gamma: functional-equation ladder exceeded max steps");
}

cplx QDilog::gamma(cplx zeta) const { return gamma_impl(zeta, nullptr); }

GammaResult QDilog::gamma_full(cplx zeta) const {
    GammaResult r;
    int steps = 0;
    r.value = gamma_impl(zeta, &steps);
    r.ladder_steps = steps;

    const RegimeParams& p = params_;
    double smin = std::min(std::abs(2.0 * p.omega), std::abs(2.0 * p.omega_p));
    int P = std::min<int>(
        80, static_cast<int>(std::ceil((std::abs(zeta.real()) + std::abs(zeta.imag())) / smin)) + 2);
    double best_zero = 1e300, best_pole = 1e300;
    for (int a = 0; a <= P; ++a)
        for (int c = 0; c <= P; ++c) {
            cplx site = p.omega_pp + 2.0 * double(a) * p.omega + 2.0 * double(c) * p.omega_p;
            best_zero = std::min(best_zero, std::abs(zeta - site));
            best_pole = std::min(best_pole, std::abs(zeta + site));
        }
    r.lattice_dist = std::min(best_zero, best_pole);
    r.near_zero = best_zero < kLatticeGuard;
    r.near_pole = best_pole < kLatticeGuard;
    return r;
}

double QDilog::d1_residual(cplx z) const {
    cplx lhs = gamma(z + params_.omega_p) / gamma(z - params_.omega_p);
    cplx rhs = 1.0 + std::exp(-I * M_PI * z / params_.omega);
    return std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs) + 1e-300);
}

double QDilog::d2_residual(cplx z) const {
    cplx lhs = gamma(z + params_.omega) / gamma(z - params_.omega);
    cplx rhs = 1.0 + std::exp(-I * M_PI * z / params_.omega_p);
    return std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs) + 1e-300);
}

double QDilog::shift_relation_residual(cplx z) const {
    cplx lhs = gamma(z + params_.omega_pp) / gamma(z - params_.omega_pp);
    cplx rhs = -4.0 * std::exp(2.0 * I * M_PI * z * params_.omega_pp) *
               std::sin(M_PI * z / (2.0 * params_.omega_p)) *
               std::sin(M_PI * z / (2.0 * params_.omega));
    return std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs) + 1e-300);
}

std::vector<cplx> QDilog::zero_lattice(int max_level) const {
    std::vector<cplx> out;
    for (int lvl = 1; lvl <= max_level; ++lvl)
        for (int a = 0; a < lvl; ++a)
            out.push_back(params_.omega_pp + 2.0 * double(a) * params_.omega +
                          2.0 * double(lvl - 1 - a) * params_.omega_p);
    return out;
}

std::vector<cplx> QDilog::pole_lattice(int max_level) const {
    std::vector<cplx> out = zero_lattice(max_level);
    for (auto& z : out) z = -z;
    return out;
}

int QDilog::winding_number(cplx center, double radius, int samples) const {
    if (samples < 16) throw std::invalid_argument("winding_number: too few samples");
    double total = 0;
    cplx prev = gamma(center + radius);
    if (std::abs(prev) < kWindingGuard)
        throw std::runtime_error("winding_number: |gamma| below guard on contour");
    for (int k = 1; k <= samples; ++k) {
        double th = 2.0 * M_PI * k / samples;
        cplx val = gamma(center + radius * std::exp(I * th));
        if (std::abs(val) < kWindingGuard)
            throw std::runtime_error("winding_number: |gamma| below guard on contour");
        total += std::arg(val / prev);
        prev = val;
    }
    double wn = total / (2.0 * M_PI);
    double rounded = std::round(wn);
    if (std::abs(wn - rounded) > 0.1)
        throw std::runtime_error("winding_number: accumulated argument not near an integer");
    return static_cast<int>(rounded);
}

int QDilog::count_zeros_on_level(int n, double radius) const {
    if (n < 1) throw std::invalid_argument("count_zeros_on_level: n >= 1");
    if (radius <= 0) radius = 0.1 * params_.mu;
    int total = 0;
    for (int a = 0; a < n; ++a) {
        cplx site = params_.omega_pp + 2.0 * double(a) * params_.omega +
                    2.0 * double(n - 1 - a) * params_.omega_p;
        total += winding_number(site, radius);
    }
    return total;
}

int QDilog::rectangle_winding(double x0, double x1, double y0, double y1,
                              int samples_per_edge) const {
    std::vector<cplx> pts;
    pts.reserve(4 * samples_per_edge + 1);
    for (int k = 0; k < samples_per_edge; ++k)
        pts.emplace_back(x0 + (x1 - x0) * k / samples_per_edge, y0);
    for (int k = 0; k < samples_per_edge; ++k)
        pts.emplace_back(x1, y0 + (y1 - y0) * k / samples_per_edge);
    for (int k = 0; k < samples_per_edge; ++k)
        pts.emplace_back(x1 - (x1 - x0) * k / samples_per_edge, y1);
    for (int k = 0; k < samples_per_edge; ++k)
        pts.emplace_back(x0, y1 - (y1 - y0) * k / samples_per_edge);
    pts.push_back(pts.front());

    double total = 0;
    cplx prev = gamma(pts[0]);
    if (std::abs(prev) < kWindingGuard)
        throw std::runtime_error("rectangle_winding: |gamma| below guard on contour");
    for (std::size_t k = 1; k < pts.size(); ++k) {
        cplx val = gamma(pts[k]);
        if (std::abs(val) < kWindingGuard)
            throw std::runtime_error("rectangle_winding: |gamma| below guard on contour");
        total += std::arg(val / prev);
        prev = val;
    }
    double wn = total / (2.0 * M_PI);
    double rounded = std::round(wn);
    if (std::abs(wn - rounded) > 0.1)
        throw std::runtime_error("rectangle_winding: accumulated argument not near an integer");
    return static_cast<int>(rounded);
}

}  // namespace mdq
