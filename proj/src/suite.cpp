#include "mdq/suite.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <iomanip>
#include <memory>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include "mdq/kernel.hpp"
#include "mdq/params.hpp"
#include "mdq/qdilog.hpp"
#include "mdq/quad.hpp"
#include "mdq/rep.hpp"
#include "mdq/weyl.hpp"

namespace mdq {

namespace {

const cplx I{0.0, 1.0};

std::string fmt(double v) {
    std::ostringstream out;
    out << std::scientific << std::setprecision(2) << v;
    return out.str();
}

cplx tau_pi3() { return std::polar(1.0, M_PI / 3.0); }
cplx tau_i() { return cplx{0.0, 1.0}; }
cplx tau_2pi5() { return std::polar(1.0, 2.0 * M_PI / 5.0); }

// The four weights of the kernel-identity battery for one parameter set:
// discrete n = 1, 2, 3 (finite product) and a generic spin a = 1.5 omega''
// (gamma quotient).
std::vector<Weight> identity_weights(const RegimeParams& p) {
    std::vector<Weight> ws;
    for (int n = 1; n <= 3; ++n) ws.push_back(product_weight(p, n));
    auto qd = std::make_shared<QDilog>(p);
    ws.push_back(gamma_weight(qd, make_spin(p, 1.5 * p.omega_pp, SpinConvention::Minus)));
    return ws;
}

std::string weight_label(const Weight& wt) {
    std::ostringstream out;
    if (wt.variant == WeightVariant::Product)
        out << "n=" << *wt.spin.n;
    else
        out << "a=" << wt.spin.a.real() << "+" << wt.spin.a.imag() << "i";
    return out.str();
}

// ---- check 1: exact algebra -------------------------------------------------

CheckResult check_exact_algebra() {
    CheckResult res{"01-exact-algebra"};
    Generators g = build_generators();
    RelationResiduals rr = relation_residuals(g);
    AlgebraElement cas = casimir(g);
    AlgebraElement zsum =
        AlgebraElement::monomial({0, 0, 1}) + AlgebraElement::monomial({0, 0, -1});
    bool ok = rr.ke.is_zero() && rr.kf.is_zero() && rr.ef.is_zero() && (cas + zsum).is_zero();
    res.passed = ok;
    res.detail = ok ? "KE-q^2EK, KF-q^-2FK, EF-FE-(K-K^-1)/(q-q^-1), C+Z+Z^-1 all exactly 0"
                    : "nonzero symbolic residual: " + rr.ke.str() + " | " + rr.kf.str() + " | " +
                          rr.ef.str() + " | " + (cas + zsum).str();
    return res;
}

// ---- check 2: dilog shift equations -----------------------------------------

CheckResult check_dilog_shift() {
    CheckResult res{"02-dilog-shift-equations"};
    struct Case {
        cplx tau;
        Regime regime;
        const char* label;
    };
    const Case cases[] = {{tau_pi3(), Regime::II, "e^{i pi/3}"},
                          {tau_i(), Regime::II, "i"},
                          {tau_2pi5(), Regime::II, "e^{2 i pi/5}"},
                          {cplx{2.0, 0.0}, Regime::I, "2"},
                          {cplx{0.5, 0.0}, Regime::I, "1/2"}};
    double worst = 0;
    std::string worst_at;
    for (const Case& c : cases) {
        RegimeParams p = params_from_tau(c.tau, c.regime);
        QDilog qd(p);
        for (double x : linspace(-0.9, 0.9, 10))
            for (double yf : linspace(-0.45, 0.45, 10)) {
                cplx z{x + 0.0137, (yf + 0.0061) * p.mu};
                double r = std::max(qd.d1_residual(z), qd.d2_residual(z));
                if (r > worst) {
                    worst = r;
                    worst_at = c.label;
                }
            }
    }
    res.passed = worst < 1e-8;
    res.detail = "worst d1/d2 residual " + fmt(worst) + " (tau=" + worst_at + "), tol 1e-8";
    return res;
}

// ---- check 3: omega''-shift sine relation -----------------------------------

CheckResult check_sine_shift() {
    CheckResult res{"03-sine-shift-relation"};
    RegimeParams p = params_from_tau(tau_pi3(), Regime::II);
    QDilog qd(p);
    double worst = 0;
    for (double x : linspace(-0.95, 0.95, 10))
        for (double yf : linspace(-0.35, 0.35, 5)) {
            cplx z{x + 0.0137, (yf + 0.0061) * p.mu};
            worst = std::max(worst, qd.shift_relation_residual(z));
        }
    res.passed = worst < 1e-8;
    res.detail = "worst residual over 50 probes " + fmt(worst) + ", tol 1e-8";
    return res;
}

// ---- check 4: zero lattice --------------------------------------------------

CheckResult check_zero_lattice() {
    CheckResult res{"04-zero-lattice"};
    bool ok = true;
    std::ostringstream det;
    for (cplx tau : {tau_i(), tau_pi3()}) {
        RegimeParams p = params_from_tau(tau, Regime::II);
        QDilog qd(p);
        for (int n = 1; n <= 4; ++n) {
            int count = 0;
            bool each_one = true;
            for (int a = 0; a < n; ++a) {
                cplx site = p.omega_pp + 2.0 * double(a) * p.omega +
                            2.0 * double(n - 1 - a) * p.omega_p;
                int w = qd.winding_number(site, 0.1 * p.mu, 128);
                count += w;
                if (w != 1) each_one = false;
            }
            if (count != n || !each_one) {
                ok = false;
                det << " level " << n << ": count " << count << ";";
            }
        }
    }
    res.passed = ok;
    res.detail = ok ? "levels 1..4, both tau: count = n, every winding = 1"
                    : "mismatch:" + det.str();
    return res;
}

// ---- check 5: weight consistency --------------------------------------------

CheckResult check_weight_consistency() {
    CheckResult res{"05-weight-consistency"};
    RegimeParams p = params_from_tau(tau_pi3(), Regime::II);
    auto qd = std::make_shared<QDilog>(p);
    double worst_spread = 0;
    for (int n = 1; n <= 3; ++n) {
        std::vector<cplx> ratios;
        for (double s : linspace(-1.5, 1.5, 20)) {
            cplx t{0.0, s + 0.0123};
            cplx r = phi_gamma(*qd, double(n) * p.omega_pp, t) / phi_product(p, n, t);
            ratios.push_back(r);
        }
        cplx mean{0.0, 0.0};
        for (cplx r : ratios) mean += r;
        mean /= double(ratios.size());
        for (cplx r : ratios)
            worst_spread = std::max(worst_spread, std::abs(r - mean) / std::abs(mean));
    }
    res.passed = worst_spread < 1e-6;
    res.detail = "worst relative spread of phi_gamma/phi_product " + fmt(worst_spread) +
                 " (n=1..3, 20 imaginary-t samples), tol 1e-6";
    return res;
}

// ---- check 6: kernel transport identities -----------------------------------

CheckResult check_kernel_identities() {
    CheckResult res{"06-kernel-identities"};
    double worst = 0;
    std::string worst_lab;
    for (cplx tau : {tau_i(), tau_pi3()}) {
        RegimeParams p = params_from_tau(tau, Regime::II);
        for (const Weight& wt : identity_weights(p)) {
            for (double xw : linspace(-1.3, 1.2, 20))
                for (double xz : linspace(-1.1, 1.4, 20)) {
                    cplx w{xw, 0.05}, z{xz, -0.03};
                    double r = std::max({k_identity_residual(wt, w, z),
                                         e_identity_residual(wt, w, z),
                                         k_identity_dual_residual(wt, w, z),
                                         e_identity_dual_residual(wt, w, z)});
                    if (r > worst) {
                        worst = r;
                        worst_lab = weight_label(wt);
                    }
                }
        }
    }
    res.passed = worst < 1e-8;
    res.detail = "worst K/E identity (+duals) residual " + fmt(worst) + " at weight " + worst_lab +
                 ", 20x20 grid, tol 1e-8";
    return res;
}

// ---- check 7: weight shift equations ----------------------------------------

CheckResult check_weight_shift() {
    CheckResult res{"07-weight-shift-equations"};
    double worst = 0;
    std::string worst_lab;
    for (cplx tau : {tau_i(), tau_pi3()}) {
        RegimeParams p = params_from_tau(tau, Regime::II);
        for (const Weight& wt : identity_weights(p)) {
            for (double x : linspace(-1.1, 1.2, 20)) {
                cplx t{x, 0.04};
                double r = std::max(peq1_residual(wt, t), peq2_residual(wt, t));
                if (r > worst) {
                    worst = r;
                    worst_lab = weight_label(wt);
                }
            }
        }
    }
    res.passed = worst < 1e-8;
    res.detail =
        "worst shift-equation residual " + fmt(worst) + " at weight " + worst_lab + ", tol 1e-8";
    return res;
}

// ---- check 8: positivity ----------------------------------------------------

CheckResult check_positivity() {
    CheckResult res{"08-positivity-scan"};
    RegimeParams p2 = params_from_tau(tau_pi3(), Regime::II);
    double min_II = 1e300;
    for (int n = 2; n <= 4; ++n) {
        Weight wt = product_weight(p2, n);
        double span = (double(n) + 0.5) * p2.mu;
        PositivityScan scan = phi_positivity_scan(wt, 1000, -2.0 * span, 2.0 * span);
        min_II = std::min(min_II, scan.min_value);
    }
    RegimeParams p1 = params_from_tau(cplx{2.0, 0.0}, Regime::I);
    Weight wt1 = product_weight(p1, 2);
    PositivityScan scan1 = phi_positivity_scan(wt1, 1000, -5.0 * p1.mu, 5.0 * p1.mu);
    bool ok = (min_II >= -1e-12) && (scan1.min_value < -1e-3);
    res.passed = ok;
    res.detail = "regime II (n=2..4) min " + fmt(min_II) + " (>= -1e-12); regime I tau=2 n=2 min " +
                 fmt(scan1.min_value) + " (< -1e-3)";
    return res;
}

// ---- check 9: operator algebra on test functions ----------------------------

CheckResult check_operator_algebra() {
    CheckResult res{"09-operator-algebra"};
    RegimeParams p = params_from_tau(tau_pi3(), Regime::II);
    GEPFunction f = random_gep(1.0, 3, 9001);
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> pts;
    for (int k = 0; k < 10; ++k) pts.emplace_back(u(rng), u(rng));

    std::vector<Spin> spins = {discrete_spin(p, 2, SpinConvention::Minus),
                               make_spin(p, cplx{0.37, 0.21}, SpinConvention::Minus)};
    double worst = 0;
    std::string worst_what;
    auto note = [&](double r, const std::string& what) {
        if (r > worst) {
            worst = r;
            worst_what = what;
        }
    };
    for (const Spin& s : spins) {
        GEPFunction uvf = apply_op(Op::U, p, s, apply_op(Op::V, p, s, f));
        GEPFunction vuf = apply_op(Op::V, p, s, apply_op(Op::U, p, s, f));
        for (cplx z : pts) {
            cplx a = uvf(z), b = p.q * p.q * vuf(z);
            note(std::abs(a - b) / (std::abs(a) + std::abs(b) + 1e-300), "weyl uv=q^2vu");
            for (Op plain : {Op::E, Op::F, Op::K, Op::Kinv})
                for (Op til : {Op::Et, Op::Ft, Op::Kt, Op::Ktinv})
                    note(commutator_residual(plain, til, p, s, f, z),
                         std::string("[") + op_name(plain) + "," + op_name(til) + "]");
            note(casimir_pointwise_residual(p, s, f, z), "casimir");
        }
    }
    res.passed = worst < 1e-10;
    res.detail = "worst pointwise residual " + fmt(worst) + " (" + worst_what + "), tol 1e-10";
    return res;
}

// ---- check 10: strip Hermiticity --------------------------------------------

CheckResult check_strip_hermiticity() {
    CheckResult res{"10-strip-hermiticity"};
    RegimeParams p = params_from_tau(tau_pi3(), Regime::II);
    Weight wt = product_weight(p, 3);
    const double sigma = 2.0;
    const cplx beta0 = 2.0 * sigma * I * (1.5 * p.mu);  // mass centered mid-strip
    GEPFunction f(sigma, beta0);
    GEPFunction g = GEPFunction(sigma, beta0, 0, cplx{0.7, 0.0}) +
                    GEPFunction(sigma, beta0, 1, cplx{0.4, 0.0});
    Band b5{5.0, p.mu, 2.0 * p.mu, 96, 48};
    Band b7{7.0, p.mu, 2.0 * p.mu, 96, 48};

    struct Pair {
        Op left, right;
        const char* label;
    };
    const Pair pairs[] = {{Op::Kt, Op::K, "(K~,K)"}, {Op::Et, Op::E, "(E~,E)"},
                          {Op::Ft, Op::F, "(F~,F)"}};
    bool ok = true;
    std::ostringstream det;
    for (const Pair& pr : pairs) {
        double r5 = hermiticity_residual(wt, b5, pr.left, pr.right, f, g);
        double r7 = hermiticity_residual(wt, b7, pr.left, pr.right, f, g);
        bool pass = (r5 < 1e-3) && (r7 <= 0.1 * r5 + 1e-15);
        ok = ok && pass;
        det << pr.label << " r(X=5)=" << fmt(r5) << " r(X=7)=" << fmt(r7)
            << (pass ? " ok; " : " FAIL; ");
    }
    res.passed = ok;
    res.detail = det.str() + "tol 1e-3 and 10x shrink";
    return res;
}

// ---- check 11: Gram positivity ----------------------------------------------

CheckResult check_gram_positivity() {
    CheckResult res{"11-gram-positivity"};
    RegimeParams p = params_from_tau(tau_pi3(), Regime::II);
    Weight wt = product_weight(p, 3);
    const double sigma = 2.0;
    const cplx beta0 = 2.0 * sigma * I * (1.5 * p.mu);
    Band band{5.0, p.mu, 2.0 * p.mu, 96, 48};
    // Unit-diagonal scaling (a congruence, so eigenvalue signs are untouched)
    // keeps the spectrum O(1) instead of spreading over ~16 decades.
    std::vector<GEPFunction> basis;
    for (int k = 0; k < 8; ++k) {
        GEPFunction raw(sigma, beta0, k);
        double nrm = std::sqrt(std::abs(inner_product(wt, band, raw, raw)));
        basis.push_back(raw.scaled(cplx{1.0 / nrm, 0.0}));
    }
    GramResult gr = gram_matrix(wt, band, basis);
    double lo = gr.eigenvalues.front(), hi = gr.eigenvalues.back();
    res.passed = (hi > 0) && (lo >= -1e-6 * hi);
    res.detail = "unit-diagonal eigenvalues in [" + fmt(lo) + ", " + fmt(hi) +
                 "], hermiticity defect " + fmt(gr.hermiticity_defect) + ", need min >= -1e-6*max";
    return res;
}

// ---- check 12: degenerate series --------------------------------------------

CheckResult check_degenerate_series() {
    CheckResult res{"12-degenerate-series"};
    RegimeParams p = params_from_tau(cplx{4.0, 0.0}, Regime::I);
    ContinuousCheck cc = continuous_series_check(p);
    res.passed = (cc.u_residual < 1e-8) && (cc.v_residual < 1e-8);
    res.detail = "u residual " + fmt(cc.u_residual) + ", v residual " + fmt(cc.v_residual) +
                 ", tol 1e-8; <f,f> = " + fmt(cc.norm_value);
    return res;
}

}  // namespace

std::vector<CheckSpec> suite_checks() {
    return {
        {"01-exact-algebra", check_exact_algebra},
        {"02-dilog-shift-equations", check_dilog_shift},
        {"03-sine-shift-relation", check_sine_shift},
        {"04-zero-lattice", check_zero_lattice},
        {"05-weight-consistency", check_weight_consistency},
        {"06-kernel-identities", check_kernel_identities},
        {"07-weight-shift-equations", check_weight_shift},
        {"08-positivity-scan", check_positivity},
        {"09-operator-algebra", check_operator_algebra},
        {"10-strip-hermiticity", check_strip_hermiticity},
        {"11-gram-positivity", check_gram_positivity},
        {"12-degenerate-series", check_degenerate_series},
    };
}

std::vector<CheckResult> run_suite(bool fail_fast, std::ostream& log) {
    std::vector<CheckResult> results;
    for (const CheckSpec& cs : suite_checks()) {
        auto t0 = std::chrono::steady_clock::now();
        CheckResult r;
        try {
            r = cs.run();
        } catch (const std::exception& e) {
            r.name = cs.name;
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        log << "[" << r.name << "] " << (r.passed ? "PASS" : "FAIL") << "  ("
            << std::fixed << std::setprecision(2) << r.elapsed_s << "s)  " << r.detail << "\n";
        log.flush();
        results.push_back(std::move(r));
        if (fail_fast && !results.back().passed) break;
    }
    return results;
}

}  // namespace mdq
