// Noncompact quantum dilogarithm gamma(zeta) for a fixed parameter set:
// contour-integral evaluation on a base strip, functional-equation ladder
// outside it, zero/pole lattice bookkeeping and winding-number zero counts.
#pragma once

#include <string>
#include <vector>

#include "mdq/params.hpp"

namespace mdq {

struct GammaResult {
    cplx value{0.0, 0.0};
    int ladder_steps = 0;       // functional-equation steps taken
    double lattice_dist = 0;    // distance from zeta to nearest zero/pole site
    bool near_zero = false;     // within guard radius of a lattice zero
    bool near_pole = false;     // within guard radius of a lattice pole
};

// Calibration facts fixed when the evaluator is constructed.
struct QDilogCalibration {
    double contour_height = 0;    // Im w of the integration line
    double contour_halfwidth = 0; // T: integrate over [-T, T] + i*height
    double decay_rate = 0;        // integrand decay exponent at the strip edge
    double base_residual = 0;     // worst shift-equation residual on a probe set
};

class QDilog {
  public:
    // nodes: trapezoid node count for the contour integral.
    // base_halfwidth: evaluate directly for |Im zeta| <= base_halfwidth
    //   (default picks half the first zero height, mu/2).
    // Construction runs a small calibration: probes the shift equations on the
    // base strip and records the worst residual; throws if it exceeds 1e-10.
    explicit QDilog(const RegimeParams& p, int nodes = 2048, double base_halfwidth = -1.0,
                    int max_ladder = 64);

    const RegimeParams& params() const { return params_; }
    const QDilogCalibration& calibration() const { return calib_; }
    int nodes() const { return nodes_; }

    cplx gamma(cplx zeta) const;
    GammaResult gamma_full(cplx zeta) const;

    // Residuals of the two shift equations, normalized by |lhs| + |rhs|:
    //   gamma(z - omega')/gamma(z + omega') = 1 + e^{pi i z / omega} ... etc.
    double d1_residual(cplx zeta) const;  // shift by omega' (step 2*omega')
    double d2_residual(cplx zeta) const;  // shift by omega  (step 2*omega)

    // gamma(z + omega'')/gamma(z - omega'') vs
    //   -4 e^{2 pi i z omega''} sin(pi z / 2 omega') sin(pi z / 2 omega).
    double shift_relation_residual(cplx zeta) const;

    // Zero sites omega'' + 2 p omega + 2 r omega' (p, r >= 0); poles are the
    // mirror image below.  Level n collects the zeros with p + r = n - 1; on
    // the unit circle (regime II) they all sit at height Im = n * mu.
    std::vector<cplx> zero_lattice(int max_level) const;
    std::vector<cplx> pole_lattice(int max_level) const;

    // Winding number of gamma around a circle; samples >= 64 recommended.
    // Throws if |gamma| dips below the guard (circle too close to a zero/pole).
    int winding_number(cplx center, double radius, int samples = 256) const;

    // Count zeros (with multiplicity, via winding) on level n: circles around
    // the lattice sites p + r = n - 1.  Radius defaults to 0.1 * mu.
    int count_zeros_on_level(int n, double radius = -1.0) const;

    // Winding around a rectangle in the lower half plane; with no zeros there
    // the result is minus the number of enclosed poles.
    int rectangle_winding(double x0, double x1, double y0, double y1,
                          int samples_per_edge = 400) const;

  private:
    cplx log_gamma_base(cplx zeta) const;   // contour integral, base strip only
    cplx gamma_impl(cplx zeta, int* steps) const;
    RegimeParams params_;
    int nodes_;
    int max_ladder_;
    double base_halfwidth_;
    cplx b_, b_inv_;                 // b = -2i omega', 1/b = -2i omega
    double contour_d_ = 0;
    double contour_T_ = 0;
    std::vector<double> tnodes_;     // contour abscissae (fixed per instance)
    std::vector<cplx> den_inv_;      // 1 / (sinh(w b) sinh(w/b) w) on the contour
    QDilogCalibration calib_;
};

}  // namespace mdq
