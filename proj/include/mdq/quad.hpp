// Small numeric utilities shared across modules: pairwise (cascade) summation,
// Gauss-Legendre rules, golden-section minimization.
#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace mdq {

using cplx = std::complex<double>;

// Sum with a fixed pairwise reduction tree.  The result depends only on the
// order of the input values, never on thread count or chunking, so parallel
// producers that fill the buffer in index order get bit-reproducible sums.
double pairwise_sum(const std::vector<double>& v);
cplx pairwise_sum(const std::vector<cplx>& v);

struct GaussLegendre {
    std::vector<double> x;  // nodes on (-1, 1)
    std::vector<double> w;  // weights, sum to 2
};

// Nodes/weights by Newton iteration on the Legendre recurrence; cached per n.
const GaussLegendre& gauss_legendre(int n);

std::vector<double> linspace(double a, double b, int n);

// Golden-section minimizer for unimodal f on [a,b]; returns the minimizer
// location after the bracket has shrunk below xtol.
double golden_min(const std::function<double(double)>& f, double a, double b, double xtol);

}  // namespace mdq
