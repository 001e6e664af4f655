#pragma once

#include "consensus/spectra.hpp"
#include "consensus/topology.hpp"

namespace consensus {

enum class Method { ClosedForm, Oracle };

struct OptimalParams {
    double h = 0.0;     // consensus parameter (uniform link weight)
    double gamma = 0.0; // per-iteration error contraction factor, in [0, 1)
    double T = 0.0;     // iterations per e-fold error reduction
    Method method = Method::Oracle;
};

// sin((r + 1/2) x) / sin(x / 2); returns 2r+1 where sin(x/2) vanishes.
// The product (r + 1/2) * x is error-compensated so the quotient stays
// accurate near the wrap-around points of the denominator.
double dirichlet_kernel(int r, double x);

// The defining identity's other side: 1 + 2 sum_{j=1..r} cos(j x),
// compensated summation.  Agrees with dirichlet_kernel to ~1e-13.
double dirichlet_cosine_sum(int r, double x);

// T = 1/ln(1/gamma), with T(0) = 0.  Throws OutOfRangeError unless
// 0 <= gamma < 1.
double convergence_time(double gamma);

// Contraction factor for an arbitrary step size h given the extreme
// Laplacian eigenvalues: max(|1 - h*lambda2|, |1 - h*lambdaN|), snapped
// to exactly 0 when both terms vanish to fp noise (complete graphs).
double contraction_factor(double h, double lambda2, double lambdaN);

// Ground truth: h = 2/(lambda2 + lambdaN) from exact spectrum
// enumeration, gamma = contraction_factor at that h, T from gamma.
OptimalParams oracle_optimal(const TopologySpec& spec);

// Closed forms for the per-axis family, dispatched on dimension count
// and on the shared parity of the axis sizes.  They evaluate the
// spectrum extremes at the band-edge frequency indices; enumeration
// shows that assumption holds for r = 1 but fails for r >= 2 on large
// lattices (see tests), so always compare with oracle_optimal.
// Throws UnsupportedParityError for mixed even/odd dims and
// InvalidSpecError for non-PerAxis norms.
double closed_form_h(const TopologySpec& spec);
double closed_form_gamma(const TopologySpec& spec);
OptimalParams closed_form_optimal(const TopologySpec& spec);

} // namespace consensus
