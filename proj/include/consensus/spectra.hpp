#pragma once

#include <cstddef>
#include <vector>

#include "consensus/topology.hpp"

namespace consensus {

// Frequency multi-index (j_1..j_m), 0 <= j_i < k_i.  Each index labels
// one eigenvector of every translation-invariant operator on the
// lattice; the all-zeros index labels the constant vector.
using EigenIndex = std::vector<int>;

struct SpectralSummary {
    double lambda2_L = 0.0;   // second-smallest Laplacian eigenvalue
    double lambdaN_L = 0.0;   // largest Laplacian eigenvalue
    EigenIndex arg2_index;    // index attaining lambda2_L
    EigenIndex argmax_index;  // index attaining lambdaN_L
    std::size_t n = 0;        // eigenvalues enumerated (= node count)
};

// Laplacian eigenvalue at a frequency index, evaluated from the offset
// stencil: lambda = 2 * sum_{o in offsets} sin^2(pi * sum_i j_i o_i / k_i).
// Each term is nonnegative, so lambda in [0, 2*degree] holds exactly.
double laplacian_eigenvalue(const TopologySpec& spec, const EigenIndex& idx);

// Weight-matrix eigenvalue (1 - 2mrh) + 2h sum_{i,j} cos(2 pi j_i j / k_i)
// for the per-axis rule; equals 1 - h * laplacian_eigenvalue within fp error.
double weight_eigenvalue(const TopologySpec& spec, double h, const EigenIndex& idx);

// Exact extremes of the Laplacian spectrum by enumerating all prod(k_i)
// frequency indices in row-major order (first index wins ties).
// Throws DisconnectedError if some nonzero index has eigenvalue <= 1e-12.
SpectralSummary extremal_eigenvalues(const TopologySpec& spec);

// Independent check of the closed eigenvalue formulas against the graph:
// applies the sparse Laplacian to the cosine wave of frequency `idx` and
// returns the max-norm residual ||L v - lambda v||_inf.
double verify_eigenpair(const TopologySpec& spec, const EigenIndex& idx);

} // namespace consensus
