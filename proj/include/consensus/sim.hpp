#pragma once

#include <cstdint>
#include <vector>

#include "consensus/topology.hpp"

namespace consensus {

struct ConsensusState {
    std::vector<double> x;   // node values x_i(t)
    std::int64_t t = 0;      // iteration counter
    double x_avg = 0.0;      // invariant average of x(0)
};

// x(0) i.i.d. uniform on [0, 1) from a seeded 64-bit Mersenne Twister;
// identical seed, identical state.
ConsensusState init_state(const TopologySpec& spec, std::uint64_t seed);

// x(0) = value on every node (consensus fixed point; e(0) = 0).
ConsensusState init_constant_state(const TopologySpec& spec, double value);

// One synchronous update x_i += h * sum_{j in N(i)} (x_j - x_i),
// algebraically the weight-matrix product (I - hL) x without
// materializing the matrix.
ConsensusState step(const ConsensusState& state, const TopologySpec& spec, double h);

struct SimReport {
    std::int64_t iterations = 0;       // steps until e(t) <= eps * e(0)
    std::vector<double> error_trace;   // e(t) = ||x(t) - x_avg*1||_2, t = 0..iterations
    double fitted_contraction = 0.0;   // exp of the least-squares slope of ln e(t) tail
    double avg_residual = 0.0;         // max_t |mean(x(t)) - x_avg|
    std::uint64_t seed = 0;            // seed used for x(0) (0 for constant starts)
};

// Iterates until the error drops below eps * e(0).  Throws
// NoConvergenceError if the budget t_max is exhausted or the error
// diverges (bad h).  The contraction fit uses the final third of the
// trace, at least 30 points when available.
SimReport run(const TopologySpec& spec, double h, std::uint64_t seed, double eps,
              std::int64_t t_max = 1000000);

// Same, starting from an explicit state (e.g. a constant start).
SimReport run_from(const TopologySpec& spec, ConsensusState state, double h, double eps,
                   std::int64_t t_max = 1000000, std::uint64_t seed_label = 0);

} // namespace consensus
