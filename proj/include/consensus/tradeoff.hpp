#pragma once

#include <cstddef>
#include <vector>

#include "consensus/topology.hpp"

namespace consensus {

// Transmission power model P = (r / sqrt(n))^alpha, alpha > 0.
// Evaluated as (r^2 / n)^(alpha/2) so boundary cases like r = sqrt(n)
// or alpha = 2 come out exact.
double power(int r, std::size_t n, double alpha);

struct FrontierPoint {
    int r = 0;
    double T = 0.0; // convergence time at radius r (enumeration oracle)
    double P = 0.0; // transmission power at radius r
};

struct TradeoffResult {
    int r_star = 0;
    double T_at_r = 0.0;
    double P_at_r = 0.0;
    bool feasible = false;
    std::vector<FrontierPoint> frontier; // all scanned radii, ascending r
};

// Exhaustive scan over integer radii 1..r_max (clipped to radii the
// smallest axis admits), using the family's dims/norm with r replaced.
// Minimize T subject to P(r) <= p_max.  Ties go to the smaller radius.
// Throws InfeasibleError when no radius satisfies the power cap.
TradeoffResult min_time_given_power(const TopologySpec& family, int r_max, double p_max,
                                    double alpha);

// Minimize P subject to T(r) <= t_max; the optimum is the smallest
// feasible radius since P is strictly increasing in r.  Throws
// InfeasibleError when even the largest scanned radius is too slow.
TradeoffResult min_power_given_time(const TopologySpec& family, int r_max, double t_max,
                                    double alpha);

} // namespace consensus
