#include "consensus/tradeoff.hpp"

#include "consensus/errors.hpp"
#include "consensus/optimal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace consensus {

namespace {

std::string num_str(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

} // namespace

double power(int r, std::size_t n, double alpha) {
    if (r < 1) throw OutOfRangeError("radius must be a positive integer");
    if (n < 1) throw OutOfRangeError("node count must be positive");
    if (!(alpha > 0.0)) throw OutOfRangeError("path-loss exponent must be positive");
    const double q = static_cast<double>(r) * static_cast<double>(r) / static_cast<double>(n);
    return std::pow(q, 0.5 * alpha);
}

namespace {

std::vector<FrontierPoint> scan_frontier(const TopologySpec& family, int r_max,
                                         double alpha) {
    if (family.dims.empty()) throw InvalidSpecError("need at least one dimension");
    if (r_max < 1) throw OutOfRangeError("radius bound must be a positive integer");

    const int k_min = *std::min_element(family.dims.begin(), family.dims.end());
    const int r_cap = std::min(r_max, (k_min - 1) / 2); // largest radius the lattice admits
    if (r_cap < 1)
        throw InvalidSpecError("smallest axis admits no positive radius (needs >= 3 nodes)");

    const std::size_t n = node_count(family);
    std::vector<FrontierPoint> frontier;
    frontier.reserve(static_cast<std::size_t>(r_cap));
    for (int r = 1; r <= r_cap; ++r) {
        const TopologySpec spec = make_spec(family.dims, r, family.norm);
        FrontierPoint pt;
        pt.r = r;
        pt.T = oracle_optimal(spec).T;
        pt.P = power(r, n, alpha);
        frontier.push_back(pt);
    }
    return frontier;
}

TradeoffResult pick(std::vector<FrontierPoint> frontier, std::size_t best) {
    TradeoffResult res;
    res.r_star = frontier[best].r;
    res.T_at_r = frontier[best].T;
    res.P_at_r = frontier[best].P;
    res.feasible = true;
    res.frontier = std::move(frontier);
    return res;
}

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

} // namespace

TradeoffResult min_time_given_power(const TopologySpec& family, int r_max, double p_max,
                                    double alpha) {
    std::vector<FrontierPoint> frontier = scan_frontier(family, r_max, alpha);
    std::size_t best = kNone;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        if (frontier[i].P > p_max) continue;
        if (best == kNone || frontier[i].T < frontier[best].T) best = i;
    }
    if (best == kNone)
        throw InfeasibleError("no radius meets the power cap " + num_str(p_max));
    return pick(std::move(frontier), best);
}

TradeoffResult min_power_given_time(const TopologySpec& family, int r_max, double t_max,
                                    double alpha) {
    std::vector<FrontierPoint> frontier = scan_frontier(family, r_max, alpha);
    std::size_t best = kNone;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        if (frontier[i].T > t_max) continue;
        if (best == kNone || frontier[i].P < frontier[best].P) best = i;
    }
    if (best == kNone)
        throw InfeasibleError("no radius meets the time cap " + num_str(t_max));
    return pick(std::move(frontier), best);
}

} // namespace consensus
