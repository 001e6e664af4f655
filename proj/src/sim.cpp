#include "consensus/sim.hpp"

#include "consensus/errors.hpp"

#include <cmath>
#include <random>
#include <string>
#include <utility>

namespace consensus {

namespace {

double mean(const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v;
    return s / static_cast<double>(x.size());
}

double deviation_norm(const std::vector<double>& x, double avg) {
    double s = 0.0;
    for (double v : x) {
        const double d = v - avg;
        s += d * d;
    }
    return std::sqrt(s);
}

void step_into(const std::vector<double>& x, const NeighborList& nl, double h,
               std::vector<double>& out) {
    const double deg = static_cast<double>(nl.degree);
    for (std::size_t u = 0; u < x.size(); ++u) {
        double acc = 0.0;
        for (std::size_t e = nl.row_ptr[u]; e < nl.row_ptr[u + 1]; ++e)
            acc += x[nl.col[e]];
        out[u] = x[u] + h * (acc - deg * x[u]);
    }
}

// Least-squares slope of ln e(t) over the last max(30, L/3) trace
// points; 0 when fewer than two usable (positive, finite) points.
double fit_tail_contraction(const std::vector<double>& trace) {
    const std::size_t len = trace.size();
    std::size_t window = std::max<std::size_t>(30, len / 3);
    if (window > len) window = len;
    const std::size_t start = len - window;

    double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
    std::size_t cnt = 0;
    for (std::size_t i = start; i < len; ++i) {
        if (!(trace[i] > 0.0) || !std::isfinite(trace[i])) continue;
        const double t = static_cast<double>(i);
        const double y = std::log(trace[i]);
        st += t;
        sy += y;
        stt += t * t;
        sty += t * y;
        ++cnt;
    }
    if (cnt < 2) return 0.0;
    const double c = static_cast<double>(cnt);
    const double denom = c * stt - st * st;
    if (denom == 0.0) return 0.0;
    const double slope = (c * sty - st * sy) / denom;
    return std::exp(slope);
}

} // namespace

ConsensusState init_state(const TopologySpec& spec, std::uint64_t seed) {
    validate(spec);
    ConsensusState state;
    state.x.resize(node_count(spec));
    std::mt19937_64 gen(seed);
    for (double& v : state.x)
        v = static_cast<double>(gen() >> 11) * 0x1.0p-53; // uniform [0, 1)
    state.t = 0;
    state.x_avg = mean(state.x);
    return state;
}

ConsensusState init_constant_state(const TopologySpec& spec, double value) {
    validate(spec);
    ConsensusState state;
    state.x.assign(node_count(spec), value);
    state.t = 0;
    state.x_avg = value;
    return state;
}

ConsensusState step(const ConsensusState& state, const TopologySpec& spec, double h) {
    const NeighborList nl = neighbor_list(spec);
    ConsensusState next;
    next.x.resize(state.x.size());
    step_into(state.x, nl, h, next.x);
    next.t = state.t + 1;
    next.x_avg = state.x_avg;
    return next;
}

SimReport run(const TopologySpec& spec, double h, std::uint64_t seed, double eps,
              std::int64_t t_max) {
    return run_from(spec, init_state(spec, seed), h, eps, t_max, seed);
}

SimReport run_from(const TopologySpec& spec, ConsensusState state, double h, double eps,
                   std::int64_t t_max, std::uint64_t seed_label) {
    validate(spec);
    if (!(eps > 0.0 && eps < 1.0)) throw OutOfRangeError("eps must lie in (0, 1)");
    if (t_max < 0) throw OutOfRangeError("iteration budget must be nonnegative");

    const NeighborList nl = neighbor_list(spec);

    SimReport report;
    report.seed = seed_label;

    const double e0 = deviation_norm(state.x, state.x_avg);
    report.error_trace.push_back(e0);
    report.avg_residual = std::abs(mean(state.x) - state.x_avg);
    const double threshold = eps * e0;
    const double blowup = 1e8 * e0;

    std::vector<double> next(state.x.size());
    std::int64_t t = 0;
    double e = e0;
    while (e > threshold) {
        if (t == t_max)
            throw NoConvergenceError("no convergence within " + std::to_string(t_max) +
                                     " iterations");
        step_into(state.x, nl, h, next);
        state.x.swap(next);
        ++t;
        e = deviation_norm(state.x, state.x_avg);
        report.error_trace.push_back(e);
        report.avg_residual =
            std::max(report.avg_residual, std::abs(mean(state.x) - state.x_avg));
        if (!std::isfinite(e) || e > blowup)
            throw NoConvergenceError("error diverged after " + std::to_string(t) +
                                     " iterations (contraction factor >= 1?)");
    }

    report.iterations = t;
    report.fitted_contraction = fit_tail_contraction(report.error_trace);
    return report;
}

} // namespace consensus
