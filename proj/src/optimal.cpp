#include "consensus/optimal.hpp"

#include "consensus/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace consensus {

namespace {

constexpr double kPi = std::numbers::pi;

// Below this, a contraction factor is fp residue of an exactly-zero
// quantity (complete graphs), not a real rate.
constexpr double kGammaFloor = 1e-12;

double snap_tiny(double gamma) { return std::abs(gamma) < kGammaFloor ? 0.0 : gamma; }

// sin(a*x) with the product error folded back in to first order.
double sin_of_product(double a, double x) {
    const double p = a * x;
    const double e = std::fma(a, x, -p); // exact rounding error of a*x
    return std::sin(p) + e * std::cos(p);
}

double cos_of_product(double a, double x) {
    const double p = a * x;
    const double e = std::fma(a, x, -p);
    return std::cos(p) - e * std::sin(p);
}

enum class Parity { Even, Odd };

Parity shared_parity(const TopologySpec& spec) {
    const int first = spec.dims.front() % 2;
    for (int k : spec.dims) {
        if (k % 2 != first)
            throw UnsupportedParityError(
                "closed forms need all-even or all-odd axis sizes; use the oracle");
    }
    return first == 0 ? Parity::Even : Parity::Odd;
}

struct ClosedTerms {
    int m = 0;
    int r = 0;
    Parity parity = Parity::Even;
    double S = 0.0;        // kernel at the fundamental of the largest axis
    double sum_edge = 0.0; // sum over axes of the band-edge kernel value
    double C = 0.0;        // odd-cycle corner term (m = 1 only)
    double cos_pi_r = 0.0; // (-1)^r
};

// The band-edge terms shared by all the closed forms.  The
// second-smallest eigenvalue term lives on the axis with the largest
// k_i (that choice minimizes the smallest positive eigenvalue); the
// largest-eigenvalue term gets one band-edge contribution per axis.
ClosedTerms closed_terms(const TopologySpec& spec) {
    validate(spec);
    if (spec.norm != Norm::PerAxis)
        throw InvalidSpecError("closed forms apply to the per-axis rule only");

    ClosedTerms t;
    t.m = spec.m;
    t.r = spec.r;
    t.parity = shared_parity(spec);
    t.cos_pi_r = (spec.r % 2 == 0) ? 1.0 : -1.0;

    int k_max = spec.dims.front();
    for (int k : spec.dims) k_max = std::max(k_max, k);
    t.S = dirichlet_kernel(spec.r, 2.0 * kPi / k_max);

    if (t.parity == Parity::Even) {
        t.sum_edge = spec.m * t.cos_pi_r; // kernel at x = pi is (-1)^r
    } else {
        for (int k : spec.dims)
            t.sum_edge += dirichlet_kernel(spec.r, kPi * (k - 1) / k);
        if (spec.m == 1) {
            const int n = spec.dims.front();
            t.C = cos_of_product(0.5 * (2 * spec.r + 1), kPi / n) /
                  std::cos(0.5 * kPi / n);
        }
    }
    return t;
}

double closed_h(const ClosedTerms& t) {
    const double rh = t.r + 0.5;
    if (t.m == 1) {
        if (t.parity == Parity::Even)
            return 1.0 / (2.0 * t.r + 1.0 - 0.5 * (t.S + t.cos_pi_r));
        return 1.0 / (2.0 * t.r + 1.0 - 0.5 * (t.S - t.C));
    }
    if (t.m == 2) {
        if (t.parity == Parity::Even)
            return 1.0 / (1.5 + 3.0 * t.r - 0.5 * (t.S + 2.0 * t.cos_pi_r));
        return 1.0 / (1.5 + 3.0 * t.r - 0.5 * (t.S + t.sum_edge));
    }
    if (t.parity == Parity::Even)
        return 1.0 / ((t.m + 1) * rh - 0.5 * t.S - 0.5 * t.m * t.cos_pi_r);
    return 1.0 / ((t.m + 1) * rh - 0.5 * (t.S + t.sum_edge));
}

double closed_gamma(const ClosedTerms& t) {
    const double rh = t.r + 0.5;
    double g;
    if (t.m == 1) {
        if (t.parity == Parity::Even)
            g = (t.S - t.cos_pi_r) / (4.0 * t.r + 2.0 - (t.S + t.cos_pi_r));
        else
            g = (t.S + t.C) / (4.0 * t.r + 2.0 - (t.S - t.C));
    } else if (t.m == 2) {
        if (t.parity == Parity::Even)
            g = (rh + 0.5 * (t.S - 2.0 * t.cos_pi_r)) /
                (1.5 + 3.0 * t.r - 0.5 * (t.S + 2.0 * t.cos_pi_r));
        else
            g = (rh + 0.5 * (t.S - t.sum_edge)) /
                (1.5 + 3.0 * t.r - 0.5 * (t.S + t.sum_edge));
    } else if (t.parity == Parity::Even) {
        g = ((t.m - 1) * rh + 0.5 * t.S - 0.5 * t.m * t.cos_pi_r) /
            ((t.m + 1) * rh - 0.5 * t.S - 0.5 * t.m * t.cos_pi_r);
    } else {
        g = ((t.m - 1) * rh + 0.5 * (t.S - t.sum_edge)) /
            ((t.m + 1) * rh - 0.5 * (t.S + t.sum_edge));
    }
    return snap_tiny(g);
}

} // namespace

double dirichlet_kernel(int r, double x) {
    if (r < 1) throw OutOfRangeError("kernel order must be a positive integer");
    const double den = std::sin(0.5 * x);
    if (den == 0.0) return 2.0 * r + 1.0;
    return sin_of_product(r + 0.5, x) / den;
}

double dirichlet_cosine_sum(int r, double x) {
    if (r < 1) throw OutOfRangeError("kernel order must be a positive integer");
    double sum = 1.0, comp = 0.0;
    for (int j = 1; j <= r; ++j) {
        const double term = 2.0 * cos_of_product(static_cast<double>(j), x);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

double convergence_time(double gamma) {
    if (!(gamma >= 0.0 && gamma < 1.0))
        throw OutOfRangeError("contraction factor must lie in [0, 1)");
    if (gamma == 0.0) return 0.0;
    return -1.0 / std::log(gamma);
}

double contraction_factor(double h, double lambda2, double lambdaN) {
    const double g = std::max(std::abs(1.0 - h * lambda2), std::abs(1.0 - h * lambdaN));
    return snap_tiny(g);
}

OptimalParams oracle_optimal(const TopologySpec& spec) {
    const SpectralSummary s = extremal_eigenvalues(spec);
    OptimalParams p;
    p.method = Method::Oracle;
    p.h = 2.0 / (s.lambda2_L + s.lambdaN_L);
    p.gamma = contraction_factor(p.h, s.lambda2_L, s.lambdaN_L);
    p.T = convergence_time(p.gamma);
    return p;
}

double closed_form_h(const TopologySpec& spec) { return closed_h(closed_terms(spec)); }

double closed_form_gamma(const TopologySpec& spec) { return closed_gamma(closed_terms(spec)); }

OptimalParams closed_form_optimal(const TopologySpec& spec) {
    const ClosedTerms t = closed_terms(spec);
    OptimalParams p;
    p.method = Method::ClosedForm;
    p.h = closed_h(t);
    p.gamma = closed_gamma(t);
    p.T = convergence_time(p.gamma);
    return p;
}

} // namespace consensus
