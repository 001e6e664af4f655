#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "consensus/errors.hpp"
#include "consensus/optimal.hpp"
#include "consensus/spectra.hpp"
#include "consensus/topology.hpp"

using namespace consensus;

namespace {

constexpr double kPi = std::numbers::pi;

doctest::Approx near(double v, double eps = 1e-12) {
    return doctest::Approx(v).epsilon(eps);
}

TopologySpec ring(int n, int r) { return make_spec({n}, r); }

// h and gamma evaluated straight from the band-edge frequency indices
// (fundamental on the largest axis; midpoint of every axis), without
// any kernel simplification.  The closed forms must collapse to this.
std::pair<double, double> band_edge_direct(const TopologySpec& spec) {
    std::size_t largest = 0;
    for (std::size_t i = 0; i < spec.dims.size(); ++i)
        if (spec.dims[i] > spec.dims[largest]) largest = i;

    EigenIndex lo(spec.dims.size(), 0);
    lo[largest] = 1;
    EigenIndex hi(spec.dims.size());
    for (std::size_t i = 0; i < spec.dims.size(); ++i) hi[i] = spec.dims[i] / 2;

    const double l2 = laplacian_eigenvalue(spec, lo);
    const double ln = laplacian_eigenvalue(spec, hi);
    const double h = 2.0 / (l2 + ln);
    return {h, (ln - l2) / (ln + l2)};
}

} // namespace

TEST_SUITE("optimal") {

TEST_CASE("kernel values at textbook points") {
    CHECK(dirichlet_kernel(1, kPi) == near(-1.0, 1e-14));               // 1 + 2cos(pi)
    CHECK(dirichlet_kernel(2, 2.0 * kPi / 5.0) == near(0.0, 1e-14));    // root-of-unity sum
    CHECK(dirichlet_kernel(3, 0.0) == 7.0); // limit 2r+1 at the exact singularity
    // 2*pi rounded to double is *not* singular; the quotient self-corrects
    CHECK(dirichlet_kernel(5, 2.0 * kPi) == near(11.0, 1e-9));
    CHECK_THROWS_AS(dirichlet_kernel(0, 1.0), OutOfRangeError);
}

TEST_CASE("kernel equals its defining cosine sum across the period") {
    std::mt19937_64 rng(20240815);
    std::uniform_real_distribution<double> xdist(1e-6, 2.0 * kPi - 1e-6);
    for (int trial = 0; trial < 2000; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 50);
        const double x = xdist(rng);
        CHECK(std::abs(dirichlet_kernel(r, x) - dirichlet_cosine_sum(r, x)) <= 1e-12);
    }
    // adversarial band: just outside the excluded neighborhoods of 0 and 2*pi
    std::uniform_real_distribution<double> edge(1e-6, 1e-4);
    for (int trial = 0; trial < 500; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 50);
        const double d = edge(rng);
        CHECK(std::abs(dirichlet_kernel(r, d) - dirichlet_cosine_sum(r, d)) <= 1e-12);
        CHECK(std::abs(dirichlet_kernel(r, 2.0 * kPi - d) -
                       dirichlet_cosine_sum(r, 2.0 * kPi - d)) <= 1e-12);
    }
}

TEST_CASE("convergence time convention") {
    CHECK(convergence_time(0.0) == 0.0);
    CHECK(convergence_time(1.0 / std::exp(1.0)) == near(1.0, 1e-14));
    CHECK(convergence_time(1.0 / 3.0) == near(1.0 / std::log(3.0), 1e-14));
    // strictly increasing
    CHECK(convergence_time(0.5) < convergence_time(0.6));
    CHECK_THROWS_AS(convergence_time(1.0), OutOfRangeError);
    CHECK_THROWS_AS(convergence_time(-0.1), OutOfRangeError);
    CHECK_THROWS_AS(convergence_time(std::nan("")), OutOfRangeError);
}

TEST_CASE("oracle on frozen cases") {
    SUBCASE("ring of 4") {
        const OptimalParams p = oracle_optimal(ring(4, 1));
        CHECK(p.h == near(1.0 / 3.0));
        CHECK(p.gamma == near(1.0 / 3.0));
        CHECK(p.method == Method::Oracle);
    }
    SUBCASE("complete graph on 5 nodes snaps gamma to zero") {
        const OptimalParams p = oracle_optimal(ring(5, 2));
        CHECK(p.h == near(0.2));
        CHECK(p.gamma == 0.0);
        CHECK(p.T == 0.0);
    }
    SUBCASE("4x4 torus") {
        const OptimalParams p = oracle_optimal(make_spec({4, 4}, 1));
        CHECK(p.h == near(0.2));
        CHECK(p.gamma == near(0.6));
    }
}

TEST_CASE("closed forms on frozen cases") {
    SUBCASE("ring of 4 (even)") {
        CHECK(closed_form_h(ring(4, 1)) == near(1.0 / 3.0));
        CHECK(closed_form_gamma(ring(4, 1)) == near(1.0 / 3.0));
    }
    SUBCASE("complete ring of 5 (odd)") {
        CHECK(closed_form_h(ring(5, 2)) == near(0.2));
        CHECK(closed_form_gamma(ring(5, 2)) == 0.0);
        const OptimalParams p = closed_form_optimal(ring(5, 2));
        CHECK(p.T == 0.0);
        CHECK(p.method == Method::ClosedForm);
    }
    SUBCASE("ring of 5 (odd, r=1)") {
        // S = 1 + 2cos(72), corner term = cos(54)/cos(18)
        CHECK(closed_form_gamma(ring(5, 1)) == near(std::sqrt(5.0) / 5.0, 1e-12));
    }
    SUBCASE("4x4 torus (even two-dimensional)") {
        CHECK(closed_form_h(make_spec({4, 4}, 1)) == near(0.2));
        CHECK(closed_form_gamma(make_spec({4, 4}, 1)) == near(0.6));
    }
}

TEST_CASE("closed form preconditions") {
    CHECK_THROWS_AS(closed_form_h(make_spec({16, 19}, 1)), UnsupportedParityError);
    CHECK_THROWS_AS(closed_form_gamma(make_spec({16, 19}, 1)), UnsupportedParityError);
    CHECK_THROWS_AS(closed_form_h(make_spec({9, 9}, 2, Norm::L1)), InvalidSpecError);
}

TEST_CASE("closed forms match the oracle wherever the band-edge assumption holds (r=1)") {
    SUBCASE("rings, both parities") {
        for (int n = 3; n <= 200; ++n) {
            const OptimalParams p = oracle_optimal(ring(n, 1));
            CHECK(std::abs(closed_form_h(ring(n, 1)) - p.h) <= 1e-9);
            CHECK(std::abs(closed_form_gamma(ring(n, 1)) - p.gamma) <= 1e-9);
        }
    }
    SUBCASE("square and rectangular tori, same parity") {
        for (int k1 : {4, 6, 10, 20, 36}) {
            for (int k2 : {4, 8, 14, 40}) {
                const TopologySpec spec = make_spec({k1, k2}, 1);
                const OptimalParams p = oracle_optimal(spec);
                CHECK(std::abs(closed_form_h(spec) - p.h) <= 1e-9);
                CHECK(std::abs(closed_form_gamma(spec) - p.gamma) <= 1e-9);
            }
        }
        for (int k1 : {5, 9, 15, 27}) {
            for (int k2 : {5, 11, 21}) {
                const TopologySpec spec = make_spec({k1, k2}, 1);
                const OptimalParams p = oracle_optimal(spec);
                CHECK(std::abs(closed_form_h(spec) - p.h) <= 1e-9);
                CHECK(std::abs(closed_form_gamma(spec) - p.gamma) <= 1e-9);
            }
        }
    }
    SUBCASE("higher-dimensional tori") {
        const std::vector<std::vector<int>> cases{
            {5, 5, 5}, {7, 9, 11}, {6, 8, 10}, {16, 18, 20, 22}, {15, 17, 19, 21, 23}};
        for (const auto& dims : cases) {
            const TopologySpec spec = make_spec(dims, 1);
            const OptimalParams p = oracle_optimal(spec);
            CHECK(std::abs(closed_form_h(spec) - p.h) <= 1e-9);
            CHECK(std::abs(closed_form_gamma(spec) - p.gamma) <= 1e-9);
        }
    }
}

TEST_CASE("pinned counterexample: the band-edge assumption fails for r >= 2") {
    // ring of 20 with r=2: the true largest eigenvalue sits at frequency
    // 6, not at the band midpoint 10, so the closed forms disagree with
    // the enumerated spectrum -- and the closed h even leaves some mode
    // with |1 - h*lambda| > 1 (a divergent iteration).
    const TopologySpec spec = ring(20, 2);
    const SpectralSummary s = extremal_eigenvalues(spec);
    CHECK(s.argmax_index == EigenIndex{6});
    CHECK(s.lambdaN_L == near(6.23606797749979, 1e-12));

    const OptimalParams p = oracle_optimal(spec);
    const double hc = closed_form_h(spec);
    CHECK(std::abs(hc - p.h) > 0.01);
    CHECK(std::abs(1.0 - hc * s.lambdaN_L) > 1.0);
    // the oracle h, by contrast, contracts every nonconstant mode
    CHECK(std::abs(1.0 - p.h * s.lambdaN_L) < 1.0);
    CHECK(std::abs(1.0 - p.h * s.lambda2_L) < 1.0);
}

TEST_CASE("closed forms collapse exactly from the band-edge eigenvalues") {
    // same-parity specs across dimensions; the theorem expressions and
    // the raw frequency-formula evaluation must agree to 1e-12
    const std::vector<std::vector<int>> even_cases{
        {16}, {30}, {16, 22}, {16, 18, 20}, {16, 18, 20, 22}, {16, 18, 20, 22, 24, 26}};
    const std::vector<std::vector<int>> odd_cases{
        {15, 21}, {15, 17, 19}, {15, 17, 19, 21}, {15, 17, 19, 21, 23, 25}};
    for (int r = 1; r <= 5; ++r) {
        for (const auto& dims : even_cases) {
            const TopologySpec spec = make_spec(dims, r);
            const auto [h, g] = band_edge_direct(spec);
            CHECK(closed_form_h(spec) == near(h));
            CHECK(closed_form_gamma(spec) == near(g));
        }
        for (const auto& dims : odd_cases) {
            const TopologySpec spec = make_spec(dims, r);
            const auto [h, g] = band_edge_direct(spec);
            CHECK(closed_form_h(spec) == near(h));
            CHECK(closed_form_gamma(spec) == near(g));
        }
    }
    // one-dimensional odd case: the printed corner term carries no
    // (-1)^r, so the collapse identity holds for odd r
    for (int r : {1, 3, 5}) {
        for (int n : {15, 21, 27}) {
            const TopologySpec spec = ring(n, r);
            const auto [h, g] = band_edge_direct(spec);
            CHECK(closed_form_h(spec) == near(h));
            CHECK(closed_form_gamma(spec) == near(g));
        }
    }
}

TEST_CASE("dimension-count degeneracy of the general closed forms") {
    // the general-m expressions specialize to the 1-D and 2-D ones;
    // all three code paths must agree on shared cases to 1e-9
    auto general_even_h = [](int m, int r, double S) {
        const double cpr = (r % 2 == 0) ? 1.0 : -1.0;
        return 1.0 / ((m + 1) * (r + 0.5) - 0.5 * S - 0.5 * m * cpr);
    };
    auto general_even_gamma = [](int m, int r, double S) {
        const double cpr = (r % 2 == 0) ? 1.0 : -1.0;
        return ((m - 1) * (r + 0.5) + 0.5 * S - 0.5 * m * cpr) /
               ((m + 1) * (r + 0.5) - 0.5 * S - 0.5 * m * cpr);
    };
    for (int r = 1; r <= 4; ++r) {
        for (int k : {12, 20, 34}) {
            if (k < 2 * r + 1) continue;
            const double S = dirichlet_kernel(r, 2.0 * kPi / k);
            CHECK(closed_form_h(ring(k, r)) == near(general_even_h(1, r, S), 1e-9));
            CHECK(closed_form_gamma(ring(k, r)) == near(general_even_gamma(1, r, S), 1e-9));
            const TopologySpec torus = make_spec({k, k}, r);
            CHECK(closed_form_h(torus) == near(general_even_h(2, r, S), 1e-9));
            CHECK(closed_form_gamma(torus) == near(general_even_gamma(2, r, S), 1e-9));
        }
    }
}

TEST_CASE("equalization: the oracle h balances the two extreme modes") {
    const std::vector<TopologySpec> specs{
        ring(100, 1), ring(99, 3), make_spec({20, 20}, 2), make_spec({15, 17}, 2),
        make_spec({7, 9, 11}, 2, Norm::LInf)};
    for (const TopologySpec& spec : specs) {
        const SpectralSummary s = extremal_eigenvalues(spec);
        const double h = 2.0 / (s.lambda2_L + s.lambdaN_L);
        CHECK(std::abs(std::abs(1.0 - h * s.lambda2_L) - std::abs(1.0 - h * s.lambdaN_L)) <=
              1e-12);

        // and no other mode contracts slower
        const double gamma = contraction_factor(h, s.lambda2_L, s.lambdaN_L);
        double worst = 0.0;
        const std::size_t n = node_count(spec);
        for (std::size_t lin = 1; lin < n; ++lin) {
            const double lam = laplacian_eigenvalue(spec, decode_index(lin, spec.dims));
            worst = std::max(worst, std::abs(1.0 - h * lam));
        }
        CHECK(worst <= gamma + 1e-12);
        CHECK(std::abs(1.0 - h * laplacian_eigenvalue(spec, s.arg2_index)) >= worst - 1e-12);
        CHECK(std::abs(1.0 - h * laplacian_eigenvalue(spec, s.argmax_index)) >= worst - 1e-12);
    }
}

TEST_CASE("oracle trends: larger networks are slower, richer links are faster") {
    double prev = -1.0;
    for (int n = 6; n <= 120; n += 2) {
        const double T = oracle_optimal(ring(n, 1)).T;
        CHECK(T > prev);
        prev = T;
    }
    prev = 1e300;
    for (int r = 1; r <= 20; ++r) {
        const double T = oracle_optimal(ring(400, r)).T;
        CHECK(T < prev);
        prev = T;
    }
    const std::vector<int> ladder{16, 18, 20, 22, 24, 26};
    for (int r = 1; r <= 3; ++r) {
        prev = -1.0;
        for (int m = 1; m <= 4; ++m) {
            const std::vector<int> dims(ladder.begin(), ladder.begin() + m);
            const double T = oracle_optimal(make_spec(dims, r)).T;
            CHECK(T > prev);
            prev = T;
        }
    }
}

TEST_CASE("contraction factor for arbitrary step sizes") {
    // monotone spectrum bound: the max is always at an extreme eigenvalue
    const double l2 = 0.5, ln = 7.5;
    CHECK(contraction_factor(0.25, l2, ln) == near(std::abs(1.0 - 0.25 * ln)));
    CHECK(contraction_factor(0.01, l2, ln) == near(std::abs(1.0 - 0.01 * l2)));
    CHECK(contraction_factor(0.25, 4.0, 4.0) == 0.0); // snapped
}

} // TEST_SUITE
