#include "consensus/spectra.hpp"

#include "consensus/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace consensus {

namespace {

constexpr double kPi = std::numbers::pi;

void check_index(const TopologySpec& spec, const EigenIndex& idx) {
    if (idx.size() != spec.dims.size())
        throw InvalidSpecError("frequency index has wrong dimension count");
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 0 || idx[i] >= spec.dims[i])
            throw InvalidSpecError("frequency index component out of range");
    }
}

// Per-axis Laplacian contribution table for the per-axis rule:
// table[v] = 4 * sum_{j=1..r} sin^2(pi v j / k).  The axis eigenvalue
// splits as a sum of these, one per dimension.
std::vector<double> axis_table(int k, int r) {
    std::vector<double> table(static_cast<std::size_t>(k));
    for (int v = 0; v < k; ++v) {
        double acc = 0.0;
        for (int j = 1; j <= r; ++j) {
            // reduce v*j mod k to keep sine arguments small
            const double s = std::sin(kPi * ((v * j) % k) / k);
            acc += s * s;
        }
        table[static_cast<std::size_t>(v)] = 4.0 * acc;
    }
    return table;
}

double stencil_eigenvalue(const TopologySpec& spec, const Stencil& st, const EigenIndex& idx) {
    double acc = 0.0;
    for (const auto& o : st.offsets) {
        double phase = 0.0;
        for (std::size_t i = 0; i < o.size(); ++i)
            phase += static_cast<double>(idx[i]) * o[i] / spec.dims[i];
        const double s = std::sin(kPi * phase);
        acc += s * s;
    }
    return 2.0 * acc;
}

} // namespace

double laplacian_eigenvalue(const TopologySpec& spec, const EigenIndex& idx) {
    validate(spec);
    check_index(spec, idx);
    if (spec.norm == Norm::PerAxis) {
        double acc = 0.0;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            const int k = spec.dims[i];
            for (int j = 1; j <= spec.r; ++j) {
                const double s = std::sin(kPi * ((idx[i] * j) % k) / k);
                acc += s * s;
            }
        }
        return 4.0 * acc;
    }
    return stencil_eigenvalue(spec, build_stencil(spec), idx);
}

double weight_eigenvalue(const TopologySpec& spec, double h, const EigenIndex& idx) {
    validate(spec);
    if (spec.norm != Norm::PerAxis)
        throw InvalidSpecError("weight eigenvalue formula applies to the per-axis rule");
    check_index(spec, idx);
    double cos_sum = 0.0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        const int k = spec.dims[i];
        for (int j = 1; j <= spec.r; ++j)
            cos_sum += std::cos(2.0 * kPi * ((idx[i] * j) % k) / k);
    }
    return (1.0 - 2.0 * spec.m * spec.r * h) + 2.0 * h * cos_sum;
}

SpectralSummary extremal_eigenvalues(const TopologySpec& spec) {
    validate(spec);
    const std::size_t m = static_cast<std::size_t>(spec.m);
    const int k_last = spec.dims[m - 1];

    SpectralSummary out;
    out.n = node_count(spec);

    // Row-major scan: an odometer over the leading m-1 index components
    // with a tight loop over the last one.  First strict improvement
    // wins, so ties resolve to the earliest index.
    bool have_min = false;
    double min_val = 0.0, max_val = 0.0;
    std::size_t min_lin = 0, max_lin = 0;
    std::vector<int> outer(m > 1 ? m - 1 : 0, 0);

    if (spec.norm == Norm::PerAxis) {
        std::vector<std::vector<double>> tables;
        tables.reserve(m);
        for (int k : spec.dims) tables.push_back(axis_table(k, spec.r));
        const std::vector<double>& last = tables[m - 1];

        std::size_t outer_lin = 0;
        while (true) {
            double base = 0.0;
            for (std::size_t i = 0; i + 1 < m; ++i)
                base += tables[i][static_cast<std::size_t>(outer[i])];
            const std::size_t row = outer_lin * static_cast<std::size_t>(k_last);
            for (int v = 0; v < k_last; ++v) {
                const double lam = base + last[static_cast<std::size_t>(v)];
                const std::size_t lin = row + static_cast<std::size_t>(v);
                if (lin == 0) {
                    max_val = lam;
                    max_lin = 0;
                    continue; // constant mode: excluded from the minimum
                }
                if (!have_min || lam < min_val) {
                    have_min = true;
                    min_val = lam;
                    min_lin = lin;
                }
                if (lam > max_val) {
                    max_val = lam;
                    max_lin = lin;
                }
            }
            std::size_t axis = outer.size();
            while (axis > 0 && ++outer[axis - 1] == spec.dims[axis - 1]) {
                outer[axis - 1] = 0;
                --axis;
            }
            if (axis == 0) break;
            ++outer_lin;
        }
    } else {
        const Stencil st = build_stencil(spec);
        std::vector<int> idx(m, 0);
        for (std::size_t lin = 0; lin < out.n; ++lin) {
            const double lam = stencil_eigenvalue(spec, st, idx);
            if (lin == 0) {
                max_val = lam;
                max_lin = 0;
            } else {
                if (!have_min || lam < min_val) {
                    have_min = true;
                    min_val = lam;
                    min_lin = lin;
                }
                if (lam > max_val) {
                    max_val = lam;
                    max_lin = lin;
                }
            }
            for (std::size_t i = m; i-- > 0;) {
                if (++idx[i] < spec.dims[i]) break;
                idx[i] = 0;
            }
        }
    }

    if (!have_min || min_val <= 1e-12)
        throw DisconnectedError("zero Laplacian eigenvalue has multiplicity > 1");

    out.lambda2_L = min_val;
    out.lambdaN_L = max_val;
    out.arg2_index = decode_index(min_lin, spec.dims);
    out.argmax_index = decode_index(max_lin, spec.dims);
    return out;
}

double verify_eigenpair(const TopologySpec& spec, const EigenIndex& idx) {
    validate(spec);
    check_index(spec, idx);
    const double lambda = laplacian_eigenvalue(spec, idx);
    const NeighborList nl = neighbor_list(spec);
    const std::size_t n = node_count(spec);
    const std::size_t m = static_cast<std::size_t>(spec.m);

    // Cosine wave at frequency idx; v[0] = 1, so v is never the zero vector.
    std::vector<double> v(n);
    {
        // per-axis phase tables, angles reduced mod 2*pi
        std::vector<std::vector<double>> phase(m);
        for (std::size_t i = 0; i < m; ++i) {
            const int k = spec.dims[i];
            phase[i].resize(static_cast<std::size_t>(k));
            for (int u = 0; u < k; ++u)
                phase[i][static_cast<std::size_t>(u)] =
                    2.0 * kPi * ((static_cast<long long>(idx[i]) * u) % k) / k;
        }
        std::vector<int> node(m, 0);
        for (std::size_t lin = 0; lin < n; ++lin) {
            double theta = 0.0;
            for (std::size_t i = 0; i < m; ++i)
                theta += phase[i][static_cast<std::size_t>(node[i])];
            v[lin] = std::cos(theta);
            for (std::size_t i = m; i-- > 0;) {
                if (++node[i] < spec.dims[i]) break;
                node[i] = 0;
            }
        }
    }

    const double deg = static_cast<double>(nl.degree);
    double residual = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
        double acc = 0.0;
        for (std::size_t e = nl.row_ptr[u]; e < nl.row_ptr[u + 1]; ++e)
            acc += v[nl.col[e]];
        const double lv = deg * v[u] - acc;
        residual = std::max(residual, std::abs(lv - lambda * v[u]));
    }
    return residual;
}

} // namespace consensus
