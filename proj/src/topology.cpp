#include "consensus/topology.hpp"

#include "consensus/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace consensus {

TopologySpec make_spec(std::vector<int> dims, int r, Norm norm) {
    TopologySpec spec;
    spec.m = static_cast<int>(dims.size());
    spec.dims = std::move(dims);
    spec.r = r;
    spec.norm = norm;
    validate(spec);
    return spec;
}

void validate(const TopologySpec& spec) {
    if (spec.m < 1) throw InvalidSpecError("need at least one dimension");
    if (spec.m != static_cast<int>(spec.dims.size()))
        throw InvalidSpecError("m does not match the dimension list");
    if (spec.r < 1) throw InvalidSpecError("radius must be positive");
    for (int k : spec.dims) {
        if (k < 2 * spec.r + 1)
            throw InvalidSpecError("every axis needs at least 2r+1 = " +
                                   std::to_string(2 * spec.r + 1) + " nodes, got " +
                                   std::to_string(k));
    }
}

std::size_t node_count(const TopologySpec& spec) {
    std::size_t n = 1;
    for (int k : spec.dims) n *= static_cast<std::size_t>(k);
    return n;
}

namespace {

// Enumerates all integer vectors in [-r, r]^m accepted by `keep`.
void collect_offsets(int m, int r, bool (*keep)(const std::vector<int>&, int),
                     std::vector<std::vector<int>>& out) {
    std::vector<int> o(static_cast<std::size_t>(m), -r);
    while (true) {
        if (keep(o, r)) out.push_back(o);
        int axis = m - 1;
        while (axis >= 0 && o[static_cast<std::size_t>(axis)] == r) {
            o[static_cast<std::size_t>(axis)] = -r;
            --axis;
        }
        if (axis < 0) break;
        ++o[static_cast<std::size_t>(axis)];
    }
}

bool is_zero(const std::vector<int>& o) {
    return std::all_of(o.begin(), o.end(), [](int c) { return c == 0; });
}

bool keep_l1(const std::vector<int>& o, int r) {
    int s = 0;
    for (int c : o) s += std::abs(c);
    return s >= 1 && s <= r;
}

bool keep_linf(const std::vector<int>& o, int) { return !is_zero(o); }

} // namespace

Stencil build_stencil(const TopologySpec& spec) {
    validate(spec);
    Stencil st;
    const std::size_t m = static_cast<std::size_t>(spec.m);
    if (spec.norm == Norm::PerAxis) {
        for (std::size_t axis = 0; axis < m; ++axis) {
            for (int j = 1; j <= spec.r; ++j) {
                for (int sign : {+1, -1}) {
                    std::vector<int> o(m, 0);
                    o[axis] = sign * j;
                    st.offsets.push_back(std::move(o));
                }
            }
        }
    } else {
        collect_offsets(spec.m, spec.r,
                        spec.norm == Norm::L1 ? keep_l1 : keep_linf, st.offsets);
    }
    st.degree = static_cast<int>(st.offsets.size());
    return st;
}

std::size_t encode_index(const std::vector<int>& idx, const std::vector<int>& dims) {
    std::size_t linear = 0;
    for (std::size_t i = 0; i < dims.size(); ++i)
        linear = linear * static_cast<std::size_t>(dims[i]) + static_cast<std::size_t>(idx[i]);
    return linear;
}

std::vector<int> decode_index(std::size_t linear, const std::vector<int>& dims) {
    std::vector<int> idx(dims.size());
    for (std::size_t i = dims.size(); i-- > 0;) {
        const std::size_t k = static_cast<std::size_t>(dims[i]);
        idx[i] = static_cast<int>(linear % k);
        linear /= k;
    }
    return idx;
}

NeighborList neighbor_list(const TopologySpec& spec) {
    const Stencil st = build_stencil(spec);
    const std::size_t n = node_count(spec);
    const std::size_t deg = static_cast<std::size_t>(st.degree);

    NeighborList nl;
    nl.degree = st.degree;
    nl.row_ptr.resize(n + 1);
    for (std::size_t u = 0; u <= n; ++u) nl.row_ptr[u] = u * deg;
    nl.col.resize(n * deg);

    std::vector<int> idx(static_cast<std::size_t>(spec.m), 0);
    std::vector<int> shifted(static_cast<std::size_t>(spec.m));
    for (std::size_t u = 0; u < n; ++u) {
        std::size_t slot = nl.row_ptr[u];
        for (const auto& o : st.offsets) {
            for (std::size_t i = 0; i < idx.size(); ++i) {
                int v = idx[i] + o[i];
                const int k = spec.dims[i];
                if (v < 0) v += k;
                else if (v >= k) v -= k;
                shifted[i] = v;
            }
            nl.col[slot++] = encode_index(shifted, spec.dims);
        }
        // row-major odometer over the node multi-index
        for (std::size_t i = idx.size(); i-- > 0;) {
            if (++idx[i] < spec.dims[i]) break;
            idx[i] = 0;
        }
    }
    return nl;
}

} // namespace consensus
