#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace consensus {

// Neighborhood rule on the wrap-around lattice.
//   PerAxis: neighbors differ in exactly one coordinate, by at most r.
//   L1:      0 < sum_i |o_i| <= r.
//   LInf:    0 < max_i |o_i| <= r.
// All three coincide for one dimension.
enum class Norm { PerAxis, L1, LInf };

// An r-nearest-neighbor cycle (m=1), torus (m=2), or m-dimensional torus.
struct TopologySpec {
    int m = 0;                 // number of dimensions, == dims.size()
    std::vector<int> dims;     // nodes per axis k_1..k_m
    int r = 0;                 // neighbor radius
    Norm norm = Norm::PerAxis;
};

TopologySpec make_spec(std::vector<int> dims, int r, Norm norm = Norm::PerAxis);

// Throws InvalidSpecError unless m >= 1, m == dims.size(), r >= 1 and
// every k_i >= 2r+1 (offsets must not wrap onto each other or onto the
// node itself).
void validate(const TopologySpec& spec);

std::size_t node_count(const TopologySpec& spec);

// Symmetric set of nonzero integer offset vectors defining the edges.
struct Stencil {
    std::vector<std::vector<int>> offsets; // each component in [-r, r]
    int degree = 0;                        // == offsets.size()
};

Stencil build_stencil(const TopologySpec& spec);

// Row-major multi-index encoding over [0, n).
std::size_t encode_index(const std::vector<int>& idx, const std::vector<int>& dims);
std::vector<int> decode_index(std::size_t linear, const std::vector<int>& dims);

// Compressed adjacency: neighbors of node u are
// col[row_ptr[u] .. row_ptr[u+1]).  Every node has exactly `degree`
// neighbors and the relation is symmetric.
struct NeighborList {
    std::vector<std::size_t> row_ptr;
    std::vector<std::size_t> col;
    int degree = 0;
};

NeighborList neighbor_list(const TopologySpec& spec);

} // namespace consensus
