#pragma once

// Geometry of the nonlocal simplex: its nine vertices, faces keyed by the
// set of zeroed free coordinates, probe segments toward the PR box, and the
// edge graph whose edges mark six-dimensional quantum voids.

#include "bellscope/behavior.hpp"

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace bellscope {

/// Bitmask over the free coordinates: bit i-1 set means p_i is zeroed.
using FaceMask = std::uint8_t;

inline constexpr FaceMask kS1Mask = 0xC3;  // {p1, p2, p7, p8}
inline constexpr FaceMask kS2Mask = 0x3C;  // {p3, p4, p5, p6}

inline FaceMask mask_of(std::initializer_list<int> indices) {
    FaceMask m = 0;
    for (int i : indices) m |= FaceMask(1u << (i - 1));
    return m;
}

// A nonlocal face of the simplex: the convex hull of the PR box and the
// local vertices whose index is not zeroed.
struct Face {
    explicit Face(FaceMask zeroed_mask) : mask(zeroed_mask) {
        if (mask == 0) throw std::invalid_argument("Face: at least one coordinate must be zeroed");
    }

    FaceMask mask;

    int dim() const { return 8 - std::popcount(unsigned(mask)); }
    bool zeroes(int i) const { return (mask >> (i - 1)) & 1; }

    /// Zeroed free-coordinate indices, ascending, in 1..8.
    std::vector<int> zeroed() const;
    /// Indices of the local vertices spanning the face (the complement).
    std::vector<int> local_vertices() const;
};

// The line segment mu * PR + (1 - mu) * L, where L is a convex mixture of
// the eight local vertices.  chsh_value(point(mu)) == mu by construction.
struct Segment {
    Segment() : local_weights(Vec8::Zero()) {}
    explicit Segment(const Vec8& weights);

    Vec8 local_weights;

    Behavior point(double mu) const;
};

/// The nine vertices of the nonlocal simplex: L1..L8 then the PR box.
const std::array<Behavior, 9>& nl_vertices();

/// Vertex table with rows in canonical index order (rows 1..8 the local
/// vertices, row 9 the PR box).
Eigen::Matrix<double, 9, 16> nl_vertex_matrix();

/// Deterministic outputs of local vertex i: [party][input] with party 0 =
/// Alice, party 1 = Bob.
std::array<std::array<int, 2>, 2> local_vertex_outputs(int i);

/// The eight unordered free-coordinate pairs that, when both zeroed, define
/// a six-dimensional quantum void.  Sorted, each pair ascending.
const std::vector<std::pair<int, int>>& void_edges();

/// Segment from the PR box to the uniform mixture of the face's vertices.
Segment center_segment(const Face& face);

}  // namespace bellscope
