#include "bellscope/simplex.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

namespace bellscope {

namespace {

// (a1, a2, b1, b2) parameters of the eight local vertices on the CHSH facet,
// ordered so that vertex L_i has free coordinates e_i.
constexpr std::array<std::array<int, 4>, 8> kLocalParams = {{
    {1, 0, 1, 1},
    {1, 1, 1, 0},
    {0, 0, 1, 0},
    {0, 1, 1, 1},
    {1, 1, 0, 1},
    {1, 0, 0, 0},
    {0, 0, 0, 0},
    {0, 1, 0, 1},
}};

}  // namespace

std::vector<int> Face::zeroed() const {
    std::vector<int> out;
    for (int i = 1; i <= 8; ++i)
        if (zeroes(i)) out.push_back(i);
    return out;
}

std::vector<int> Face::local_vertices() const {
    std::vector<int> out;
    for (int i = 1; i <= 8; ++i)
        if (!zeroes(i)) out.push_back(i);
    return out;
}

Segment::Segment(const Vec8& weights) : local_weights(weights) {
    if ((weights.array() < -1e-15).any())
        throw std::invalid_argument("Segment: weights must be nonnegative");
    if (std::abs(weights.sum() - 1.0) > 1e-9)
        throw std::invalid_argument("Segment: weights must sum to 1");
}

Behavior Segment::point(double mu) const {
    const auto& v = nl_vertices();
    Eigen::VectorXd p = mu * v[8].raw();
    for (int i = 0; i < 8; ++i)
        if (local_weights[i] != 0.0) p += (1.0 - mu) * local_weights[i] * v[i].raw();
    return Behavior(2, 2, std::move(p));
}

const std::array<Behavior, 9>& nl_vertices() {
    static const std::array<Behavior, 9> vertices = [] {
        auto box = [](int i) {
            const auto& q = kLocalParams[i];
            return local_box(q[0], q[1], q[2], q[3]);
        };
        return std::array<Behavior, 9>{box(0), box(1), box(2), box(3),
                                       box(4), box(5), box(6), box(7), pr_box(0, 0, 0)};
    }();
    return vertices;
}

Eigen::Matrix<double, 9, 16> nl_vertex_matrix() {
    Eigen::Matrix<double, 9, 16> m;
    const auto& v = nl_vertices();
    for (int r = 0; r < 9; ++r)
        for (int k = 1; k <= 16; ++k) {
            const auto [a, b, x, y] = entry_of_index(k);
            m(r, k - 1) = v[r](a, b, x, y);
        }
    return m;
}

std::array<std::array<int, 2>, 2> local_vertex_outputs(int i) {
    if (i < 1 || i > 8) throw std::invalid_argument("local_vertex_outputs: index in 1..8");
    const auto& q = kLocalParams[i - 1];
    std::array<std::array<int, 2>, 2> out{};
    for (int x = 0; x < 2; ++x) out[0][x] = (q[0] & x) ^ q[1];
    for (int y = 0; y < 2; ++y) out[1][y] = (q[2] & y) ^ q[3];
    return out;
}

const std::vector<std::pair<int, int>>& void_edges() {
    static const std::vector<std::pair<int, int>> edges = [] {
        std::set<std::pair<int, int>> acc;
        auto add = [&acc](int p, int q) { acc.emplace(std::min(p, q), std::max(p, q)); };
        for (int a = 0; a < 2; ++a)
            for (int x = 0; x < 2; ++x)
                for (int y = 0; y < 2; ++y) {
                    // Both constraint families share the first zero entry;
                    // they differ in which neighbouring probability joins it.
                    const int base = index_of(a ^ 1, a ^ (x & y), x, y);
                    const int flip_y = index_of(a ^ 1, a ^ (x & y) ^ x, x, y ^ 1);
                    const int flip_x = index_of(a ^ 1 ^ y, a ^ (x & y), x ^ 1, y);
                    add(base, flip_y);
                    add(base, flip_x);
                }
        return std::vector<std::pair<int, int>>(acc.begin(), acc.end());
    }();
    return edges;
}

Segment center_segment(const Face& face) {
    if (face.dim() < 1)
        throw std::invalid_argument("center_segment: face must have dimension >= 1");
    Vec8 w = Vec8::Zero();
    const auto verts = face.local_vertices();
    for (int i : verts) w[i - 1] = 1.0 / double(verts.size());
    return Segment(w);
}

}  // namespace bellscope
