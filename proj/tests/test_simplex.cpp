#include "bellscope/simplex.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace bellscope;

TEST_CASE("vertex matrix rows and affine independence") {
    const Eigen::Matrix<double, 9, 16> m = nl_vertex_matrix();

    const Vec16 row3 = (Vec16() << 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0).finished();
    CHECK((m.row(2).transpose() - row3).cwiseAbs().maxCoeff() == 0.0);

    for (int k = 0; k < 8; ++k) CHECK(m(8, k) == 0.0);
    for (int k = 8; k < 16; ++k) CHECK(m(8, k) == 0.5);

    // Local vertex i carries free coordinates e_i.
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k) CHECK(m(i, k) == (i == k ? 1.0 : 0.0));

    Eigen::Matrix<double, 8, 16> diffs;
    for (int r = 0; r < 8; ++r) diffs.row(r) = m.row(r) - m.row(8);
    CHECK(Eigen::FullPivLU<Eigen::MatrixXd>(diffs).rank() == 8);
}

TEST_CASE("void edges form the expected graph") {
    const auto& edges = void_edges();
    CHECK(edges.size() == 8);

    // Pairs obtained by direct substitution into the two constraint
    // families
    CHECK(std::count(edges.begin(), edges.end(), std::make_pair(5, 7)) == 1);
    CHECK(std::count(edges.begin(), edges.end(), std::make_pair(2, 6)) == 1);

    // Every node has degree two and the graph is a single 8-cycle.
    std::array<int, 9> degree{};
    for (const auto& [p, q] : edges) {
        CHECK(p >= 1);
        CHECK(q <= 8);
        CHECK(p < q);
        ++degree[p];
        ++degree[q];
    }
    for (int i = 1; i <= 8; ++i) CHECK(degree[i] == 2);

    std::array<std::vector<int>, 9> adj;
    for (const auto& [p, q] : edges) adj[p].push_back(q), adj[q].push_back(p);
    std::set<int> visited{1};
    int prev = 1, cur = adj[1][0], steps = 1;
    while (cur != 1 && steps <= 8) {
        visited.insert(cur);
        const int nxt = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = nxt;
        ++steps;
    }
    CHECK(steps == 8);
    CHECK(visited.size() == 8);

    // Bipartition of the cycle is exactly the two special quartets.
    auto is_independent = [&edges](unsigned subset) {
        for (const auto& [p, q] : edges)
            if ((subset >> (p - 1) & 1) && (subset >> (q - 1) & 1)) return false;
        return true;
    };
    // Brute force over all C(8,4) = 70 four-element subsets.
    std::vector<unsigned> independent4;
    for (unsigned sub = 0; sub < 256; ++sub)
        if (std::popcount(sub) == 4 && is_independent(sub)) independent4.push_back(sub);
    CHECK(independent4 == std::vector<unsigned>{kS2Mask, kS1Mask});
}

TEST_CASE("segment points stay on the face and interpolate chsh") {
    std::uint64_t s = 17;
    for (int rep = 0; rep < 30; ++rep) {
        const FaceMask mask = FaceMask(1 + (testsup::next_u64(s) % 254));
        const Face face(mask);
        if (face.dim() < 1) continue;
        const Segment seg = center_segment(face);
        for (double mu : {0.0, 0.25, 0.7, 1.0}) {
            const Behavior beh = seg.point(mu);
            CHECK(beh.is_valid());
            CHECK(chsh_value(beh) == doctest::Approx(mu).epsilon(1e-12));
            const FreeVector f = free_coords(beh);
            for (int i = 1; i <= 8; ++i)
                if (face.zeroes(i)) CHECK(f[i - 1] == 0.0);
        }
    }
}

TEST_CASE("center segment weights") {
    const Segment s8 = center_segment(Face(mask_of({8})));
    for (int i = 0; i < 7; ++i) CHECK(s8.local_weights[i] == doctest::Approx(1.0 / 7.0));
    CHECK(s8.local_weights[7] == 0.0);

    const Segment s68 = center_segment(Face(mask_of({6, 8})));
    for (int i : {1, 2, 3, 4, 5, 7}) CHECK(s68.local_weights[i - 1] == doctest::Approx(1.0 / 6.0));
    CHECK(s68.local_weights[5] == 0.0);
    CHECK(s68.local_weights[7] == 0.0);

    CHECK(chsh_value(s68.point(0.0)) == doctest::Approx(0.0));
    CHECK_THROWS_AS((void)center_segment(Face(0xFF)), std::invalid_argument);
}

TEST_CASE("face accessors") {
    const Face f(mask_of({3, 6, 7}));
    CHECK(f.dim() == 5);
    CHECK(f.zeroed() == std::vector<int>{3, 6, 7});
    CHECK(f.local_vertices() == std::vector<int>{1, 2, 4, 5, 8});
    CHECK_THROWS_AS(Face(0), std::invalid_argument);
}
