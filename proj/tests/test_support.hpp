#pragma once

// Shared generators for the test suites: seeded random points of the
// no-signaling polytope and the nonlocal simplex, random probe segments,
// and reference quantum configurations.

#include "bellscope/behavior.hpp"
#include "bellscope/quantum.hpp"
#include "bellscope/simplex.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace testsup {

using namespace bellscope;

inline std::uint64_t next_u64(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t v = s;
    v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ull;
    v = (v ^ (v >> 27)) * 0x94d049bb133111ebull;
    return v ^ (v >> 31);
}

inline double u01(std::uint64_t& s) { return double(next_u64(s) >> 11) * 0x1.0p-53; }

inline Eigen::VectorXd dirichlet(std::uint64_t& s, int n) {
    Eigen::VectorXd w(n);
    for (int i = 0; i < n; ++i) w[i] = -std::log(u01(s) + 1e-300);
    return w / w.sum();
}

/// All 24 extremal no-signaling boxes: 16 deterministic, 8 PR symmetries.
inline const std::vector<Behavior>& ns_vertices() {
    static const std::vector<Behavior> verts = [] {
        std::vector<Behavior> v;
        for (int a1 = 0; a1 < 2; ++a1)
            for (int a2 = 0; a2 < 2; ++a2)
                for (int b1 = 0; b1 < 2; ++b1)
                    for (int b2 = 0; b2 < 2; ++b2) v.push_back(local_box(a1, a2, b1, b2));
        for (int al = 0; al < 2; ++al)
            for (int be = 0; be < 2; ++be)
                for (int ga = 0; ga < 2; ++ga) v.push_back(pr_box(al, be, ga));
        return v;
    }();
    return verts;
}

inline Behavior random_ns_behavior(std::uint64_t& s) {
    const auto& verts = ns_vertices();
    const Eigen::VectorXd w = dirichlet(s, int(verts.size()));
    Eigen::VectorXd p = Eigen::VectorXd::Zero(16);
    for (int i = 0; i < w.size(); ++i) p += w[i] * verts[i].raw();
    return Behavior(2, 2, std::move(p));
}

/// Random point of the nonlocal simplex (mixture of L1..L8 and PR).
inline Behavior random_nl_behavior(std::uint64_t& s) {
    const auto& verts = nl_vertices();
    const Eigen::VectorXd w = dirichlet(s, 9);
    Eigen::VectorXd p = Eigen::VectorXd::Zero(16);
    for (int i = 0; i < 9; ++i) p += w[i] * verts[i].raw();
    return Behavior(2, 2, std::move(p));
}

inline Segment random_segment(std::uint64_t& s) {
    return Segment(Vec8(dirichlet(s, 8)));
}

/// Maximally entangled state with the standard CHSH-optimal measurement
/// angles; saturates the quantum bound in the canonical octant.
inline QubitConfig tsirelson_config() {
    const double pi = std::numbers::pi;
    QubitConfig cfg;
    cfg.state << 1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0);
    cfg.alice_axes = {Eigen::Vector2d(0.0, 0.0), Eigen::Vector2d(pi / 2.0, 0.0)};
    cfg.bob_axes = {Eigen::Vector2d(pi / 4.0, 0.0), Eigen::Vector2d(-pi / 4.0, 0.0)};
    return cfg;
}

inline QubitConfig random_qubit_config(std::uint64_t& s) {
    const double tau = 2.0 * std::numbers::pi;
    QubitConfig cfg;
    Eigen::Vector4d mag, ph;
    for (int k = 0; k < 4; ++k) mag[k] = u01(s) * tau, ph[k] = u01(s) * tau;
    double tail = 1.0;
    for (int k = 0; k < 4; ++k) {
        const double r = (k < 3) ? tail * std::cos(mag[k]) : tail;
        if (k < 3) tail *= std::sin(mag[k]);
        cfg.state[k] = std::polar(r, k == 0 ? 0.0 : ph[k]);
    }
    for (int k = 0; k < 2; ++k) {
        cfg.alice_axes[k] = Eigen::Vector2d(u01(s) * tau, u01(s) * tau);
        cfg.bob_axes[k] = Eigen::Vector2d(u01(s) * tau, u01(s) * tau);
    }
    return cfg;
}

}  // namespace testsup
