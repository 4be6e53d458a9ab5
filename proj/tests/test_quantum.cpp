#include "bellscope/quantum.hpp"

#include "bellscope/hardy.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>

using namespace bellscope;

namespace {

Eigen::Vector3d bloch_vector(const Eigen::Vector2d& axis) {
    return {std::sin(axis[0]) * std::cos(axis[1]), std::sin(axis[0]) * std::sin(axis[1]),
            std::cos(axis[0])};
}

Eigen::Vector2d bloch_angles(const Eigen::Vector3d& n) {
    return {std::acos(std::clamp(n[2], -1.0, 1.0)), std::atan2(n[1], n[0])};
}

// Deterministic three-input box from per-party response tables.
Behavior deterministic3(const std::array<int, 3>& fa, const std::array<int, 3>& fb) {
    Behavior beh(3, 3);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) beh.at(fa[x], fb[y], x, y) = 1.0;
    return beh;
}

}  // namespace

TEST_CASE("born tables of reference configurations") {
    // Product state: local for any measurement choice.
    std::uint64_t s = 21;
    for (int rep = 0; rep < 20; ++rep) {
        QubitConfig cfg = testsup::random_qubit_config(s);
        cfg.state << 1.0, 0.0, 0.0, 0.0;  // |00>
        const Behavior beh = behavior_from_qubit(cfg);
        CHECK(beh.is_valid());
        CHECK(chsh_value(beh) <= 1e-9);
    }

    const Behavior tsir = behavior_from_qubit(testsup::tsirelson_config());
    CHECK(chsh_value(tsir) == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-9));

    for (int rep = 0; rep < 50; ++rep) {
        const Behavior beh = behavior_from_qubit(testsup::random_qubit_config(s));
        CHECK(beh.is_valid(1e-12));
    }
}

TEST_CASE("local unitary invariance of the born table") {
    // Rotating Alice's state half and her measurement axes together leaves
    // the behavior untouched.
    std::uint64_t s = 33;
    for (int rep = 0; rep < 20; ++rep) {
        const QubitConfig cfg = testsup::random_qubit_config(s);
        const Behavior base = behavior_from_qubit(cfg);

        const double angle = testsup::u01(s) * 3.0;
        Eigen::Vector3d axis(testsup::u01(s) - 0.5, testsup::u01(s) - 0.5, testsup::u01(s) - 0.5);
        axis.normalize();

        using Mat2c = Eigen::Matrix2cd;
        const Complex im(0.0, 1.0);
        Mat2c sx, sy, sz;
        sx << 0, 1, 1, 0;
        sy << 0, -im, im, 0;
        sz << 1, 0, 0, -1;
        const Mat2c u = (std::cos(angle / 2.0) * Mat2c::Identity() -
                         im * std::sin(angle / 2.0) * (axis[0] * sx + axis[1] * sy + axis[2] * sz));

        QubitConfig rotated = cfg;
        // State: (U (x) 1) |psi>.
        Eigen::Matrix2cd amp;
        amp << cfg.state[0], cfg.state[1], cfg.state[2], cfg.state[3];
        amp = u * amp;
        rotated.state << amp(0, 0), amp(0, 1), amp(1, 0), amp(1, 1);
        // Axes: conjugate the Bloch vectors by the same rotation.
        auto rotate = [&](const Eigen::Vector3d& n) -> Eigen::Vector3d {
            return std::cos(angle) * n + std::sin(angle) * axis.cross(n) +
                   (1.0 - std::cos(angle)) * axis.dot(n) * axis;
        };
        for (int k = 0; k < 2; ++k)
            rotated.alice_axes[k] = bloch_angles(rotate(bloch_vector(cfg.alice_axes[k])));

        const Behavior beh = behavior_from_qubit(rotated);
        CHECK((beh.raw() - base.raw()).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("unconstrained qubit search reaches the quantum bound") {
    SearchOptions so;
    so.restarts = 50;
    so.seed = 7;
    const QubitSearchResult res = max_chsh_qubits(0, so);
    CHECK(res.feasible);
    CHECK(std::abs(res.value - (std::sqrt(2.0) - 1.0)) <= 1e-6);
    CHECK(res.behavior.is_valid());
    // The returned configuration reproduces the returned value.
    CHECK(chsh_value(behavior_from_qubit(res.config)) == doctest::Approx(res.value).epsilon(1e-9));
}

TEST_CASE("constrained searches match the face classification") {
    SearchOptions so;
    so.restarts = 40;
    so.seed = 19;

    const QubitSearchResult s1 = max_chsh_qubits(kS1Mask, so);
    CHECK(s1.feasible);
    CHECK(s1.value <= 1e-6);

    // Zeroing any void-edge pair kills the violation.
    const auto& edges = void_edges();
    for (int k : {0, 5}) {
        const auto [p, q] = edges[k];
        const QubitSearchResult res = max_chsh_qubits(mask_of({p, q}), so);
        CHECK(res.feasible);
        CHECK(res.value <= 1e-6);
    }

    // The Hardy face supports at least the maximal Hardy violation.
    const QubitSearchResult hardy = max_chsh_qubits(mask_of({3, 6, 7}), so);
    CHECK(hardy.feasible);
    CHECK(hardy.value >= 2.0 * hardy_max_success() - 1e-6);
}

TEST_CASE("three-input inequality values") {
    CHECK(i3322_value(deterministic3({0, 0, 0}, {0, 0, 0})) == doctest::Approx(0.0));
    CHECK(i3322_value(white_noise_box(3, 3)) == doctest::Approx(-1.0));

    // Local bound oracle: the maximum over all 8 x 8 deterministic
    // strategies is exactly zero.
    double best = -1e9;
    for (int fa = 0; fa < 8; ++fa)
        for (int fb = 0; fb < 8; ++fb) {
            const std::array<int, 3> ra = {fa & 1, (fa >> 1) & 1, (fa >> 2) & 1};
            const std::array<int, 3> rb = {fb & 1, (fb >> 1) & 1, (fb >> 2) & 1};
            best = std::max(best, i3322_value(deterministic3(ra, rb)));
        }
    CHECK(best == doctest::Approx(0.0));
}

TEST_CASE("dimension witness searches") {
    SearchOptions so;
    so.restarts = 60;
    so.seed = 11;

    const QutritSearchResult qutrit = max_i3322_qutrits(so);
    CHECK(qutrit.feasible);
    CHECK(qutrit.value >= 0.2);
    CHECK(qutrit.behavior.is_valid(1e-9));
    CHECK(qutrit.behavior(0, 0, 1, 1) <= 1e-8);
    CHECK(qutrit.behavior(0, 1, 1, 0) <= 1e-8);
    // The returned configuration reproduces the table.
    const Behavior again = behavior_from_qutrit(qutrit.config);
    CHECK((again.raw() - qutrit.behavior.raw()).cwiseAbs().maxCoeff() <= 1e-12);

    const QubitSearchResult qubit = max_i3322_qubits(so);
    CHECK(qubit.feasible);
    CHECK(qubit.value <= 1e-6);

    const QutritSearchResult relaxed = max_i3322_qutrits_unconstrained(so);
    CHECK(relaxed.value >= qutrit.value - 1e-9);
}
