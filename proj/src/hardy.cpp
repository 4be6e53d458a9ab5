#include "bellscope/hardy.hpp"

#include <cmath>
#include <numbers>

namespace bellscope {

namespace {

// Outcome relabelings that carry the canonical argument onto (a, x, y):
// Alice's input x' reads the canonical measurement x'^x with outcomes
// flipped by ha(x'), and likewise for Bob.  The maps are chosen so the four
// Hardy conditions transform onto each other and free coordinates stay free.
int ha_flip(const HardyArgument& arg, int xp) { return arg.a ^ ((xp ^ arg.x) & arg.y); }
int hb_flip(const HardyArgument& arg, int yp) {
    return arg.a ^ (arg.x & arg.y) ^ ((yp ^ arg.y) & arg.x);
}

}  // namespace

HardyArgument hardy_argument(int a, int x, int y) {
    if ((a | x | y) & ~1) throw std::invalid_argument("hardy_argument: parameters must be bits");
    HardyArgument arg;
    arg.a = a, arg.x = x, arg.y = y;
    arg.i = a ^ y ^ 1;
    arg.j = (x & y) ^ x ^ a ^ 1;
    arg.success = {a, a ^ (x & y), x, y};
    arg.zeros[0] = {arg.i, a ^ (x & y), x ^ 1, y};
    arg.zeros[1] = {a, arg.j, x, y ^ 1};
    arg.zeros[2] = {arg.i ^ 1, arg.j ^ 1, x ^ 1, y ^ 1};
    for (int k = 0; k < 3; ++k) {
        const auto& [za, zb, zx, zy] = arg.zeros[k];
        const int idx = index_of(za, zb, zx, zy);
        if (idx > 8) throw std::logic_error("hardy_argument: zero entry not a free coordinate");
        arg.zero_free_indices[k] = idx;
        arg.zero_mask |= FaceMask(1u << (idx - 1));
    }
    return arg;
}

std::array<HardyArgument, 8> enumerate_arguments() {
    std::array<HardyArgument, 8> out;
    int k = 0;
    for (int a = 0; a < 2; ++a)
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y) out[k++] = hardy_argument(a, x, y);
    return out;
}

bool satisfies_argument(const Behavior& beh, const HardyArgument& arg, double tol) {
    for (const auto& [a, b, x, y] : arg.zeros)
        if (beh(a, b, x, y) > tol) return false;
    const auto& [a, b, x, y] = arg.success;
    return beh(a, b, x, y) > 0.0;
}

QubitConfig hardy_max_config() {
    const double s5 = std::sqrt(5.0);
    QubitConfig cfg;
    cfg.state << -std::sqrt((5.0 * s5 - 11.0) / 2.0),
                 (-3.0 + s5) / 2.0,
                 (-3.0 + s5) / 2.0,
                 std::sqrt((s5 - 1.0) / 2.0);
    const double alpha = 2.0 * std::atan(std::sqrt(s5 - 2.0));
    cfg.alice_axes = {Eigen::Vector2d(0.0, 0.0), Eigen::Vector2d(2.0 * alpha, 0.0)};
    cfg.bob_axes = cfg.alice_axes;
    return cfg;
}

QubitConfig hardy_max_config(const HardyArgument& arg) {
    const QubitConfig base = hardy_max_config();
    auto flipped = [](const Eigen::Vector2d& axis) {
        return Eigen::Vector2d(std::numbers::pi - axis[0], axis[1] + std::numbers::pi);
    };
    QubitConfig cfg;
    cfg.state = base.state;
    for (int xp = 0; xp < 2; ++xp) {
        const Eigen::Vector2d& src = base.alice_axes[xp ^ arg.x];
        cfg.alice_axes[xp] = ha_flip(arg, xp) ? flipped(src) : src;
    }
    for (int yp = 0; yp < 2; ++yp) {
        const Eigen::Vector2d& src = base.bob_axes[yp ^ arg.y];
        cfg.bob_axes[yp] = hb_flip(arg, yp) ? flipped(src) : src;
    }
    return cfg;
}

Behavior hardy_max_point() { return behavior_from_qubit(hardy_max_config()); }

Behavior hardy_max_point(const HardyArgument& arg) {
    return behavior_from_qubit(hardy_max_config(arg));
}

double hardy_max_success() { return (5.0 * std::sqrt(5.0) - 11.0) / 2.0; }

Vec8 l_h_weights() {
    const double s5 = std::sqrt(5.0);
    Vec8 w = Vec8::Zero();
    w[0] = w[1] = w[3] = w[4] = (9.0 - s5) / 38.0;
    w[7] = (1.0 + 2.0 * s5) / 19.0;
    return w;
}

Behavior l_h_point() { return from_free(l_h_weights()); }

double hardy_success(const Behavior& beh, const HardyArgument& arg) {
    for (const auto& [a, b, x, y] : arg.zeros)
        if (beh(a, b, x, y) > 1e-9)
            throw ConditionsViolatedError("hardy_success: zero condition fails");
    const auto& [a, b, x, y] = arg.success;
    return beh(a, b, x, y);
}

}  // namespace bellscope
