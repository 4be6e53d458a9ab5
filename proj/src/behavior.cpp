#include "bellscope/behavior.hpp"

#include <cmath>

namespace bellscope {

namespace {

int require_bit(int v, const char* what) {
    if (v != 0 && v != 1) throw std::invalid_argument(std::string(what) + " must be a bit");
    return v;
}

void require_chsh(const Behavior& beh, const char* what) {
    if (beh.inputs_a() != 2 || beh.inputs_b() != 2)
        throw std::invalid_argument(std::string(what) + " requires a two-input behavior");
}

}  // namespace

bool Behavior::is_valid(double tol) const {
    for (int i = 0; i < p_.size(); ++i)
        if (p_[i] < -tol || p_[i] > 1.0 + tol) return false;
    for (int x = 0; x < nx_; ++x)
        for (int y = 0; y < ny_; ++y) {
            double s = 0.0;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) s += (*this)(a, b, x, y);
            if (std::abs(s - 1.0) > tol) return false;
        }
    // Alice's marginals must not depend on y, Bob's not on x.
    for (int a = 0; a < 2; ++a)
        for (int x = 0; x < nx_; ++x)
            for (int y = 1; y < ny_; ++y) {
                const double m0 = (*this)(a, 0, x, 0) + (*this)(a, 1, x, 0);
                const double my = (*this)(a, 0, x, y) + (*this)(a, 1, x, y);
                if (std::abs(m0 - my) > tol) return false;
            }
    for (int b = 0; b < 2; ++b)
        for (int y = 0; y < ny_; ++y)
            for (int x = 1; x < nx_; ++x) {
                const double m0 = (*this)(0, b, 0, y) + (*this)(1, b, 0, y);
                const double mx = (*this)(0, b, x, y) + (*this)(1, b, x, y);
                if (std::abs(m0 - mx) > tol) return false;
            }
    return true;
}

int index_of(int a, int b, int x, int y) {
    require_bit(a, "a"), require_bit(b, "b"), require_bit(x, "x"), require_bit(y, "y");
    const int c = a ^ b ^ (x & y) ^ 1;
    return 8 * c + 4 * x + 2 * y + a + 1;
}

std::array<int, 4> entry_of_index(int i) {
    if (i < 1 || i > 16) throw std::invalid_argument("entry_of_index: index must be in 1..16");
    const int r = i - 1;
    const int c = r >> 3;
    const int x = (r >> 2) & 1;
    const int y = (r >> 1) & 1;
    const int a = r & 1;
    const int b = a ^ (x & y) ^ 1 ^ c;
    return {a, b, x, y};
}

FreeVector free_coords(const Behavior& beh) {
    require_chsh(beh, "free_coords");
    FreeVector f;
    for (int i = 1; i <= 8; ++i) {
        const auto [a, b, x, y] = entry_of_index(i);
        f[i - 1] = beh(a, b, x, y);
    }
    return f;
}

Behavior from_free(const FreeVector& f) {
    for (int i = 0; i < 8; ++i)
        if (f[i] < -kProbTol || f[i] > 1.0 + kProbTol)
            throw OutOfSimplexError("from_free: free coordinate outside [0,1]");

    Behavior beh(2, 2);
    for (int i = 1; i <= 8; ++i) {
        const auto [a, b, x, y] = entry_of_index(i);
        beh.at(a, b, x, y) = f[i - 1];
    }
    // Each dependent entry is the sum of three free ones plus half the CHSH
    // slack; no-signaling and normalization leave no other choice.
    const double slack = 0.5 * (1.0 - f.sum());
    for (int j = 9; j <= 16; ++j) {
        const auto [a, b, x, y] = entry_of_index(j);
        const int l = 4 * x + 2 * (y ^ 1) + a + 1;
        const int m = 4 * (x ^ 1) + 2 * y + (a ^ y ^ 1) + 1;
        const int n = 4 * (x ^ 1) + 2 * (y ^ 1) + (a ^ y) + 1;
        const double v = f[l - 1] + f[m - 1] + f[n - 1] + slack;
        if (v < -kProbTol || v > 1.0 + kProbTol)
            throw OutOfSimplexError("from_free: reconstructed entry outside [0,1]");
        beh.at(a, b, x, y) = v;
    }
    return beh;
}

Behavior pr_box(int alpha, int beta, int gamma) {
    require_bit(alpha, "alpha"), require_bit(beta, "beta"), require_bit(gamma, "gamma");
    Behavior beh(2, 2);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            const int target = (x & y) ^ (alpha & x) ^ (beta & y) ^ gamma;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    beh.at(a, b, x, y) = ((a ^ b) == target) ? 0.5 : 0.0;
        }
    return beh;
}

Behavior local_box(int a1, int a2, int b1, int b2) {
    require_bit(a1, "a1"), require_bit(a2, "a2"), require_bit(b1, "b1"), require_bit(b2, "b2");
    Behavior beh(2, 2);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) beh.at((a1 & x) ^ a2, (b1 & y) ^ b2, x, y) = 1.0;
    return beh;
}

Behavior white_noise_box(int inputs_a, int inputs_b) {
    Behavior beh(inputs_a, inputs_b);
    beh.raw().setConstant(0.25);
    return beh;
}

double chsh_value(const Behavior& beh) {
    require_chsh(beh, "chsh_value");
    return 1.0 - free_coords(beh).sum();
}

double chsh_ch_form(const Behavior& beh) {
    require_chsh(beh, "chsh_ch_form");
    return beh(0, 0, 0, 0) + beh(0, 0, 0, 1) + beh(0, 0, 1, 0) - beh(0, 0, 1, 1) -
           beh.marginal_a(0, 0) - beh.marginal_b(0, 0);
}

Correlators correlators(const Behavior& beh) {
    require_chsh(beh, "correlators");
    Correlators c;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            double v = 0.0;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) v += ((a ^ b) ? -1.0 : 1.0) * beh(a, b, x, y);
            c.joint(x, y) = v;
        }
    for (int x = 0; x < 2; ++x) c.alice[x] = beh.marginal_a(0, x) - beh.marginal_a(1, x);
    for (int y = 0; y < 2; ++y) c.bob[y] = beh.marginal_b(0, y) - beh.marginal_b(1, y);
    return c;
}

}  // namespace bellscope
