#pragma once

// Probability-vector algebra for bipartite binary-outcome Bell scenarios:
// canonical indexing of the CHSH table, no-signaling reconstruction from the
// eight free coordinates, PR / deterministic boxes, CHSH functionals and
// correlators.

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <stdexcept>

namespace bellscope {

/// Absolute tolerance used for exact analytic identities (normalization,
/// no-signaling residuals, closed-form probability values).
inline constexpr double kProbTol = 1e-12;

using Vec8 = Eigen::Matrix<double, 8, 1>;
using Vec16 = Eigen::Matrix<double, 16, 1>;

/// Free coordinates p_1..p_8 of the nonlocal simplex, stored 0-based.
using FreeVector = Vec8;

/// Thrown by from_free when the reconstructed table leaves [0,1], i.e. the
/// given coordinates do not describe a no-signaling point.
class OutOfSimplexError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A full conditional distribution p(a,b|x,y) with binary outcomes and
// inputs_a() x inputs_b() input pairs.  Values are stored as plain doubles;
// validity (range, normalization, no-signaling) is checked on demand, not
// enforced on write.
class Behavior {
public:
    Behavior(int inputs_a, int inputs_b)
        : nx_(inputs_a), ny_(inputs_b), p_(Eigen::VectorXd::Zero(4 * inputs_a * inputs_b)) {
        if (inputs_a < 1 || inputs_b < 1) throw std::invalid_argument("Behavior: inputs must be positive");
    }

    Behavior(int inputs_a, int inputs_b, Eigen::VectorXd probs)
        : nx_(inputs_a), ny_(inputs_b), p_(std::move(probs)) {
        if (p_.size() != 4 * nx_ * ny_) throw std::invalid_argument("Behavior: wrong table size");
    }

    int inputs_a() const { return nx_; }
    int inputs_b() const { return ny_; }

    double operator()(int a, int b, int x, int y) const { return p_[pos(a, b, x, y)]; }
    double& at(int a, int b, int x, int y) { return p_[pos(a, b, x, y)]; }

    /// Alice's marginal p_A(a|x), evaluated with Bob's input fixed to 0.
    double marginal_a(int a, int x) const { return (*this)(a, 0, x, 0) + (*this)(a, 1, x, 0); }
    /// Bob's marginal p_B(b|y), evaluated with Alice's input fixed to 0.
    double marginal_b(int b, int y) const { return (*this)(0, b, 0, y) + (*this)(1, b, 0, y); }

    /// Range, per-context normalization and no-signaling, all within tol.
    bool is_valid(double tol = kProbTol) const;

    const Eigen::VectorXd& raw() const { return p_; }
    Eigen::VectorXd& raw() { return p_; }

    bool operator==(const Behavior& o) const {
        return nx_ == o.nx_ && ny_ == o.ny_ && p_.size() == o.p_.size() &&
               (p_.array() == o.p_.array()).all();
    }

private:
    int pos(int a, int b, int x, int y) const {
        if ((a | b) & ~1 || x < 0 || x >= nx_ || y < 0 || y >= ny_)
            throw std::out_of_range("Behavior: entry out of range");
        return ((x * ny_ + y) * 2 + a) * 2 + b;
    }

    int nx_, ny_;
    Eigen::VectorXd p_;
};

/// Canonical position of p(a,b|x,y) in the 16-vector of the CHSH table,
/// in 1..16.  Positions 1..8 are exactly the free coordinates (the entries
/// that vanish on the canonical PR box).
int index_of(int a, int b, int x, int y);

/// Inverse of index_of: the (a,b,x,y) tuple stored at position i in 1..16.
std::array<int, 4> entry_of_index(int i);

/// The eight free coordinates of a CHSH behavior.
FreeVector free_coords(const Behavior& beh);

/// Reconstruct the unique no-signaling behavior with the given free
/// coordinates.  Throws OutOfSimplexError when a dependent entry leaves [0,1].
Behavior from_free(const FreeVector& f);

/// Nonlocal extremal box p = (1/2) delta_{a^b, xy ^ alpha.x ^ beta.y ^ gamma}.
Behavior pr_box(int alpha = 0, int beta = 0, int gamma = 0);

/// Deterministic box a = a1.x ^ a2, b = b1.y ^ b2.
Behavior local_box(int a1, int a2, int b1, int b2);

/// Uniform table p = 1/4 for every entry.
Behavior white_noise_box(int inputs_a = 2, int inputs_b = 2);

/// CHSH value in free-variable form, 1 - sum of the eight free coordinates.
/// Positive exactly on the nonlocal side of the studied facet.
double chsh_value(const Behavior& beh);

/// CHSH in the Clauser-Horne form with marginals,
/// p(00|00)+p(00|01)+p(00|10)-p(00|11)-p_A(0|0)-p_B(0|0).
double chsh_ch_form(const Behavior& beh);

struct Correlators {
    Eigen::Matrix2d joint;  // C_xy
    Eigen::Vector2d alice;  // C_x
    Eigen::Vector2d bob;    // C_y
};

/// Two-point and marginal correlators of a CHSH behavior.
Correlators correlators(const Behavior& beh);

}  // namespace bellscope
