#pragma once

// Explicit quantum models and variational searches over them: two-qubit
// states with projective measurements for CHSH-type questions, two-qutrit
// models for the three-input inequality used as a dimension witness.

#include "bellscope/behavior.hpp"
#include "bellscope/simplex.hpp"

#include <complex>
#include <cstdint>
#include <optional>

namespace bellscope {

using Complex = std::complex<double>;

// A pure two-qubit state with one projective measurement per input and
// party.  Axes are Bloch angles (theta, phi); outcome 0 projects onto
// (cos(theta/2), e^{i phi} sin(theta/2)).
struct QubitConfig {
    Eigen::Vector4cd state;                       // row-major c_{ab}
    std::array<Eigen::Vector2d, 2> alice_axes;
    std::array<Eigen::Vector2d, 2> bob_axes;
};

// A pure two-qutrit state with three rank-1 projective measurements per
// party; outcome 0 projects onto the stored direction, outcome 1 onto its
// orthogonal complement.  Directions are parameterized by two magnitude
// angles and two relative phases:
// (cos t1, e^{i f1} sin t1 cos t2, e^{i f2} sin t1 sin t2).
struct QutritConfig {
    Eigen::Matrix<Complex, 9, 1> state;           // row-major c_{ab}
    std::array<Eigen::Vector4d, 3> alice_dirs;
    std::array<Eigen::Vector4d, 3> bob_dirs;
};

Eigen::Vector2cd bloch_direction(double theta, double phi);
Eigen::Vector3cd qutrit_direction(const Eigen::Vector4d& angles);

/// Born-rule table of the configuration (a 2x2-input behavior).
Behavior behavior_from_qubit(const QubitConfig& cfg);

/// Born-rule table of the configuration (a 3x3-input behavior).
Behavior behavior_from_qutrit(const QutritConfig& cfg);

/// The three-input bipartite inequality used by the dimension witness;
/// nonpositive on local behaviors.
double i3322_value(const Behavior& beh);

struct SearchOptions {
    int restarts = 200;
    std::uint64_t seed = 1;
    double zero_tol = 1e-8;       // accepted residual on constrained entries
    // Escalating multipliers for the exterior penalty on constrained
    // entries.  The tail stages tighten the residuals far enough below
    // zero_tol that the reported objective is not inflated by slack.
    std::vector<double> penalty_schedule = {1e1, 1e2, 1e3, 1e4, 1e5, 1e6, 1e7, 1e8};
    int bfgs_iterations = 300;
    // Stop scheduling restarts once a feasible candidate beats this value.
    std::optional<double> early_stop_value;
    bool parallel = true;         // restarts fan out across threads
};

struct QubitSearchResult {
    double value = 0.0;           // best feasible objective ("best found")
    bool feasible = false;        // some restart met the zero constraints
    QubitConfig config;
    Behavior behavior{2, 2};
    int restarts_used = 0;
};

/// Best-found CHSH value (free-variable form) over two-qubit models whose
/// behavior vanishes on the masked free coordinates.  Reported values are
/// lower bounds on the true constrained maximum.
QubitSearchResult max_chsh_qubits(FaceMask zeroed, const SearchOptions& opts = {});

struct QutritSearchResult {
    double value = 0.0;
    bool feasible = false;
    QutritConfig config;
    Behavior behavior{3, 3};
    int restarts_used = 0;
};

/// Best-found value of the three-input inequality over two-qutrit models
/// with p(0,0|1,1) = p(0,1|1,0) = 0.
QutritSearchResult max_i3322_qutrits(const SearchOptions& opts = {});

/// The same search restricted to two-qubit models (three measurements per
/// party, dimension 2); the zero constraints force separability there.
QubitSearchResult max_i3322_qubits(const SearchOptions& opts = {});

/// Unconstrained variant, for relaxation checks.
QutritSearchResult max_i3322_qutrits_unconstrained(const SearchOptions& opts = {});

}  // namespace bellscope
