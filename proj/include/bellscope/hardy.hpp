#pragma once

// Hardy nonlocality machinery: the family of eight arguments (one positive
// probability plus three zero constraints, jointly incompatible with local
// models), the closed-form maximal quantum Hardy point, and the local point
// that aligns it with the PR box.

#include "bellscope/behavior.hpp"
#include "bellscope/quantum.hpp"
#include "bellscope/simplex.hpp"

namespace bellscope {

class ConditionsViolatedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct HardyArgument {
    int a = 0, x = 0, y = 0;  // family parameters
    int i = 0, j = 0;         // derived outcome labels of the zero entries
    std::array<int, 4> success{};             // (a, b, x, y) of the positive entry
    std::array<std::array<int, 4>, 3> zeros{};
    std::array<int, 3> zero_free_indices{};   // positions of the zeros among p_1..p_8
    FaceMask zero_mask = 0;
};

HardyArgument hardy_argument(int a, int x, int y);

/// One argument per (a, x, y); together they exhaust the Hardy points of the
/// nonlocal simplex.
std::array<HardyArgument, 8> enumerate_arguments();

/// Whether the behavior meets all four conditions of the argument: the three
/// zeros within tol and a strictly positive success entry.
bool satisfies_argument(const Behavior& beh, const HardyArgument& arg, double tol = 1e-9);

/// The two-qubit state and measurements realizing the maximal quantum Hardy
/// point of the canonical argument (a = x = y = 0).
QubitConfig hardy_max_config();
QubitConfig hardy_max_config(const HardyArgument& arg);

/// Born-rule table of hardy_max_config; success probability (5*sqrt(5)-11)/2.
Behavior hardy_max_point();
Behavior hardy_max_point(const HardyArgument& arg);

/// Maximal quantum Hardy success probability, (5*sqrt(5)-11)/2.
double hardy_max_success();

/// Convex weights over L1..L8 of the local point collinear with the PR box
/// and the maximal Hardy point.
Vec8 l_h_weights();

/// The local behavior with those weights.
Behavior l_h_point();

/// Success-probability entry of a behavior satisfying the argument's zero
/// conditions (within 1e-9); throws ConditionsViolatedError otherwise.
double hardy_success(const Behavior& beh, const HardyArgument& arg);

}  // namespace bellscope
