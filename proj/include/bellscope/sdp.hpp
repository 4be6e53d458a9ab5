#pragma once

// Small dense semidefinite feasibility engine.  A problem is an affine
// family of real symmetric matrices: some entries pinned to values, the
// rest grouped so that every entry of a group carries one scalar unknown.
// Feasibility asks whether some assignment makes the matrix positive
// semidefinite; the engine answers by maximizing the smallest eigenvalue
// over the family with a log-det barrier interior-point iteration.

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace bellscope {

struct FixedEntry {
    int row = 0;
    int col = 0;
    double value = 0.0;
};

struct FreeVarGroup {
    std::vector<std::pair<int, int>> cells;  // all tied to one scalar unknown
    double warm_start = 0.0;
};

struct SdpProblem {
    int dim = 0;
    std::vector<FixedEntry> fixed;
    std::vector<FreeVarGroup> free_vars;
    // Optional linear functional over the unknowns, maximized over the
    // feasible set once feasibility is established with margin.
    std::optional<Eigen::VectorXd> objective;
};

enum class SdpStatus { Feasible, Infeasible, MaxIterations };

struct SdpResult {
    SdpStatus status = SdpStatus::MaxIterations;
    Eigen::VectorXd assignment;  // one value per free-variable group
    double min_eigenvalue = 0.0; // of the assembled matrix at `assignment`
    int iterations = 0;          // Newton steps spent
    // Certified bracket on the best achievable smallest eigenvalue.
    double lambda_lower = 0.0;
    double lambda_upper = 0.0;
    // Sharper point estimate of that optimum: the central path is linear in
    // the barrier weight to first order, so the last two centered stages
    // extrapolate to weight zero.  Always clamped to the bracket.
    double lambda_estimate = 0.0;
    double objective_value = 0.0;
};

/// Decide feasibility within feas_tol: Feasible when some assignment keeps
/// the smallest eigenvalue above -feas_tol, Infeasible when provably no
/// assignment can, MaxIterations when the bracket did not resolve within the
/// iteration budget.
SdpResult solve_feasibility(const SdpProblem& problem, double feas_tol = 1e-7,
                            int max_iterations = 500);

/// The symmetric matrix of the family at the given unknown values.
Eigen::MatrixXd assemble(const SdpProblem& problem, const Eigen::VectorXd& assignment);

/// Smallest eigenvalue by cyclic Jacobi sweeps; independent of the
/// eigenvalue routines used inside the solver.
double jacobi_min_eigenvalue(Eigen::MatrixXd a);

/// All eigenvalues by cyclic Jacobi, ascending.
Eigen::VectorXd jacobi_eigenvalues(Eigen::MatrixXd a);

/// Plain-text grid of a matrix, for debug dumps.
std::string matrix_grid(const Eigen::MatrixXd& m);

}  // namespace bellscope
