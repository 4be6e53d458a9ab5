#include "bellscope/sdp.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace bellscope;

namespace {

SdpProblem two_by_two_with_unknown_offdiag() {
    SdpProblem p;
    p.dim = 2;
    p.fixed = {{0, 0, 1.0}, {1, 1, 1.0}};
    p.free_vars.push_back({{{0, 1}}, 0.0});
    return p;
}

}  // namespace

TEST_CASE("feasible with a free off-diagonal entry") {
    const SdpResult res = solve_feasibility(two_by_two_with_unknown_offdiag());
    CHECK(res.status == SdpStatus::Feasible);
    CHECK(res.min_eigenvalue >= -1e-7);
    // y = 0 completes to the identity; the maximizer must reach lambda 1.
    CHECK(res.lambda_lower == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("infeasible fully pinned matrix") {
    SdpProblem p;
    p.dim = 2;
    p.fixed = {{0, 0, 1.0}, {1, 1, 1.0}, {0, 1, 2.0}};
    const SdpResult res = solve_feasibility(p);
    CHECK(res.status == SdpStatus::Infeasible);
    CHECK(res.min_eigenvalue == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("certificates recheck through an independent eigenvalue routine") {
    const SdpResult res = solve_feasibility(two_by_two_with_unknown_offdiag());
    const Eigen::MatrixXd m = assemble(two_by_two_with_unknown_offdiag(), res.assignment);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    CHECK(std::abs(res.min_eigenvalue - es.eigenvalues().minCoeff()) <= 1e-9);
}

TEST_CASE("jacobi agrees with the library eigensolver") {
    std::uint64_t s = 31;
    for (int rep = 0; rep < 50; ++rep) {
        const int n = 2 + int(testsup::next_u64(s) % 8);
        Eigen::MatrixXd a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) a(i, j) = a(j, i) = 2.0 * testsup::u01(s) - 1.0;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
        CHECK(jacobi_min_eigenvalue(a) ==
              doctest::Approx(es.eigenvalues().minCoeff()).epsilon(1e-12));
    }
}

TEST_CASE("pinning an unknown to its certificate keeps feasibility, and adding constraints never rescues infeasibility") {
    // Feasible problem, then pin the unknown at the found value.
    const SdpResult base = solve_feasibility(two_by_two_with_unknown_offdiag());
    SdpProblem pinned;
    pinned.dim = 2;
    pinned.fixed = {{0, 0, 1.0}, {1, 1, 1.0}, {0, 1, base.assignment[0]}};
    CHECK(solve_feasibility(pinned).status == SdpStatus::Feasible);

    // Infeasible problem stays infeasible under any extra pin.
    std::uint64_t s = 77;
    for (int rep = 0; rep < 10; ++rep) {
        SdpProblem p;
        p.dim = 3;
        // Diagonal 1, one fixed pair far too large, two unknowns.
        p.fixed = {{0, 0, 1.0}, {1, 1, 1.0}, {2, 2, 1.0}, {0, 1, 1.9}};
        p.free_vars.push_back({{{0, 2}}, 0.0});
        p.free_vars.push_back({{{1, 2}}, 0.0});
        const SdpResult loose = solve_feasibility(p);
        REQUIRE(loose.status == SdpStatus::Infeasible);

        SdpProblem tight = p;
        tight.free_vars.pop_back();
        tight.fixed.push_back({1, 2, 2.0 * testsup::u01(s) - 1.0});
        CHECK(solve_feasibility(tight).status == SdpStatus::Infeasible);
    }
}

TEST_CASE("status is scale invariant") {
    for (double scale : {0.5, 3.0}) {
        SdpProblem p = two_by_two_with_unknown_offdiag();
        for (auto& e : p.fixed) e.value *= scale;
        CHECK(solve_feasibility(p).status == SdpStatus::Feasible);

        SdpProblem q;
        q.dim = 2;
        q.fixed = {{0, 0, scale}, {1, 1, scale}, {0, 1, 2.0 * scale}};
        CHECK(solve_feasibility(q).status == SdpStatus::Infeasible);
    }
}

TEST_CASE("optional linear objective pushes to the feasible boundary") {
    SdpProblem p = two_by_two_with_unknown_offdiag();
    p.objective = Eigen::VectorXd::Ones(1);
    const SdpResult res = solve_feasibility(p);
    CHECK(res.status == SdpStatus::Feasible);
    CHECK(res.objective_value == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(res.min_eigenvalue >= -1e-7);
}

TEST_CASE("problem validation") {
    SdpProblem bad;
    bad.dim = 2;
    bad.fixed = {{0, 0, 1.0}, {1, 1, 1.0}};
    bad.free_vars.push_back({{{0, 1}}, 0.0});
    bad.free_vars.push_back({{{1, 0}}, 0.0});  // same cell, second owner
    CHECK_THROWS_AS((void)solve_feasibility(bad), std::invalid_argument);

    SdpProblem uncovered;
    uncovered.dim = 2;
    uncovered.fixed = {{0, 0, 1.0}, {1, 1, 1.0}};
    CHECK_THROWS_AS((void)solve_feasibility(uncovered), std::invalid_argument);
}
