#pragma once

// Analytic principle checkers on CHSH behaviors: the quadratic correlator
// inequality (necessary for information causality) and the arcsine condition
// for macroscopic locality, plus boundary search along simplex segments.

#include "bellscope/behavior.hpp"
#include "bellscope/simplex.hpp"

#include <functional>

namespace bellscope {

class PredicateInconsistentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PrincipleVerdict {
    double value = 0.0;
    double threshold = 0.0;
    bool satisfied = false;
    // Set when some marginal correlator is (numerically) +-1; the arcsine
    // statistic is undefined there and the point counts as satisfying.
    bool degenerate = false;
};

/// (C00 + C10)^2 + (C01 - C11)^2; at most 4 for anything respecting
/// information causality.
double uffink_value(const Behavior& beh);

PrincipleVerdict uffink_check(const Behavior& beh);

/// Macroscopic-locality statistic |asin D00 + asin D01 + asin D10 - asin D11|
/// with D_xy the partial correlation of C_xy given the marginals; threshold
/// pi.  Degenerate when any 1 - C^2 of a marginal correlator drops below
/// 1e-9.  Throws std::domain_error if some |D_xy| exceeds 1 by more than 1e-9.
PrincipleVerdict ml_value(const Behavior& beh);

/// Largest mu with inside(point(mu)) true, located by bisection.  Valid for
/// predicates whose satisfied set on the segment is an interval containing 0
/// (convex membership sets have this form).  Returns the certified inside
/// endpoint of the final bracket, so an all-violated segment yields exactly 0.
double boundary_mu(const Segment& seg, const std::function<bool(const Behavior&)>& inside,
                   double tol_mu = 1e-9, int max_iterations = 60);

struct VoidPrincipleReport {
    FaceMask mask = 0;
    double mu_uffink = 0.0;
    double mu_ml = 0.0;
    bool uffink_reproducible = false;  // mu* == 0 within tolerance
    bool ml_reproducible = false;
};

/// Boundary values on the face's center segment under both principles.
/// A void face is reproducible by a principle when the principle already
/// fails everywhere above the local face, i.e. mu* = 0.
VoidPrincipleReport void_principle_report(const Face& face, double tol_mu = 1e-9);

}  // namespace bellscope
