#include "bellscope/principles.hpp"

#include <cmath>
#include <numbers>

namespace bellscope {

namespace {

// Comparisons against the analytic thresholds get this much slack so that
// points exactly on a boundary (local vertices under the quadratic
// inequality, say) are not misread as violations through rounding.  Along a
// segment tangent to the boundary the slack floors the located mu* at
// sqrt(slack), so it must stay well below squared bisection tolerances.
constexpr double kThresholdSlack = 1e-12;
constexpr double kDegenerateEps = 1e-9;   // on 1 - C^2
constexpr double kAsinDomainSlack = 1e-9;

}  // namespace

double uffink_value(const Behavior& beh) {
    const Correlators c = correlators(beh);
    const double u = c.joint(0, 0) + c.joint(1, 0);
    const double v = c.joint(0, 1) - c.joint(1, 1);
    return u * u + v * v;
}

PrincipleVerdict uffink_check(const Behavior& beh) {
    PrincipleVerdict out;
    out.value = uffink_value(beh);
    out.threshold = 4.0;
    out.satisfied = out.value <= out.threshold + kThresholdSlack;
    return out;
}

PrincipleVerdict ml_value(const Behavior& beh) {
    const Correlators c = correlators(beh);
    PrincipleVerdict out;
    out.threshold = std::numbers::pi;

    for (int k = 0; k < 2; ++k) {
        if (1.0 - c.alice[k] * c.alice[k] < kDegenerateEps) out.degenerate = true;
        if (1.0 - c.bob[k] * c.bob[k] < kDegenerateEps) out.degenerate = true;
    }
    if (out.degenerate) {
        out.satisfied = true;
        return out;
    }

    double total = 0.0;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            const double denom = std::sqrt((1.0 - c.alice[x] * c.alice[x]) *
                                           (1.0 - c.bob[y] * c.bob[y]));
            double d = (c.joint(x, y) - c.alice[x] * c.bob[y]) / denom;
            if (std::abs(d) > 1.0 + kAsinDomainSlack)
                throw std::domain_error("ml_value: partial correlation outside [-1,1]");
            d = std::clamp(d, -1.0, 1.0);
            total += ((x & y) ? -1.0 : 1.0) * std::asin(d);
        }
    out.value = std::abs(total);
    out.satisfied = out.value <= out.threshold + kThresholdSlack;
    return out;
}

double boundary_mu(const Segment& seg, const std::function<bool(const Behavior&)>& inside,
                   double tol_mu, int max_iterations) {
    if (tol_mu <= 0.0) throw std::invalid_argument("boundary_mu: tol_mu must be positive");
    if (!inside(seg.point(0.0)))
        throw PredicateInconsistentError("boundary_mu: local endpoint fails the predicate");
    if (inside(seg.point(1.0))) return 1.0;

    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < max_iterations && hi - lo > tol_mu; ++it) {
        const double mid = 0.5 * (lo + hi);
        (inside(seg.point(mid)) ? lo : hi) = mid;
    }
    return lo;
}

VoidPrincipleReport void_principle_report(const Face& face, double tol_mu) {
    const Segment seg = center_segment(face);
    VoidPrincipleReport rep;
    rep.mask = face.mask;
    rep.mu_uffink =
        boundary_mu(seg, [](const Behavior& b) { return uffink_check(b).satisfied; }, tol_mu);
    rep.mu_ml = boundary_mu(seg, [](const Behavior& b) { return ml_value(b).satisfied; }, tol_mu);
    rep.uffink_reproducible = rep.mu_uffink <= tol_mu;
    rep.ml_reproducible = rep.mu_ml <= tol_mu;
    return rep;
}

}  // namespace bellscope
