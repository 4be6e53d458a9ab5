#include "bellscope/sdp.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace bellscope {

namespace {

constexpr double kNuFloor = 1e-11;
constexpr double kNuShrink = 0.15;
constexpr int kMaxCenterSteps = 40;

struct AffineFamily {
    int n = 0;
    Eigen::MatrixXd c0;
    std::vector<Eigen::MatrixXd> gens;
    bool diag_all_fixed = true;
    double diag_bound = 0.0;  // max fixed diagonal value
};

AffineFamily build_family(const SdpProblem& p) {
    if (p.dim < 1 || p.dim > 64) throw std::invalid_argument("sdp: dim must be in 1..64");
    AffineFamily fam;
    fam.n = p.dim;
    fam.c0 = Eigen::MatrixXd::Zero(p.dim, p.dim);
    // -2 unset, -1 fixed, k >= 0 free group k
    Eigen::MatrixXi owner = Eigen::MatrixXi::Constant(p.dim, p.dim, -2);

    auto claim = [&](int r, int c, int who, const char* what) {
        if (r < 0 || r >= p.dim || c < 0 || c >= p.dim)
            throw std::invalid_argument("sdp: cell out of range");
        if (owner(r, c) != -2 && owner(r, c) != who)
            throw std::invalid_argument(std::string("sdp: cell claimed twice (") + what + ")");
        owner(r, c) = who;
        owner(c, r) = who;
    };

    for (const auto& e : p.fixed) {
        claim(e.row, e.col, -1, "fixed");
        fam.c0(e.row, e.col) = e.value;
        fam.c0(e.col, e.row) = e.value;
    }
    for (int k = 0; k < int(p.free_vars.size()); ++k) {
        Eigen::MatrixXd g = Eigen::MatrixXd::Zero(p.dim, p.dim);
        if (p.free_vars[k].cells.empty())
            throw std::invalid_argument("sdp: empty free-variable group");
        for (const auto& [r, c] : p.free_vars[k].cells) {
            claim(r, c, k, "free");
            g(r, c) = 1.0;
            g(c, r) = 1.0;
            if (r == c) fam.diag_all_fixed = false;
        }
        fam.gens.push_back(std::move(g));
    }
    for (int r = 0; r < p.dim; ++r)
        for (int c = r; c < p.dim; ++c)
            if (owner(r, c) == -2)
                throw std::invalid_argument("sdp: cell neither fixed nor tied to an unknown");
    fam.diag_bound = fam.c0.diagonal().maxCoeff();
    return fam;
}

Eigen::MatrixXd assemble_family(const AffineFamily& fam, const Eigen::VectorXd& u) {
    Eigen::MatrixXd m = fam.c0;
    for (int k = 0; k < int(fam.gens.size()); ++k) m += u[k] * fam.gens[k];
    return m;
}

double eig_min(const Eigen::MatrixXd& m) {
    if (m.rows() == 1) return m(0, 0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

// One barrier subproblem: maximize b.z + nu*logdet(c0 + sum z_k G_k) by
// damped Newton steps.  Keeps the argument strictly feasible throughout.
struct CenterState {
    Eigen::VectorXd grad;
    double decrement_sq = 0.0;
    int steps = 0;
    bool centered = false;
};

CenterState newton_center(const Eigen::MatrixXd& c0, const std::vector<Eigen::MatrixXd>& gens,
                          const Eigen::VectorXd& b, double nu, Eigen::VectorXd& z,
                          int step_budget) {
    const int n = int(c0.rows());
    const int m = int(gens.size());
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);

    auto assemble_z = [&](const Eigen::VectorXd& zz) {
        Eigen::MatrixXd s = c0;
        for (int k = 0; k < m; ++k) s += zz[k] * gens[k];
        return s;
    };
    auto log_det = [](const Eigen::LLT<Eigen::MatrixXd>& llt) {
        return 2.0 * llt.matrixLLT().diagonal().array().log().sum();
    };

    CenterState st;
    Eigen::LLT<Eigen::MatrixXd> llt(assemble_z(z));
    if (llt.info() != Eigen::Success)
        throw std::logic_error("sdp: lost positive definiteness during centering");
    double psi = b.dot(z) + nu * log_det(llt);

    for (st.steps = 0; st.steps < step_budget; ++st.steps) {
        const Eigen::MatrixXd w = llt.solve(eye);
        std::vector<Eigen::MatrixXd> wg(m);
        for (int k = 0; k < m; ++k) wg[k] = w * gens[k];

        Eigen::VectorXd g(m);
        for (int k = 0; k < m; ++k) g[k] = b[k] + nu * wg[k].trace();
        Eigen::MatrixXd h(m, m);
        for (int k = 0; k < m; ++k)
            for (int l = k; l < m; ++l) {
                h(k, l) = nu * (wg[k] * wg[l]).trace();
                h(l, k) = h(k, l);
            }
        Eigen::VectorXd d = h.ldlt().solve(g);
        st.grad = g;
        st.decrement_sq = g.dot(d);
        if (!std::isfinite(st.decrement_sq)) {
            st.centered = false;
            return st;
        }
        if (st.decrement_sq <= 1e-13) {
            st.centered = true;
            return st;
        }

        double alpha = 1.0;
        bool moved = false;
        while (alpha > 1e-14) {
            const Eigen::VectorXd zt = z + alpha * d;
            Eigen::LLT<Eigen::MatrixXd> ltry(assemble_z(zt));
            if (ltry.info() == Eigen::Success) {
                const double pt = b.dot(zt) + nu * log_det(ltry);
                if (pt >= psi + 0.25 * alpha * st.decrement_sq) {
                    z = zt;
                    psi = pt;
                    llt = std::move(ltry);
                    moved = true;
                    break;
                }
            }
            alpha *= 0.5;
        }
        if (!moved) {
            st.centered = st.decrement_sq <= 1e-7;
            return st;
        }
    }
    st.centered = st.decrement_sq <= 1e-7;
    return st;
}

}  // namespace

Eigen::MatrixXd assemble(const SdpProblem& problem, const Eigen::VectorXd& assignment) {
    const AffineFamily fam = build_family(problem);
    if (assignment.size() != int(fam.gens.size()))
        throw std::invalid_argument("assemble: wrong assignment size");
    return assemble_family(fam, assignment);
}

SdpResult solve_feasibility(const SdpProblem& problem, double feas_tol, int max_iterations) {
    if (feas_tol <= 0.0) throw std::invalid_argument("solve_feasibility: feas_tol must be positive");
    const AffineFamily fam = build_family(problem);
    const int n = fam.n;
    const int m = int(fam.gens.size());

    SdpResult res;

    if (m == 0) {
        res.assignment = Eigen::VectorXd();
        res.min_eigenvalue = jacobi_min_eigenvalue(fam.c0);
        res.lambda_lower = res.lambda_upper = res.min_eigenvalue;
        res.status = res.min_eigenvalue >= -feas_tol ? SdpStatus::Feasible : SdpStatus::Infeasible;
        return res;
    }

    Eigen::VectorXd warm(m);
    for (int k = 0; k < m; ++k) warm[k] = problem.free_vars[k].warm_start;

    Eigen::VectorXd best_u = warm;
    double best_lb = eig_min(assemble_family(fam, warm));

    // Extended family over (u, t): maximize t with C0 + sum u_k G_k - t I psd.
    std::vector<Eigen::MatrixXd> gens_t = fam.gens;
    gens_t.push_back(-Eigen::MatrixXd::Identity(n, n));
    Eigen::VectorXd b = Eigen::VectorXd::Zero(m + 1);
    b[m] = 1.0;

    Eigen::VectorXd z(m + 1);
    z.head(m) = warm;
    z[m] = best_lb - 1.0;

    double nu = 1.0;
    double upper = std::numeric_limits<double>::infinity();
    int used = 0;
    std::vector<std::pair<double, double>> path;  // centered (nu, t) stages

    while (true) {
        const int budget = std::max(1, std::min(kMaxCenterSteps, max_iterations - used));
        const CenterState st = newton_center(fam.c0, gens_t, b, nu, z, budget);
        used += std::max(st.steps, 1);

        const double lam = eig_min(assemble_family(fam, z.head(m)));
        if (lam > best_lb) {
            best_lb = lam;
            best_u = z.head(m);
        }

        // Dual bound from the (approximate) center.  W = nu * S^{-1} has
        // <G_k, W> = g_k and tr W = 1 - g_t; when the diagonal is fully
        // fixed every feasible unknown is bounded by the largest diagonal
        // entry, which prices out the residual infeasibility.
        if (st.centered) path.emplace_back(nu, z[m]);
        if (st.centered) {
            const double denom = 1.0 - st.grad[m];
            if (denom > 0.5) {
                const Eigen::MatrixXd s = assemble_family(fam, z.head(m)) -
                                          z[m] * Eigen::MatrixXd::Identity(n, n);
                const Eigen::LLT<Eigen::MatrixXd> llt(s);
                if (llt.info() == Eigen::Success) {
                    const double trc = nu * llt.solve(fam.c0).trace();
                    double infeas = 0.0;
                    for (int k = 0; k < m; ++k) infeas += std::abs(st.grad[k]);
                    const double radius = fam.diag_all_fixed
                                              ? fam.diag_bound + std::abs(z[m]) + 1.0
                                              : 1e6;
                    upper = std::min(upper, (trc + radius * infeas) / denom);
                }
            }
            upper = std::min(upper, z[m] + nu * n + 1e-9);
        }

        const bool feasible = best_lb >= -feas_tol;
        const bool infeasible = upper < -feas_tol;
        if (feasible || infeasible) {
            res.status = feasible ? SdpStatus::Feasible : SdpStatus::Infeasible;
            break;
        }
        if (used >= max_iterations || nu < kNuFloor) {
            res.status = SdpStatus::MaxIterations;
            break;
        }
        nu *= kNuShrink;
    }

    res.iterations = used;
    res.assignment = best_u;
    res.min_eigenvalue = jacobi_min_eigenvalue(assemble_family(fam, best_u));
    res.lambda_lower = best_lb;
    res.lambda_upper = std::isfinite(upper) ? std::max(upper, best_lb) : best_lb;
    if (path.size() >= 2) {
        const auto [nu1, t1] = path[path.size() - 2];
        const auto [nu2, t2] = path.back();
        res.lambda_estimate = t2 + (t2 - t1) * nu2 / (nu1 - nu2);
    } else {
        res.lambda_estimate = 0.5 * (res.lambda_lower + res.lambda_upper);
    }
    res.lambda_estimate = std::clamp(res.lambda_estimate, res.lambda_lower, res.lambda_upper);

    if (problem.objective && res.status == SdpStatus::Feasible) {
        const Eigen::VectorXd& c = *problem.objective;
        if (c.size() != m) throw std::invalid_argument("solve_feasibility: objective size mismatch");
        res.objective_value = c.dot(res.assignment);
        if (best_lb > 1e-9) {
            // Strictly feasible start; push the linear functional along the
            // central path of the psd constraint alone.
            Eigen::VectorXd zu = best_u;
            for (double nuo = 1.0; nuo >= 1e-9 && used < max_iterations; nuo *= kNuShrink) {
                const CenterState st = newton_center(fam.c0, fam.gens, c, nuo, zu,
                                                     std::min(kMaxCenterSteps, max_iterations - used));
                used += std::max(st.steps, 1);
            }
            res.iterations = used;
            res.assignment = zu;
            res.objective_value = c.dot(zu);
            res.min_eigenvalue = jacobi_min_eigenvalue(assemble_family(fam, zu));
        }
    }
    return res;
}

Eigen::VectorXd jacobi_eigenvalues(Eigen::MatrixXd a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("jacobi: matrix must be square");
    const int n = int(a.rows());
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());

    for (int sweep = 0; sweep < 50; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (std::sqrt(off) < 1e-15 * scale) break;

        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) < 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double cs = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * cs;
                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = cs * akp - sn * akq;
                    a(k, q) = sn * akp + cs * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = cs * apk - sn * aqk;
                    a(q, k) = sn * apk + cs * aqk;
                }
            }
    }
    Eigen::VectorXd ev = a.diagonal();
    std::sort(ev.data(), ev.data() + n);
    return ev;
}

double jacobi_min_eigenvalue(Eigen::MatrixXd a) { return jacobi_eigenvalues(std::move(a))[0]; }

std::string matrix_grid(const Eigen::MatrixXd& m) {
    std::ostringstream os;
    os << std::setprecision(12);
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) os << std::setw(20) << m(r, c) << (c + 1 < m.cols() ? " " : "");
        os << '\n';
    }
    return os.str();
}

}  // namespace bellscope
