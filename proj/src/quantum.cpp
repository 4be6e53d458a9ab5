#include "bellscope/quantum.hpp"

#include "bellscope/optim.hpp"
#include "bellscope/parallel.hpp"

#include <cmath>
#include <numbers>

namespace bellscope {

namespace {

std::uint64_t splitmix64(std::uint64_t v) {
    v += 0x9e3779b97f4a7c15ull;
    v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ull;
    v = (v ^ (v >> 27)) * 0x94d049bb133111ebull;
    return v ^ (v >> 31);
}

// Deterministic uniform angles independent of library distributions.
double uniform_angle(std::uint64_t& state) {
    state = splitmix64(state);
    return double(state >> 11) * 0x1.0p-53 * 2.0 * std::numbers::pi;
}

// Hyperspherical magnitudes (m-1 angles) and relative phases (m-1, the
// leading amplitude kept real) to a unit vector of length m.
Eigen::VectorXcd unit_vector(const double* mag, const double* phase, int m) {
    Eigen::VectorXcd v(m);
    double tail = 1.0;
    for (int k = 0; k < m; ++k) {
        const double r = (k < m - 1) ? tail * std::cos(mag[k]) : tail;
        if (k < m - 1) tail *= std::sin(mag[k]);
        v[k] = std::polar(r, k == 0 ? 0.0 : phase[k - 1]);
    }
    return v;
}

struct ModelShape {
    int dim;     // local Hilbert-space dimension
    int inputs;  // measurements per party

    int state_params() const { return 2 * (dim * dim - 1); }
    int dir_params() const { return 2 * (dim - 1); }
    int total_params() const { return state_params() + 2 * inputs * dir_params(); }
};

struct Model {
    Eigen::MatrixXcd amp;                    // dim x dim state amplitudes c_{ab}
    std::vector<Eigen::VectorXcd> alice;     // outcome-0 directions per input
    std::vector<Eigen::VectorXcd> bob;
};

Model unpack(const ModelShape& sh, const Eigen::VectorXd& p) {
    Model m;
    const int d = sh.dim;
    const int msz = d * d;
    const double* q = p.data();
    const Eigen::VectorXcd state = unit_vector(q, q + (msz - 1), msz);
    q += sh.state_params();
    m.amp = Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic,
                                           Eigen::RowMajor>>(state.data(), d, d);
    for (int party = 0; party < 2; ++party) {
        auto& dirs = party == 0 ? m.alice : m.bob;
        for (int k = 0; k < sh.inputs; ++k) {
            dirs.push_back(unit_vector(q, q + (d - 1), d));
            q += sh.dir_params();
        }
    }
    return m;
}

Behavior born_table(const ModelShape& sh, const Model& m) {
    Behavior beh(sh.inputs, sh.inputs);
    std::vector<Eigen::RowVectorXcd> ua(sh.inputs);
    std::vector<Eigen::VectorXcd> cv(sh.inputs);
    std::vector<double> pa(sh.inputs), pb(sh.inputs);
    for (int x = 0; x < sh.inputs; ++x) {
        ua[x] = m.alice[x].adjoint() * m.amp;
        pa[x] = ua[x].squaredNorm();
    }
    for (int y = 0; y < sh.inputs; ++y) {
        cv[y] = m.amp * m.bob[y].conjugate();
        pb[y] = cv[y].squaredNorm();
    }
    for (int x = 0; x < sh.inputs; ++x)
        for (int y = 0; y < sh.inputs; ++y) {
            const double p00 = std::norm((ua[x] * m.bob[y].conjugate()).value());
            beh.at(0, 0, x, y) = p00;
            beh.at(0, 1, x, y) = pa[x] - p00;
            beh.at(1, 0, x, y) = pb[y] - p00;
            beh.at(1, 1, x, y) = 1.0 - pa[x] - pb[y] + p00;
        }
    return beh;
}

using Objective = std::function<double(const Behavior&)>;
using ZeroTargets = std::vector<std::array<int, 4>>;

double residual(const Behavior& beh, const ZeroTargets& targets) {
    double worst = 0.0;
    for (const auto& [a, b, x, y] : targets) worst = std::max(worst, beh(a, b, x, y));
    return worst;
}

struct RestartOutcome {
    double value = 0.0;
    bool feasible = false;
    double zero_residual = 0.0;
    Eigen::VectorXd params;
};

RestartOutcome run_restart(const ModelShape& sh, const Objective& objective,
                           const ZeroTargets& targets, const SearchOptions& opts,
                           std::uint64_t seed) {
    std::uint64_t state = seed;
    Eigen::VectorXd x(sh.total_params());
    for (int i = 0; i < x.size(); ++i) x[i] = uniform_angle(state);

    BfgsOptions bo;
    bo.max_iterations = opts.bfgs_iterations;

    auto penalized = [&](double lambda) {
        return [&, lambda](const Eigen::VectorXd& p) {
            const Behavior beh = born_table(sh, unpack(sh, p));
            double f = -objective(beh);
            for (const auto& [a, b, xx, yy] : targets) f += lambda * beh(a, b, xx, yy);
            return f;
        };
    };

    if (targets.empty()) {
        x = bfgs_minimize(penalized(0.0), x, bo).x;
    } else {
        for (double lambda : opts.penalty_schedule) x = bfgs_minimize(penalized(lambda), x, bo).x;
    }

    RestartOutcome out;
    out.params = x;
    const Behavior beh = born_table(sh, unpack(sh, x));
    out.value = objective(beh);
    out.zero_residual = residual(beh, targets);
    out.feasible = targets.empty() || out.zero_residual <= opts.zero_tol;
    return out;
}

// Multi-start driver.  With an early-stop value the restarts run serially so
// the outcome is a deterministic function of the seed; otherwise they fan
// out and the best candidate is picked by (feasibility, value, index).
RestartOutcome multi_start(const ModelShape& sh, const Objective& objective,
                           const ZeroTargets& targets, const SearchOptions& opts,
                           int* restarts_used) {
    if (opts.restarts < 1) throw std::invalid_argument("multi_start: need at least one restart");
    auto better = [](const RestartOutcome& a, const RestartOutcome& b) {
        if (a.feasible != b.feasible) return a.feasible;
        return a.value > b.value;
    };

    if (opts.early_stop_value) {
        RestartOutcome best;
        bool have = false;
        int used = 0;
        for (int r = 0; r < opts.restarts; ++r) {
            const RestartOutcome got =
                run_restart(sh, objective, targets, opts, splitmix64(opts.seed) + r);
            ++used;
            if (!have || better(got, best)) best = got, have = true;
            if (best.feasible && best.value >= *opts.early_stop_value) break;
        }
        if (restarts_used) *restarts_used = used;
        return best;
    }

    std::vector<RestartOutcome> all(opts.restarts);
    auto body = [&](std::size_t r) {
        all[r] = run_restart(sh, objective, targets, opts, splitmix64(opts.seed) + r);
    };
    if (opts.parallel)
        parallel_for(all.size(), body);
    else
        for (std::size_t r = 0; r < all.size(); ++r) body(r);
    RestartOutcome best = all.empty() ? RestartOutcome{} : all[0];
    for (const auto& got : all)
        if (better(got, best)) best = got;
    if (restarts_used) *restarts_used = opts.restarts;
    return best;
}

QubitConfig qubit_config_from_params(const Eigen::VectorXd& p) {
    const ModelShape sh{2, 2};
    QubitConfig cfg;
    const Model m = unpack(sh, p);
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) cfg.state[2 * j + k] = m.amp(j, k);
    const double* q = p.data() + sh.state_params();
    auto axes = [&q](std::array<Eigen::Vector2d, 2>& out) {
        for (int k = 0; k < 2; ++k) {
            out[k] = Eigen::Vector2d(2.0 * q[0], q[1]);
            q += 2;
        }
    };
    axes(cfg.alice_axes);
    axes(cfg.bob_axes);
    return cfg;
}

ZeroTargets mask_targets(FaceMask zeroed) {
    ZeroTargets t;
    for (int i = 1; i <= 8; ++i)
        if ((zeroed >> (i - 1)) & 1) t.push_back(entry_of_index(i));
    return t;
}

const ZeroTargets kWitnessTargets = {{0, 0, 1, 1}, {0, 1, 1, 0}};

}  // namespace

Eigen::Vector2cd bloch_direction(double theta, double phi) {
    return {Complex(std::cos(theta / 2.0), 0.0), std::polar(std::sin(theta / 2.0), phi)};
}

Eigen::Vector3cd qutrit_direction(const Eigen::Vector4d& a) {
    Eigen::Vector3cd v;
    v[0] = Complex(std::cos(a[0]), 0.0);
    v[1] = std::polar(std::sin(a[0]) * std::cos(a[1]), a[2]);
    v[2] = std::polar(std::sin(a[0]) * std::sin(a[1]), a[3]);
    return v;
}

Behavior behavior_from_qubit(const QubitConfig& cfg) {
    const ModelShape sh{2, 2};
    Model m;
    m.amp = Eigen::Map<const Eigen::Matrix<Complex, 2, 2, Eigen::RowMajor>>(cfg.state.data());
    for (int k = 0; k < 2; ++k) {
        m.alice.push_back(bloch_direction(cfg.alice_axes[k][0], cfg.alice_axes[k][1]));
        m.bob.push_back(bloch_direction(cfg.bob_axes[k][0], cfg.bob_axes[k][1]));
    }
    return born_table(sh, m);
}

Behavior behavior_from_qutrit(const QutritConfig& cfg) {
    const ModelShape sh{3, 3};
    Model m;
    m.amp = Eigen::Map<const Eigen::Matrix<Complex, 3, 3, Eigen::RowMajor>>(cfg.state.data());
    for (int k = 0; k < 3; ++k) {
        m.alice.push_back(qutrit_direction(cfg.alice_dirs[k]));
        m.bob.push_back(qutrit_direction(cfg.bob_dirs[k]));
    }
    return born_table(sh, m);
}

double i3322_value(const Behavior& beh) {
    if (beh.inputs_a() != 3 || beh.inputs_b() != 3)
        throw std::invalid_argument("i3322_value: three-input behavior required");
    return beh(0, 0, 0, 0) + beh(0, 0, 0, 1) + beh(0, 0, 0, 2) + beh(0, 0, 1, 0) +
           beh(0, 0, 1, 1) - beh(0, 0, 1, 2) + beh(0, 0, 2, 0) - beh(0, 0, 2, 1) -
           beh.marginal_b(0, 0) - 2.0 * beh.marginal_a(0, 0) - beh.marginal_a(0, 1);
}

QubitSearchResult max_chsh_qubits(FaceMask zeroed, const SearchOptions& opts) {
    const ModelShape sh{2, 2};
    QubitSearchResult res;
    const RestartOutcome best = multi_start(
        sh, [](const Behavior& b) { return chsh_value(b); }, mask_targets(zeroed), opts,
        &res.restarts_used);
    res.value = best.value;
    res.feasible = best.feasible;
    res.config = qubit_config_from_params(best.params);
    res.behavior = born_table(sh, unpack(sh, best.params));
    return res;
}

QutritSearchResult max_i3322_qutrits(const SearchOptions& opts) {
    const ModelShape sh{3, 3};
    QutritSearchResult res;
    const RestartOutcome best =
        multi_start(sh, i3322_value, kWitnessTargets, opts, &res.restarts_used);
    res.value = best.value;
    res.feasible = best.feasible;
    const Model m = unpack(sh, best.params);
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) res.config.state[3 * j + k] = m.amp(j, k);
    const double* q = best.params.data() + sh.state_params();
    for (int party = 0; party < 2; ++party)
        for (int k = 0; k < 3; ++k) {
            auto& slot = party == 0 ? res.config.alice_dirs[k] : res.config.bob_dirs[k];
            slot = Eigen::Vector4d(q[0], q[1], q[2], q[3]);
            q += 4;
        }
    res.behavior = born_table(sh, m);
    return res;
}

QubitSearchResult max_i3322_qubits(const SearchOptions& opts) {
    const ModelShape sh{2, 3};
    QubitSearchResult res;
    const RestartOutcome best =
        multi_start(sh, i3322_value, kWitnessTargets, opts, &res.restarts_used);
    res.value = best.value;
    res.feasible = best.feasible;
    res.behavior = born_table(sh, unpack(sh, best.params));
    return res;
}

QutritSearchResult max_i3322_qutrits_unconstrained(const SearchOptions& opts) {
    const ModelShape sh{3, 3};
    QutritSearchResult res;
    const RestartOutcome best = multi_start(sh, i3322_value, {}, opts, &res.restarts_used);
    res.value = best.value;
    res.feasible = best.feasible;
    res.behavior = born_table(sh, unpack(sh, best.params));
    return res;
}

}  // namespace bellscope
