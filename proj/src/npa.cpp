#include "bellscope/npa.hpp"

#include "bellscope/hardy.hpp"

#include <algorithm>
#include <map>

namespace bellscope {

namespace {

// Feasibility slack used when locating boundaries along segments.  Moment
// matrices here are O(1)-scaled, and production interior-point solvers at
// default settings treat smallest-eigenvalue deficits of this order as
// feasible; boundary values quoted for this scenario carry that convention.
constexpr double kBoundarySlack = 4e-8;

std::vector<int> reduce_factors(std::vector<int> seq) {
    // Projector idempotence: adjacent equal factors collapse.
    std::vector<int> out;
    for (int s : seq)
        if (out.empty() || out.back() != s) out.push_back(s);
    return out;
}

Word entry_word(const Word& row, const Word& col) {
    // The cell holds <row^dagger col>; the adjoint reverses each party's
    // factor sequence.
    std::vector<int> a(row.alice.rbegin(), row.alice.rend());
    a.insert(a.end(), col.alice.begin(), col.alice.end());
    std::vector<int> b(row.bob.rbegin(), row.bob.rend());
    b.insert(b.end(), col.bob.begin(), col.bob.end());
    return Word{reduce_factors(std::move(a)), reduce_factors(std::move(b))};
}

Word canonical_unknown(const Word& w) {
    // <w> and <w^dagger> coincide in the real-symmetric formulation.
    Word rev{{w.alice.rbegin(), w.alice.rend()}, {w.bob.rbegin(), w.bob.rend()}};
    return std::min(w, rev);
}

MomentStructure build_structure(NpaLevel level) {
    MomentStructure ms;
    ms.level = level;
    ms.words.push_back(Word{});  // identity
    for (int x = 0; x < 2; ++x) ms.words.push_back(Word{{x}, {}});
    for (int y = 0; y < 2; ++y) ms.words.push_back(Word{{}, {y}});
    if (level == NpaLevel::Level1AB)
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y) ms.words.push_back(Word{{x}, {y}});
    ms.dim = int(ms.words.size());

    std::map<Word, int> ids;
    ms.entries.assign(ms.dim, std::vector<EntryExpr>(ms.dim, EntryOne{}));
    for (int r = 0; r < ms.dim; ++r)
        for (int c = 0; c < ms.dim; ++c) {
            const Word w = entry_word(ms.words[r], ms.words[c]);
            EntryExpr e;
            if (w.alice.empty() && w.bob.empty())
                e = EntryOne{};
            else if (w.alice.size() == 1 && w.bob.empty())
                e = EntryMargA{w.alice[0]};
            else if (w.alice.empty() && w.bob.size() == 1)
                e = EntryMargB{w.bob[0]};
            else if (w.alice.size() == 1 && w.bob.size() == 1)
                e = EntryJoint{w.alice[0], w.bob[0]};
            else {
                const Word key = canonical_unknown(w);
                auto [it, inserted] = ids.emplace(key, int(ids.size()));
                if (inserted) ms.unknown_words.push_back(key);
                e = EntryUnknown{it->second};
            }
            ms.entries[r][c] = e;
        }
    return ms;
}

}  // namespace

std::string word_name(const Word& w) {
    if (w.alice.empty() && w.bob.empty()) return "1";
    std::string s;
    for (int x : w.alice) s += "A" + std::to_string(x);
    for (int y : w.bob) s += "B" + std::to_string(y);
    return s;
}

const MomentStructure& moment_structure(NpaLevel level) {
    static const MomentStructure l1 = build_structure(NpaLevel::Level1);
    static const MomentStructure l1ab = build_structure(NpaLevel::Level1AB);
    return level == NpaLevel::Level1 ? l1 : l1ab;
}

SdpProblem instantiate(const MomentStructure& ms, const Behavior& beh,
                       const Eigen::VectorXd* warm) {
    if (beh.inputs_a() != 2 || beh.inputs_b() != 2)
        throw std::invalid_argument("instantiate: two-input behavior required");
    SdpProblem p;
    p.dim = ms.dim;
    p.free_vars.resize(ms.unknown_words.size());
    if (warm) {
        if (warm->size() != int(ms.unknown_words.size()))
            throw std::invalid_argument("instantiate: warm-start size mismatch");
        for (int k = 0; k < warm->size(); ++k) p.free_vars[k].warm_start = (*warm)[k];
    }
    for (int r = 0; r < ms.dim; ++r)
        for (int c = r; c < ms.dim; ++c) {
            const EntryExpr& e = ms.entries[r][c];
            if (const auto* u = std::get_if<EntryUnknown>(&e)) {
                p.free_vars[u->id].cells.emplace_back(r, c);
            } else {
                double v = 1.0;
                if (const auto* ma = std::get_if<EntryMargA>(&e)) v = beh.marginal_a(0, ma->x);
                else if (const auto* mb = std::get_if<EntryMargB>(&e)) v = beh.marginal_b(0, mb->y);
                else if (const auto* j = std::get_if<EntryJoint>(&e)) v = beh(0, 0, j->x, j->y);
                p.fixed.push_back({r, c, v});
            }
        }
    return p;
}

Eigen::VectorXd local_completion(const MomentStructure& ms, const Vec8& local_weights) {
    Eigen::VectorXd vals = Eigen::VectorXd::Zero(ms.unknown_words.size());
    for (int i = 1; i <= 8; ++i) {
        const double w = local_weights[i - 1];
        if (w == 0.0) continue;
        const auto outs = local_vertex_outputs(i);
        for (int k = 0; k < vals.size(); ++k) {
            double prod = 1.0;
            for (int x : ms.unknown_words[k].alice) prod *= (outs[0][x] == 0) ? 1.0 : 0.0;
            for (int y : ms.unknown_words[k].bob) prod *= (outs[1][y] == 0) ? 1.0 : 0.0;
            vals[k] += w * prod;
        }
    }
    return vals;
}

bool npa_contains(const Behavior& beh, NpaLevel level, double feas_tol) {
    const SdpProblem p = instantiate(moment_structure(level), beh);
    const SdpResult res = solve_feasibility(p, feas_tol);
    if (res.status == SdpStatus::MaxIterations)
        throw NpaInconclusiveError("npa_contains: solver exhausted its budget");
    return res.status == SdpStatus::Feasible;
}

double npa_max_mu(const Segment& seg, NpaLevel level, double tol_mu, double feas_tol) {
    const MomentStructure& ms = moment_structure(level);
    const Eigen::VectorXd warm = local_completion(ms, seg.local_weights);
    // Boundary location needs a much sharper feasibility cut than the
    // certification margin: some boundaries are extremely flat (along the
    // Hardy segment the optimal smallest eigenvalue falls at only ~1e-4 per
    // unit mu, and on void faces it leaves zero quadratically), so a 1e-7
    // margin would displace mu* by ~1e-3.  Solve hard and compare the
    // extrapolated optimum against the slack a standard interior-point
    // solver leaves at its default precision; unresolved solves count as
    // outside, erring toward smaller mu.
    const double cut = std::min(feas_tol, kBoundarySlack);
    const auto inside = [&](const Behavior& b) {
        const SdpResult res =
            solve_feasibility(instantiate(ms, b, &warm), std::max(1e-12, cut / 100.0));
        return res.lambda_estimate >= -cut;
    };
    if (!inside(seg.point(0.0)))
        throw NpaInconclusiveError("npa_max_mu: local endpoint not certified inside");
    if (inside(seg.point(1.0))) return 1.0;
    double lo = 0.0, hi = 1.0;
    while (hi - lo > tol_mu) {
        const double mid = 0.5 * (lo + hi);
        (inside(seg.point(mid)) ? lo : hi) = mid;
    }
    return lo;
}

double hardy_almost_quantum(double tol_mu, double feas_tol) {
    const Segment seg(l_h_weights());
    return 0.5 * npa_max_mu(seg, NpaLevel::Level1AB, tol_mu, feas_tol);
}

}  // namespace bellscope
