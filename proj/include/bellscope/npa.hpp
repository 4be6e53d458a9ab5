#pragma once

// Moment-matrix relaxations of the quantum set for the two-input scenario:
// level 1 (words 1, A0, A1, B0, B1) and level 1+ab (joint products added).
// Matrix cells reduce, via projector idempotence and cross-party
// commutation, either to behavior-determined probabilities or to free
// moment unknowns; membership is then a semidefinite feasibility problem.

#include "bellscope/behavior.hpp"
#include "bellscope/sdp.hpp"
#include "bellscope/simplex.hpp"

#include <string>
#include <variant>
#include <vector>

namespace bellscope {

class NpaInconclusiveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class NpaLevel { Level1, Level1AB };

// Product of outcome-0 projectors: Alice's factors in order, then Bob's.
// Cross-party factors commute, so this split is canonical.
struct Word {
    std::vector<int> alice;
    std::vector<int> bob;

    bool operator==(const Word&) const = default;
    bool operator<(const Word& o) const {
        return std::tie(alice, bob) < std::tie(o.alice, o.bob);
    }
};

std::string word_name(const Word& w);

struct EntryOne {};
struct EntryMargA { int x; };
struct EntryMargB { int y; };
struct EntryJoint { int x, y; };
struct EntryUnknown { int id; };
using EntryExpr = std::variant<EntryOne, EntryMargA, EntryMargB, EntryJoint, EntryUnknown>;

struct MomentStructure {
    NpaLevel level = NpaLevel::Level1;
    int dim = 0;
    std::vector<Word> words;          // row/column labels
    std::vector<std::vector<EntryExpr>> entries;
    std::vector<Word> unknown_words;  // canonical representative per unknown id
};

/// Deterministic construction of the moment-matrix symbol table.
const MomentStructure& moment_structure(NpaLevel level);

/// Pin the behavior-determined cells, leaving one SDP unknown per distinct
/// reduced moment.  Optional warm values (one per unknown) seed the solver.
SdpProblem instantiate(const MomentStructure& ms, const Behavior& beh,
                       const Eigen::VectorXd* warm = nullptr);

/// Moment values of all unknown words under a mixture of the local
/// deterministic vertices with the given weights; deterministic boxes have
/// product moments, mixtures average them.
Eigen::VectorXd local_completion(const MomentStructure& ms, const Vec8& local_weights);

/// Membership of the behavior in the level's relaxation.
/// Throws NpaInconclusiveError when the solver cannot certify either way.
bool npa_contains(const Behavior& beh, NpaLevel level, double feas_tol = 1e-7);

/// Largest mu on the segment whose point stays inside the relaxation,
/// found by bisection; an inconclusive solve counts as outside, so the
/// estimate errs toward smaller mu.
double npa_max_mu(const Segment& seg, NpaLevel level, double tol_mu = 1e-5,
                  double feas_tol = 1e-7);

/// Maximal Hardy success probability over the level-(1+ab) relaxation,
/// computed on the segment from the PR box through the maximal Hardy point
/// to the local face, where the success probability equals mu/2.
double hardy_almost_quantum(double tol_mu = 1e-5, double feas_tol = 1e-7);

}  // namespace bellscope
