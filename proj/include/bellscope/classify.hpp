#pragma once

// Void/not-void classification of the 255 nonlocal faces.  A face is a
// quantum void when its zeroed set contains a void edge or one of the two
// special quartets; anything else must be certified not-void by an explicit
// quantum point on the face (closed-form Hardy solutions first, then a
// constrained qubit search).

#include "bellscope/hardy.hpp"
#include "bellscope/quantum.hpp"
#include "bellscope/simplex.hpp"

#include <functional>
#include <optional>

namespace bellscope {

class WitnessNotFoundError : public std::runtime_error {
public:
    WitnessNotFoundError(FaceMask m, const std::string& msg)
        : std::runtime_error(msg), mask(m) {}
    FaceMask mask;
};

enum class Verdict { QuantumVoid, NotVoid };

enum class EvidenceKind { VoidEdge, VoidQuartet, HardyPoint, QubitSearch };

struct WitnessEvidence {
    Behavior behavior{2, 2};
    double chsh = 0.0;
    std::optional<HardyArgument> argument;  // set for closed-form Hardy witnesses
    std::optional<QubitConfig> config;
};

struct VoidClassification {
    Face face{1};
    Verdict verdict = Verdict::QuantumVoid;
    EvidenceKind kind = EvidenceKind::VoidEdge;
    std::optional<std::pair<int, int>> edge;
    std::optional<FaceMask> quartet;
    std::optional<WitnessEvidence> witness;
};

struct ClassifyOptions {
    int restarts = 200;             // qubit-search budget per face
    std::uint64_t seed = 20240901;
    double witness_threshold = 1e-4;  // CHSH value certifying nonlocality
    double zero_tol = 1e-8;
};

/// The void rule alone: an edge or quartet inside the zeroed set.
bool is_void_by_rule(FaceMask mask);

struct FaceVerifiers {
    std::function<std::optional<WitnessEvidence>(const Face&)> find_witness;
};

FaceVerifiers default_face_verifiers(const ClassifyOptions& opts = {});

/// Classify one face.  Throws WitnessNotFoundError when the rule does not
/// fire and no witness is found within the search budget.
VoidClassification classify_face(const Face& face, const FaceVerifiers& verifiers);

struct ClassificationTable {
    std::vector<VoidClassification> rows;    // masks 1..255 in order
    std::vector<FaceMask> failed;            // faces with no verdict
};

/// All 255 faces, in mask order; face jobs run in parallel and each face's
/// search is seeded from (seed, mask), so the table is schedule-independent.
ClassificationTable classify_all(const ClassifyOptions& opts = {});

struct DimensionCount {
    int dim = 0;
    int faces = 0;
    int voids = 0;
};

std::array<DimensionCount, 8> summarize(const ClassificationTable& table);

struct VoidVerification {
    FaceMask mask = 0;
    double best_chsh = 0.0;   // best constrained qubit CHSH found
    bool chsh_flat = false;   // best_chsh <= tol (or no feasible point found)
    double mu_ml = 1.0;       // macroscopic-locality boundary on the center segment
    bool ml_reproduces = false;
};

/// Slow-mode cross-check of a void verdict: the constrained qubit search
/// must stay at CHSH <= tol; the macroscopic-locality boundary is reported
/// alongside (it reaches zero only on the voids that principle reproduces).
VoidVerification verify_void_face(const Face& face, const ClassifyOptions& opts = {},
                                  double tol = 1e-6);

}  // namespace bellscope
