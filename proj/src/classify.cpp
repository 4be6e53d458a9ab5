#include "bellscope/classify.hpp"

#include "bellscope/parallel.hpp"
#include "bellscope/principles.hpp"

#include <bit>

namespace bellscope {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, FaceMask mask) {
    std::uint64_t v = seed ^ (0x9e3779b97f4a7c15ull * (mask + 1));
    v ^= v >> 33;
    v *= 0xff51afd7ed558ccdull;
    v ^= v >> 33;
    return v;
}

std::optional<std::pair<int, int>> find_edge(FaceMask mask) {
    for (const auto& [p, q] : void_edges()) {
        const FaceMask em = mask_of({p, q});
        if ((mask & em) == em) return std::make_pair(p, q);
    }
    return std::nullopt;
}

std::optional<FaceMask> find_quartet(FaceMask mask) {
    if ((mask & kS1Mask) == kS1Mask) return kS1Mask;
    if ((mask & kS2Mask) == kS2Mask) return kS2Mask;
    return std::nullopt;
}

}  // namespace

bool is_void_by_rule(FaceMask mask) {
    return find_edge(mask).has_value() || find_quartet(mask).has_value();
}

FaceVerifiers default_face_verifiers(const ClassifyOptions& opts) {
    FaceVerifiers v;
    v.find_witness = [opts](const Face& face) -> std::optional<WitnessEvidence> {
        // Closed-form route: any Hardy argument whose zero set covers the
        // face places its maximal quantum point on the face.
        for (const HardyArgument& arg : enumerate_arguments()) {
            if ((face.mask & ~arg.zero_mask) != 0) continue;
            WitnessEvidence ev;
            ev.config = hardy_max_config(arg);
            ev.behavior = behavior_from_qubit(*ev.config);
            ev.chsh = chsh_value(ev.behavior);
            ev.argument = arg;
            return ev;
        }
        SearchOptions so;
        so.restarts = opts.restarts;
        so.seed = mix_seed(opts.seed, face.mask);
        so.zero_tol = opts.zero_tol;
        so.early_stop_value = 10.0 * opts.witness_threshold;
        const QubitSearchResult res = max_chsh_qubits(face.mask, so);
        if (res.feasible && res.value > opts.witness_threshold) {
            WitnessEvidence ev;
            ev.behavior = res.behavior;
            ev.chsh = res.value;
            ev.config = res.config;
            return ev;
        }
        return std::nullopt;
    };
    return v;
}

VoidClassification classify_face(const Face& face, const FaceVerifiers& verifiers) {
    VoidClassification out;
    out.face = face;
    if (const auto edge = find_edge(face.mask)) {
        out.verdict = Verdict::QuantumVoid;
        out.kind = EvidenceKind::VoidEdge;
        out.edge = edge;
        return out;
    }
    if (const auto quartet = find_quartet(face.mask)) {
        out.verdict = Verdict::QuantumVoid;
        out.kind = EvidenceKind::VoidQuartet;
        out.quartet = quartet;
        return out;
    }
    const auto witness = verifiers.find_witness(face);
    if (!witness)
        throw WitnessNotFoundError(face.mask, "classify_face: no quantum witness found");
    // A witness must actually lie on the face and be nonlocal.
    const FreeVector f = free_coords(witness->behavior);
    for (int i = 1; i <= 8; ++i)
        if (face.zeroes(i) && f[i - 1] > 1e-8)
            throw WitnessNotFoundError(face.mask, "classify_face: witness leaves the face");
    out.verdict = Verdict::NotVoid;
    out.kind = witness->argument ? EvidenceKind::HardyPoint : EvidenceKind::QubitSearch;
    out.witness = witness;
    return out;
}

ClassificationTable classify_all(const ClassifyOptions& opts) {
    ClassificationTable table;
    table.rows.assign(255, VoidClassification{});
    std::vector<char> ok(255, 1);
    const FaceVerifiers verifiers = default_face_verifiers(opts);
    parallel_for(255, [&](std::size_t idx) {
        const Face face(FaceMask(idx + 1));
        try {
            table.rows[idx] = classify_face(face, verifiers);
        } catch (const WitnessNotFoundError&) {
            ok[idx] = 0;
            table.rows[idx].face = face;
        }
    });
    for (int idx = 0; idx < 255; ++idx)
        if (!ok[idx]) table.failed.push_back(FaceMask(idx + 1));
    return table;
}

std::array<DimensionCount, 8> summarize(const ClassificationTable& table) {
    std::array<DimensionCount, 8> out{};
    for (int d = 0; d < 8; ++d) out[d].dim = d;
    for (const auto& row : table.rows) {
        auto& slot = out[row.face.dim()];
        slot.faces += 1;
        if (row.verdict == Verdict::QuantumVoid) slot.voids += 1;
    }
    return out;
}

VoidVerification verify_void_face(const Face& face, const ClassifyOptions& opts, double tol) {
    VoidVerification out;
    out.mask = face.mask;
    SearchOptions so;
    so.restarts = opts.restarts;
    so.seed = mix_seed(opts.seed, face.mask) ^ 0xabcdefull;
    so.zero_tol = opts.zero_tol;
    const QubitSearchResult res = max_chsh_qubits(face.mask, so);
    out.best_chsh = res.feasible ? res.value : 0.0;
    out.chsh_flat = !res.feasible || res.value <= tol;
    if (face.dim() >= 1) {
        const Segment seg = center_segment(face);
        out.mu_ml =
            boundary_mu(seg, [](const Behavior& b) { return ml_value(b).satisfied; }, 1e-9);
        out.ml_reproduces = out.mu_ml <= 1e-9;
    }
    return out;
}

}  // namespace bellscope
