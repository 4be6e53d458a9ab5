#pragma once

// File formats: behavior tables and witness configurations as JSON,
// classification and boundary reports as CSV.

#include "bellscope/classify.hpp"
#include "bellscope/principles.hpp"
#include "bellscope/quantum.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace bellscope {

// Two-input tables serialize as {"scenario":[2,2,2,2],"p":[16 values]} with
// the probabilities in canonical index order; other scenarios list entries
// keyed by (a,b,x,y).  Doubles survive the round trip bit-exactly.
nlohmann::json behavior_to_json(const Behavior& beh);
Behavior behavior_from_json(const nlohmann::json& j);

nlohmann::json qubit_config_to_json(const QubitConfig& cfg);
QubitConfig qubit_config_from_json(const nlohmann::json& j);

nlohmann::json qutrit_config_to_json(const QutritConfig& cfg);
QutritConfig qutrit_config_from_json(const nlohmann::json& j);

std::string verdict_name(Verdict v);
std::string evidence_name(EvidenceKind k);

/// Rows: mask, dim, verdict, evidence_kind, evidence_detail.
std::string classification_csv(const ClassificationTable& table);

/// Per-dimension counts, faces and voids, dimension 0 through 7.
nlohmann::json summary_json(const ClassificationTable& table);

/// Rows: mask, principle, mu_star, reproducible.
std::string principle_report_csv(const std::vector<VoidPrincipleReport>& reports);

void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json read_json(const std::filesystem::path& path);

}  // namespace bellscope
