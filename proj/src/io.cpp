#include "bellscope/io.hpp"

#include <fstream>
#include <sstream>

namespace bellscope {

namespace {

nlohmann::json complex_pair(const Complex& c) { return nlohmann::json::array({c.real(), c.imag()}); }

Complex complex_from(const nlohmann::json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

}  // namespace

nlohmann::json behavior_to_json(const Behavior& beh) {
    nlohmann::json j;
    j["scenario"] = {beh.inputs_a(), beh.inputs_b(), 2, 2};
    if (beh.inputs_a() == 2 && beh.inputs_b() == 2) {
        nlohmann::json p = nlohmann::json::array();
        for (int i = 1; i <= 16; ++i) {
            const auto [a, b, x, y] = entry_of_index(i);
            p.push_back(beh(a, b, x, y));
        }
        j["p"] = std::move(p);
    } else {
        nlohmann::json entries = nlohmann::json::array();
        for (int x = 0; x < beh.inputs_a(); ++x)
            for (int y = 0; y < beh.inputs_b(); ++y)
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b)
                        entries.push_back({{"a", a}, {"b", b}, {"x", x}, {"y", y},
                                           {"p", beh(a, b, x, y)}});
        j["entries"] = std::move(entries);
    }
    return j;
}

Behavior behavior_from_json(const nlohmann::json& j) {
    const auto& sc = j.at("scenario");
    const int nx = sc.at(0).get<int>(), ny = sc.at(1).get<int>();
    if (sc.at(2).get<int>() != 2 || sc.at(3).get<int>() != 2)
        throw std::invalid_argument("behavior_from_json: only binary outcomes supported");
    Behavior beh(nx, ny);
    if (j.contains("p")) {
        const auto& p = j.at("p");
        if (nx != 2 || ny != 2 || p.size() != 16)
            throw std::invalid_argument("behavior_from_json: flat table requires the 2x2 scenario");
        for (int i = 1; i <= 16; ++i) {
            const auto [a, b, x, y] = entry_of_index(i);
            beh.at(a, b, x, y) = p.at(i - 1).get<double>();
        }
    } else {
        for (const auto& e : j.at("entries"))
            beh.at(e.at("a").get<int>(), e.at("b").get<int>(), e.at("x").get<int>(),
                   e.at("y").get<int>()) = e.at("p").get<double>();
    }
    return beh;
}

nlohmann::json qubit_config_to_json(const QubitConfig& cfg) {
    nlohmann::json j;
    j["dim"] = 2;
    nlohmann::json st = nlohmann::json::array();
    for (int k = 0; k < 4; ++k) st.push_back(complex_pair(cfg.state[k]));
    j["state"] = std::move(st);
    for (const char* key : {"alice_axes", "bob_axes"}) {
        const auto& axes = std::string(key) == "alice_axes" ? cfg.alice_axes : cfg.bob_axes;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& ax : axes) arr.push_back({ax[0], ax[1]});
        j[key] = std::move(arr);
    }
    return j;
}

QubitConfig qubit_config_from_json(const nlohmann::json& j) {
    QubitConfig cfg;
    for (int k = 0; k < 4; ++k) cfg.state[k] = complex_from(j.at("state").at(k));
    for (int k = 0; k < 2; ++k) {
        cfg.alice_axes[k] = {j.at("alice_axes").at(k).at(0).get<double>(),
                             j.at("alice_axes").at(k).at(1).get<double>()};
        cfg.bob_axes[k] = {j.at("bob_axes").at(k).at(0).get<double>(),
                           j.at("bob_axes").at(k).at(1).get<double>()};
    }
    return cfg;
}

nlohmann::json qutrit_config_to_json(const QutritConfig& cfg) {
    nlohmann::json j;
    j["dim"] = 3;
    nlohmann::json st = nlohmann::json::array();
    for (int k = 0; k < 9; ++k) st.push_back(complex_pair(cfg.state[k]));
    j["state"] = std::move(st);
    for (const char* key : {"alice_dirs", "bob_dirs"}) {
        const auto& dirs = std::string(key) == "alice_dirs" ? cfg.alice_dirs : cfg.bob_dirs;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& d : dirs) arr.push_back({d[0], d[1], d[2], d[3]});
        j[key] = std::move(arr);
    }
    return j;
}

QutritConfig qutrit_config_from_json(const nlohmann::json& j) {
    QutritConfig cfg;
    for (int k = 0; k < 9; ++k) cfg.state[k] = complex_from(j.at("state").at(k));
    for (int k = 0; k < 3; ++k) {
        for (int c = 0; c < 4; ++c) {
            cfg.alice_dirs[k][c] = j.at("alice_dirs").at(k).at(c).get<double>();
            cfg.bob_dirs[k][c] = j.at("bob_dirs").at(k).at(c).get<double>();
        }
    }
    return cfg;
}

std::string verdict_name(Verdict v) {
    return v == Verdict::QuantumVoid ? "quantum_void" : "not_void";
}

std::string evidence_name(EvidenceKind k) {
    switch (k) {
        case EvidenceKind::VoidEdge: return "void_edge";
        case EvidenceKind::VoidQuartet: return "void_quartet";
        case EvidenceKind::HardyPoint: return "hardy_point";
        case EvidenceKind::QubitSearch: return "qubit_search";
    }
    return "?";
}

std::string classification_csv(const ClassificationTable& table) {
    std::ostringstream os;
    os.precision(17);
    os << "mask,dim,verdict,evidence_kind,evidence_detail\n";
    for (const auto& row : table.rows) {
        os << int(row.face.mask) << ',' << row.face.dim() << ',' << verdict_name(row.verdict)
           << ',' << evidence_name(row.kind) << ',';
        switch (row.kind) {
            case EvidenceKind::VoidEdge:
                os << "edge {" << row.edge->first << " " << row.edge->second << "}";
                break;
            case EvidenceKind::VoidQuartet:
                os << (row.quartet == kS1Mask ? "S1" : "S2");
                break;
            case EvidenceKind::HardyPoint:
                os << "hardy(a=" << row.witness->argument->a << " x=" << row.witness->argument->x
                   << " y=" << row.witness->argument->y << ") chsh=" << row.witness->chsh;
                break;
            case EvidenceKind::QubitSearch:
                os << "chsh=" << row.witness->chsh;
                break;
        }
        os << '\n';
    }
    return os.str();
}

nlohmann::json summary_json(const ClassificationTable& table) {
    const auto counts = summarize(table);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& c : counts)
        rows.push_back({{"dim", c.dim}, {"faces", c.faces}, {"voids", c.voids}});
    nlohmann::json j;
    j["by_dimension"] = std::move(rows);
    nlohmann::json failed = nlohmann::json::array();
    for (FaceMask m : table.failed) failed.push_back(int(m));
    j["failed_masks"] = std::move(failed);
    return j;
}

std::string principle_report_csv(const std::vector<VoidPrincipleReport>& reports) {
    std::ostringstream os;
    os.precision(17);
    os << "mask,principle,mu_star,reproducible\n";
    for (const auto& r : reports) {
        os << int(r.mask) << ",uffink," << r.mu_uffink << ','
           << (r.uffink_reproducible ? "true" : "false") << '\n';
        os << int(r.mask) << ",ml," << r.mu_ml << ',' << (r.ml_reproducible ? "true" : "false")
           << '\n';
    }
    return os.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_text: cannot open " + path.string());
    out << text;
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_text: cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
    write_text(path, j.dump(2) + "\n");
}

nlohmann::json read_json(const std::filesystem::path& path) {
    return nlohmann::json::parse(read_text(path));
}

}  // namespace bellscope
