#include "bellscope/io.hpp"

#include "bellscope/hardy.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace bellscope;

TEST_CASE("behavior json round trip is bit exact") {
    std::uint64_t s = 404;
    for (int rep = 0; rep < 50; ++rep) {
        const Behavior beh = testsup::random_ns_behavior(s);
        const std::string text = behavior_to_json(beh).dump();
        const Behavior back = behavior_from_json(nlohmann::json::parse(text));
        CHECK(back == beh);
    }

    const nlohmann::json j = behavior_to_json(pr_box());
    CHECK(j.at("scenario") == nlohmann::json({2, 2, 2, 2}));
    // Flat table in canonical order: free coordinates first, all zero.
    for (int k = 0; k < 8; ++k) CHECK(j.at("p").at(k).get<double>() == 0.0);
    for (int k = 8; k < 16; ++k) CHECK(j.at("p").at(k).get<double>() == 0.5);
}

TEST_CASE("three-input tables use keyed entries") {
    Behavior beh = white_noise_box(3, 3);
    beh.at(0, 0, 2, 1) = 0.3;
    beh.at(0, 1, 2, 1) = 0.2;
    const nlohmann::json j = behavior_to_json(beh);
    CHECK(j.contains("entries"));
    const Behavior back = behavior_from_json(j);
    CHECK(back == beh);
}

TEST_CASE("config json round trips") {
    const QubitConfig cfg = hardy_max_config();
    const QubitConfig back = qubit_config_from_json(qubit_config_to_json(cfg));
    CHECK(back.state == cfg.state);
    for (int k = 0; k < 2; ++k) {
        CHECK(back.alice_axes[k] == cfg.alice_axes[k]);
        CHECK(back.bob_axes[k] == cfg.bob_axes[k]);
    }

    QutritConfig q;
    std::uint64_t s = 5;
    for (int k = 0; k < 9; ++k) q.state[k] = Complex(testsup::u01(s), testsup::u01(s));
    q.state.normalize();
    for (int k = 0; k < 3; ++k) {
        for (int c = 0; c < 4; ++c) {
            q.alice_dirs[k][c] = testsup::u01(s);
            q.bob_dirs[k][c] = testsup::u01(s);
        }
    }
    const QutritConfig qback = qutrit_config_from_json(qutrit_config_to_json(q));
    CHECK(qback.state == q.state);
    CHECK(qback.alice_dirs == q.alice_dirs);
    CHECK(qback.bob_dirs == q.bob_dirs);
}

TEST_CASE("classification csv and summary") {
    ClassifyOptions opts;
    opts.restarts = 40;
    const ClassificationTable table = classify_all(opts);
    const std::string csv = classification_csv(table);
    CHECK(csv.find("mask,dim,verdict,evidence_kind,evidence_detail") == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 256);  // header + 255 rows

    const nlohmann::json summary = summary_json(table);
    CHECK(summary.at("by_dimension").size() == 8);
    CHECK(summary.at("by_dimension").at(4) ==
          nlohmann::json({{"dim", 4}, {"faces", 70}, {"voids", 70}}));
    CHECK(summary.at("failed_masks").empty());
}
