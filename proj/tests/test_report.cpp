// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <regex>
#include <string>
#include <vector>

#include "disp/bounds.hpp"
#include "disp/cover.hpp"
#include "disp/experiments.hpp"
#include "disp/report.hpp"
#include "disp/solvers.hpp"
#include "schema_check.hpp"

#ifndef DISP_SCHEMA_DIR
#error "DISP_SCHEMA_DIR must point at the directory holding report_schema_v1.json"
#endif

using disp::report::Json;

namespace {

Json load_schema() {
    std::ifstream in(std::string(DISP_SCHEMA_DIR) + "/report_schema_v1.json");
    REQUIRE(in.good());
    return Json::parse(in);
}

disp::report::Manifest manifest_for(const std::string& subcommand, bool seeded) {
    disp::report::Manifest man;
    man.subcommand = subcommand;
    if (seeded) man.seed = 42;
    man.timestamp = disp::report::timestamp_utc();
    man.elapsed_ms = 12;
    man.config["threads"] = 1;
    return man;
}

// Render, parse back, and collect schema violations against the envelope and
// the named result shape.
std::vector<std::string> violations(const Json& schema, const disp::report::Manifest& man,
                                    const Json& result, const std::string& def) {
    std::string text = disp::report::render(man, result);
    CHECK(text.back() == '\n');
    Json doc = Json::parse(text);
    auto errs = schema_check::validate(schema, doc);
    auto result_errs = schema_check::validate_def(schema, def, doc["result"]);
    errs.insert(errs.end(), result_errs.begin(), result_errs.end());
    return errs;
}

void expect_clean(const Json& schema, const disp::report::Manifest& man, const Json& result,
                  const std::string& def) {
    auto errs = violations(schema, man, result, def);
    for (const auto& e : errs) MESSAGE(e);
    CHECK(errs.empty());
}

}  // namespace

TEST_CASE("timestamps are ISO 8601 UTC") {
    std::regex iso(R"(\d{4}-\d{2}-\d{2}T\d{2}:\d{2}:\d{2}Z)");
    CHECK(std::regex_match(disp::report::timestamp_utc(), iso));
}

TEST_CASE("schema file demands the exact envelope") {
    Json schema = load_schema();
    Json doc = Json::parse(disp::report::render(manifest_for("gen", true),
                                                Json{{"path", "x.csv"}, {"n", 1}, {"d", 1}}));
    CHECK(schema_check::validate(schema, doc).empty());

    Json missing = doc;
    missing.erase("manifest");
    CHECK(!schema_check::validate(schema, missing).empty());

    Json wrong = doc;
    wrong["schema"] = "report_schema_v2";
    CHECK(!schema_check::validate(schema, wrong).empty());

    Json extra = doc;
    extra["unexpected"] = 1;
    CHECK(!schema_check::validate(schema, extra).empty());

    Json badseed = doc;
    badseed["manifest"]["seed"] = "42";
    CHECK(!schema_check::validate(schema, badseed).empty());
}

TEST_CASE("compute documents validate") {
    Json schema = load_schema();
    disp::PointSet pts(2, {0.25, 0.75, 0.75, 0.25});

    Json exact{{"n", 2}, {"d", 2}, {"method", "exact"}, {"periodic", false}};
    exact.update(disp::report::to_json(disp::exact_2d(pts)));
    expect_clean(schema, manifest_for("compute", false), exact, "compute_result");

    Json cover{{"n", 2}, {"d", 2}, {"method", "cover"}, {"periodic", false}};
    cover.update(disp::report::to_json(disp::certified(pts, disp::GridCoverConfig{0.5})));
    expect_clean(schema, manifest_for("compute", false), cover, "compute_result");

    // periodic with every family arc blocked: witness is null
    Json peri{{"n", 2}, {"d", 1}, {"method", "cover"}, {"periodic", true}};
    auto pc = disp::certified_periodic(disp::PointSet(1, {0.25, 0.75}), disp::GridCoverConfig{1.0});
    CHECK(pc.value.lower == 0.0);
    Json pj = disp::report::to_json(pc);
    CHECK(pj["witness"].is_null());
    peri.update(pj);
    expect_clean(schema, manifest_for("compute", false), peri, "compute_result");
}

TEST_CASE("estimate documents validate, exact method nulls the upper edge") {
    Json schema = load_schema();
    disp::mc::SimConfig cfg;
    cfg.n = 5;
    cfg.d = 1;
    cfg.reps = 4;
    cfg.seed = 7;
    auto rep = disp::mc::estimate_expected_dispersion(cfg);
    Json result = disp::report::to_json(rep);
    CHECK(result["mean_upper"].is_null());
    CHECK(result["resolution"].is_null());
    expect_clean(schema, manifest_for("estimate", true), result, "estimate_result");

    cfg.method = disp::mc::Method::Cover;
    cfg.delta = 0.3;
    auto cov = disp::mc::estimate_expected_dispersion(cfg);
    Json cresult = disp::report::to_json(cov);
    CHECK(cresult["mean_upper"].is_number());
    CHECK(cresult["resolution"].is_number_integer());
    expect_clean(schema, manifest_for("estimate", true), cresult, "estimate_result");
}

TEST_CASE("experiment documents validate") {
    Json schema = load_schema();

    disp::mc::CouponConfig co;
    co.ell = 4;
    co.reps = 50;
    co.seed = 3;
    expect_clean(schema, manifest_for("simulate coupon", true),
                 disp::report::to_json(disp::mc::simulate_coupon(co)), "coupon_result");

    disp::mc::AnchoredConfig an;
    an.ell = 2;
    an.d = 2;
    an.reps = 50;
    an.seed = 3;
    expect_clean(schema, manifest_for("simulate anchored", true),
                 disp::report::to_json(disp::mc::simulate_anchored_box(an)), "anchored_result");

    disp::mc::GapsConfig ga;
    ga.n = 10;
    ga.reps = 20;
    ga.seed = 3;
    expect_clean(schema, manifest_for("simulate gaps", true),
                 disp::report::to_json(disp::mc::simulate_circle_gaps(ga)), "gaps_result");

    // one replicate: spread statistics are NaN and must serialize as null
    ga.reps = 1;
    Json single = disp::report::to_json(disp::mc::simulate_circle_gaps(ga));
    CHECK(single["stat_stddev"].is_null());
    expect_clean(schema, manifest_for("simulate gaps", true), single, "gaps_result");

    disp::mc::SplitConfig sp;
    sp.n = 20;
    sp.reps = 50;
    sp.seed = 3;
    expect_clean(schema, manifest_for("simulate split", true),
                 disp::report::to_json(disp::mc::simulate_split_lower_bound(sp)), "split_result");

    disp::mc::InverseConfig iv;
    iv.eps = 0.3;
    iv.d = 1;
    iv.reps = 10;
    iv.seed = 3;
    expect_clean(schema, manifest_for("inverse", true),
                 disp::report::to_json(disp::mc::estimate_inverse(iv)), "inverse_result");
}

TEST_CASE("bounds documents validate") {
    Json schema = load_schema();

    Json by_n{{"d", 2}, {"n", std::int64_t(100)}};
    by_n["expectation"] = disp::report::to_json(disp::bounds::expected_dispersion_bounds(100, 2));
    expect_clean(schema, manifest_for("bounds", false), by_n, "bounds_result");

    Json small{{"d", 2}, {"n", std::int64_t(2)}};
    small["expectation"] = nullptr;
    small["note"] = "requires n > d";
    expect_clean(schema, manifest_for("bounds", false), small, "bounds_result");

    Json by_eps{{"d", 2}, {"eps", 0.1}};
    by_eps["inverse"] = nullptr;
    by_eps["inverse_note"] = "requires eps < 1/(9e)";
    Json table = Json::array();
    for (const auto& e : disp::bounds::minimal_dispersion_table(0.1, 2))
        table.push_back(disp::report::to_json(e));
    by_eps["table"] = table;
    expect_clean(schema, manifest_for("bounds", false), by_eps, "bounds_result");

    // NaN table values become null and still validate (huge-d log10 form)
    Json huge{{"d", 200}, {"eps", 0.1}};
    huge["inverse"] = nullptr;
    huge["inverse_note"] = "requires eps < 1/(9e)";
    Json htable = Json::array();
    bool saw_null = false;
    for (const auto& e : disp::bounds::minimal_dispersion_table(0.1, 200)) {
        Json je = disp::report::to_json(e);
        saw_null = saw_null || je["value"].is_null();
        htable.push_back(je);
    }
    CHECK(saw_null);
    huge["table"] = htable;
    expect_clean(schema, manifest_for("bounds", false), huge, "bounds_result");
}

TEST_CASE("csv rendering flattens with quoting") {
    auto man = manifest_for("gen", true);
    Json result{{"path", "a,b.csv"}, {"n", 2}, {"d", 1}};
    std::string csv = disp::report::render_csv(man, result);
    CHECK(csv.rfind("key,value\n", 0) == 0);
    CHECK(csv.find("/result/path,\"a,b.csv\"\n") != std::string::npos);
    CHECK(csv.find("/result/n,2\n") != std::string::npos);
    CHECK(csv.find("/schema,report_schema_v1\n") != std::string::npos);
    CHECK(csv.back() == '\n');
}

TEST_CASE("check serialization keeps NaN bounds as null") {
    disp::mc::Check c{"example", std::nan(""), false, false, "requires n > d"};
    Json j = disp::report::to_json(c);
    CHECK(j["bound"].is_null());
    CHECK(j["applicable"] == false);
    CHECK(j["note"] == "requires n > d");
}
