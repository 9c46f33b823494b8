// SPDX-License-Identifier: Apache-2.0
#include "disp/report.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <string>

#include "disp/version.hpp"

namespace disp::report {

namespace {

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json config_json(const mc::SimConfig& c) {
    Json j;
    j["n"] = c.n;
    j["d"] = c.d;
    j["reps"] = c.reps;
    j["seed"] = c.seed;
    j["method"] = mc::method_name(c.method);
    j["periodic"] = c.periodic;
    j["delta"] = c.delta;
    j["budget"] = c.budget;
    j["confidence"] = c.confidence;
    j["threads"] = c.threads;
    return j;
}

Json checks_json(const std::vector<mc::Check>& checks) {
    Json arr = Json::array();
    for (const auto& c : checks) arr.push_back(to_json(c));
    return arr;
}

// CSV quoting: wrap when the value holds a comma, quote, or newline.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string scalar_to_csv(const Json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return csv_field(v.get<std::string>());
    return v.dump();
}

}  // namespace

std::string timestamp_utc() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Json to_json(const Manifest& m) {
    Json j;
    j["subcommand"] = m.subcommand;
    j["version"] = kVersion;
    if (m.seed)
        j["seed"] = *m.seed;
    else
        j["seed"] = nullptr;
    j["timestamp"] = m.timestamp;
    j["elapsed_ms"] = m.elapsed_ms;
    j["config"] = m.config;
    return j;
}

Json to_json(const AxisBox& box) {
    Json j;
    j["lo"] = box.lo;
    j["hi"] = box.hi;
    j["volume"] = box.volume();
    return j;
}

Json to_json(const PeriodicBox& box) {
    Json j;
    j["a"] = box.a;
    j["b"] = box.b;
    j["volume"] = box.volume();
    return j;
}

Json to_json(const ExactResult& r) {
    Json j;
    j["value"] = r.value;
    j["witness"] = to_json(r.witness);
    return j;
}

Json to_json(const PeriodicExactResult& r) {
    Json j;
    j["value"] = r.value;
    j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
    return j;
}

Json to_json(const CertifiedResult& r) {
    Json j;
    j["lower"] = r.value.lower;
    j["upper"] = r.value.upper;
    j["resolution"] = r.resolution;
    j["witness"] = to_json(r.witness);
    return j;
}

Json to_json(const PeriodicCertifiedResult& r) {
    Json j;
    j["lower"] = r.value.lower;
    j["upper"] = r.value.upper;
    j["resolution"] = r.resolution;
    j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
    return j;
}

Json to_json(const mc::Check& c) {
    Json j;
    j["name"] = c.name;
    j["bound"] = number(c.bound);
    j["applicable"] = c.applicable;
    j["pass"] = c.pass;
    j["note"] = c.note;
    return j;
}

Json to_json(const mc::EstimateReport& r) {
    Json j;
    j["config"] = config_json(r.cfg);
    j["mean"] = number(r.mean);
    j["stddev"] = number(r.stddev);
    j["ci_half"] = number(r.ci_half);
    j["mean_upper"] = number(r.mean_upper);
    j["stddev_upper"] = number(r.stddev_upper);
    j["ci_half_upper"] = number(r.ci_half_upper);
    j["resolution"] = r.cfg.method == mc::Method::Cover ? Json(r.resolution) : Json(nullptr);
    j["checks"] = checks_json(r.checks);
    return j;
}

Json to_json(const mc::InverseReport& r) {
    Json j;
    Json cfg;
    cfg["eps"] = r.cfg.eps;
    cfg["d"] = r.cfg.d;
    cfg["reps"] = r.cfg.reps;
    cfg["seed"] = r.cfg.seed;
    cfg["method"] = mc::method_name(r.cfg.method);
    cfg["delta"] = r.cfg.delta;
    cfg["budget"] = r.cfg.budget;
    cfg["confidence"] = r.cfg.confidence;
    cfg["threads"] = r.cfg.threads;
    cfg["max_n"] = r.cfg.max_n;
    j["config"] = cfg;
    j["n_hat"] = r.n_hat;
    j["bracket_lo"] = r.bracket_lo;
    j["bracket_hi"] = r.bracket_hi;
    Json evals = Json::array();
    for (const auto& e : r.evaluations) {
        Json je;
        je["n"] = e.n;
        je["mean"] = number(e.mean);
        je["ci_half"] = number(e.ci_half);
        je["score"] = number(e.score);
        evals.push_back(std::move(je));
    }
    j["evaluations"] = evals;
    j["checks"] = checks_json(r.checks);
    return j;
}

Json to_json(const mc::CouponReport& r) {
    Json j;
    Json cfg;
    cfg["ell"] = r.cfg.ell;
    cfg["n"] = r.cfg.n;
    cfg["reps"] = r.cfg.reps;
    cfg["seed"] = r.cfg.seed;
    cfg["confidence"] = r.cfg.confidence;
    cfg["threads"] = r.cfg.threads;
    j["config"] = cfg;
    j["n_used"] = r.n_used;
    j["tail_probability"] = number(r.tail_probability);
    j["tail_se"] = number(r.tail_se);
    j["tau_mean"] = number(r.tau_mean);
    j["tau_stddev"] = number(r.tau_stddev);
    j["tau_ci_half"] = number(r.tau_ci_half);
    j["expected_tau"] = number(r.expected_tau);
    j["variance_bound"] = number(r.variance_bound);
    j["checks"] = checks_json(r.checks);
    return j;
}

Json to_json(const mc::AnchoredReport& r) {
    Json j;
    Json cfg;
    cfg["ell"] = r.cfg.ell;
    cfg["d"] = r.cfg.d;
    cfg["reps"] = r.cfg.reps;
    cfg["seed"] = r.cfg.seed;
    cfg["confidence"] = r.cfg.confidence;
    cfg["threads"] = r.cfg.threads;
    j["config"] = cfg;
    j["empty_count"] = r.empty_count;
    j["volume_mean"] = number(r.volume_mean);
    j["volume_stddev"] = number(r.volume_stddev);
    j["product_mean"] = number(r.product_mean);
    j["product_stddev"] = number(r.product_stddev);
    j["product_ci_half"] = number(r.product_ci_half);
    j["max_coord_mean"] = number(r.max_coord_mean);
    j["product_target"] = number(r.product_target);
    j["closed_form_lower"] = number(r.closed_form_lower);
    j["checks"] = checks_json(r.checks);
    return j;
}

Json to_json(const mc::GapsReport& r) {
    Json j;
    Json cfg;
    cfg["n"] = r.cfg.n;
    cfg["reps"] = r.cfg.reps;
    cfg["seed"] = r.cfg.seed;
    cfg["confidence"] = r.cfg.confidence;
    cfg["threads"] = r.cfg.threads;
    j["config"] = cfg;
    j["gap_mean"] = number(r.gap_mean);
    j["gap_stddev"] = number(r.gap_stddev);
    j["exact_gap_mean"] = number(r.exact_gap_mean);
    j["stat_mean"] = number(r.stat_mean);
    j["stat_stddev"] = number(r.stat_stddev);
    j["stat_ci_half"] = number(r.stat_ci_half);
    j["stat_q10"] = number(r.stat_q10);
    j["stat_q50"] = number(r.stat_q50);
    j["stat_q90"] = number(r.stat_q90);
    j["gamma"] = number(r.gamma);
    j["asymptotic"] = r.asymptotic;
    j["checks"] = checks_json(r.checks);
    return j;
}

Json to_json(const mc::SplitReport& r) {
    Json j;
    Json cfg;
    cfg["n"] = r.cfg.n;
    cfg["reps"] = r.cfg.reps;
    cfg["seed"] = r.cfg.seed;
    cfg["confidence"] = r.cfg.confidence;
    cfg["threads"] = r.cfg.threads;
    j["config"] = cfg;
    j["ell"] = r.ell;
    j["empty_probability"] = number(r.empty_probability);
    j["se"] = number(r.se);
    j["implied_lower"] = number(r.implied_lower);
    j["reference_lower"] = number(r.reference_lower);
    j["checks"] = checks_json(r.checks);
    return j;
}

Json to_json(const bounds::ExpectationBounds& b) {
    Json j;
    j["lower"] = number(b.lower);
    j["upper"] = number(b.upper);
    return j;
}

Json to_json(const bounds::InverseBounds& b) {
    Json j;
    j["n_lower"] = number(b.n_lower);
    j["n_upper"] = number(b.n_upper);
    return j;
}

Json to_json(const bounds::TableEntry& e) {
    Json j;
    j["name"] = e.name;
    j["value"] = number(e.value);
    j["log10_value"] = number(e.log10_value);
    j["valid"] = e.valid;
    j["note"] = e.note;
    return j;
}

std::string render(const Manifest& m, const Json& result) {
    Json doc;
    doc["schema"] = kSchema;
    doc["manifest"] = to_json(m);
    doc["result"] = result;
    return doc.dump(2) + "\n";
}

std::string render_csv(const Manifest& m, const Json& result) {
    Json doc;
    doc["schema"] = kSchema;
    doc["manifest"] = to_json(m);
    doc["result"] = result;
    Json flat = doc.flatten();
    std::string out = "key,value\n";
    for (const auto& [key, value] : flat.items()) {
        out += csv_field(key);
        out += ',';
        out += scalar_to_csv(value);
        out += '\n';
    }
    return out;
}

}  // namespace disp::report
