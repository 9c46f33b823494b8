// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "disp/bounds.hpp"
#include "disp/cover.hpp"
#include "disp/experiments.hpp"
#include "disp/solvers.hpp"

// JSON views of every result type. Documents follow docs/report_schema_v1.json:
// {"schema": "report_schema_v1", "manifest": {...}, "result": {...}}.
// Non-finite numbers are emitted as null.

namespace disp::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "report_schema_v1";

// Current time as an ISO 8601 UTC string, second resolution.
std::string timestamp_utc();

struct Manifest {
    std::string subcommand;
    std::optional<std::uint64_t> seed;  // absent for deterministic commands
    std::string timestamp;
    std::int64_t elapsed_ms = 0;
    Json config = Json::object();  // resolved command options
};

Json to_json(const Manifest& m);

Json to_json(const AxisBox& box);
Json to_json(const PeriodicBox& box);
Json to_json(const ExactResult& r);
Json to_json(const PeriodicExactResult& r);
Json to_json(const CertifiedResult& r);
Json to_json(const PeriodicCertifiedResult& r);
Json to_json(const mc::Check& c);
Json to_json(const mc::EstimateReport& r);
Json to_json(const mc::InverseReport& r);
Json to_json(const mc::CouponReport& r);
Json to_json(const mc::AnchoredReport& r);
Json to_json(const mc::GapsReport& r);
Json to_json(const mc::SplitReport& r);
Json to_json(const bounds::ExpectationBounds& b);
Json to_json(const bounds::InverseBounds& b);
Json to_json(const bounds::TableEntry& e);

// Full document, dumped with 2-space indent and a trailing newline.
std::string render(const Manifest& m, const Json& result);

// Same document flattened to "key,value" CSV rows (JSON-pointer keys).
std::string render_csv(const Manifest& m, const Json& result);

}  // namespace disp::report
