// SPDX-License-Identifier: Apache-2.0
#include <chrono>
#include <cstdint>
#include <exception>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "disp/bounds.hpp"
#include "disp/cover.hpp"
#include "disp/errors.hpp"
#include "disp/experiments.hpp"
#include "disp/geometry.hpp"
#include "disp/kernels.hpp"
#include "disp/pointset_io.hpp"
#include "disp/report.hpp"
#include "disp/rng.hpp"
#include "disp/solvers.hpp"
#include "disp/version.hpp"

namespace {

using disp::report::Json;
using Clock = std::chrono::steady_clock;

struct Global {
    std::string format = "json";
    bool strict = false;
    int threads = 1;
    std::string kernel = "auto";
};

disp::kernels::Backend backend_from_name(const std::string& name) {
    if (name == "scalar") return disp::kernels::Backend::Scalar;
    if (name == "avx2") return disp::kernels::Backend::Avx2;
    return disp::kernels::Backend::Auto;
}

// Prints the report and resolves the exit code. Checks that are applicable
// and failing exit 3 under --strict; otherwise verdicts live in the payload.
int emit(const Global& g, disp::report::Manifest man, const Json& result,
         const std::vector<disp::mc::Check>* checks, Clock::time_point t0) {
    man.timestamp = disp::report::timestamp_utc();
    man.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    man.config["format"] = g.format;
    man.config["strict"] = g.strict;
    man.config["threads"] = g.threads;
    man.config["kernel"] = g.kernel;
    man.config["backend_resolved"] = disp::kernels::backend_name(disp::kernels::active_backend());
    if (g.format == "csv")
        std::cout << disp::report::render_csv(man, result);
    else
        std::cout << disp::report::render(man, result);
    if (g.strict && checks)
        for (const auto& c : *checks)
            if (c.applicable && !c.pass) return 3;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dispersion of point sets in the unit cube: exact and certified "
                 "solvers, closed-form bounds, seeded experiments"};
    app.set_version_flag("--version", disp::kVersion);
    app.require_subcommand(1);

    Global g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_flag("--strict", g.strict, "exit 3 when an applicable check fails");
    app.add_option("--threads", g.threads, "worker threads for replicated experiments")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--kernel", g.kernel, "vector backend for the inner loops")
        ->check(CLI::IsMember({"auto", "scalar", "avx2"}))
        ->capture_default_str();

    // compute
    std::string cp_input;
    std::string cp_method = "exact";
    bool cp_periodic = false;
    double cp_delta = 0.1;
    std::uint64_t cp_budget = 100'000'000;
    auto* compute = app.add_subcommand("compute", "dispersion of a point set loaded from CSV");
    compute->fallthrough();
    compute->add_option("--input", cp_input, "CSV file, one point per row")->required();
    compute->add_option("--method", cp_method, "exact solver or certified grid interval")
        ->check(CLI::IsMember({"exact", "cover"}))
        ->capture_default_str();
    compute->add_flag("--periodic", cp_periodic, "dispersion on the torus");
    compute->add_option("--delta", cp_delta, "certified interval width target (cover)")
        ->capture_default_str();
    compute->add_option("--budget", cp_budget, "candidate-box search budget")
        ->capture_default_str();

    // estimate
    disp::mc::SimConfig es;
    es.reps = 100;
    std::string es_method = "exact";
    auto* estimate =
        app.add_subcommand("estimate", "mean dispersion of n uniform points, with bound checks");
    estimate->fallthrough();
    estimate->add_option("--n", es.n, "points per replicate")->required();
    estimate->add_option("--d", es.d, "dimension")->required();
    estimate->add_option("--reps", es.reps, "replicates")->capture_default_str();
    estimate->add_option("--seed", es.seed, "RNG seed")->required();
    estimate->add_option("--method", es_method, "per-replicate solver")
        ->check(CLI::IsMember({"exact", "cover"}))
        ->capture_default_str();
    estimate->add_flag("--periodic", es.periodic, "dispersion on the torus");
    estimate->add_option("--delta", es.delta, "certified interval width target (cover)")
        ->capture_default_str();
    estimate->add_option("--budget", es.budget, "candidate-box search budget")
        ->capture_default_str();
    estimate->add_option("--confidence", es.confidence, "confidence level for intervals")
        ->capture_default_str();

    // bounds
    std::int64_t bd_n = 0;
    double bd_eps = 0.0;
    int bd_d = 1;
    auto* boundscmd =
        app.add_subcommand("bounds", "closed-form bounds for the expected dispersion");
    boundscmd->fallthrough();
    auto* bd_n_opt = boundscmd->add_option("--n", bd_n, "number of points");
    auto* bd_eps_opt = boundscmd->add_option("--eps", bd_eps, "dispersion target");
    boundscmd->add_option("--d", bd_d, "dimension")->required();
    bd_n_opt->excludes(bd_eps_opt);
    bd_eps_opt->excludes(bd_n_opt);

    // simulate
    auto* simulate = app.add_subcommand("simulate", "targeted experiments behind the bounds");
    simulate->fallthrough();
    simulate->require_subcommand(1);

    disp::mc::CouponConfig co;
    co.reps = 10000;
    auto* coupon = simulate->add_subcommand("coupon", "coupon-collector collection time");
    coupon->fallthrough();
    coupon->add_option("--ell", co.ell, "coupon types")->required();
    coupon->add_option("--n", co.n, "draw count; default floor((H_ell - 2) ell)");
    coupon->add_option("--reps", co.reps, "replicates")->capture_default_str();
    coupon->add_option("--seed", co.seed, "RNG seed")->required();
    coupon->add_option("--confidence", co.confidence, "confidence level")->capture_default_str();

    disp::mc::AnchoredConfig an;
    an.reps = 10000;
    auto* anchored = simulate->add_subcommand("anchored", "origin-anchored empty box construction");
    anchored->fallthrough();
    anchored->add_option("--ell", an.ell, "points per replicate")->required();
    anchored->add_option("--d", an.d, "dimension")->required();
    anchored->add_option("--reps", an.reps, "replicates")->capture_default_str();
    anchored->add_option("--seed", an.seed, "RNG seed")->required();
    anchored->add_option("--confidence", an.confidence, "confidence level")->capture_default_str();

    disp::mc::GapsConfig ga;
    ga.reps = 1000;
    auto* gaps = simulate->add_subcommand("gaps", "largest spacing of uniform points on [0,1]");
    gaps->fallthrough();
    gaps->add_option("--n", ga.n, "points per replicate")->required();
    gaps->add_option("--reps", ga.reps, "replicates")->capture_default_str();
    gaps->add_option("--seed", ga.seed, "RNG seed")->required();
    gaps->add_option("--confidence", ga.confidence, "confidence level")->capture_default_str();

    disp::mc::SplitConfig sp;
    sp.reps = 10000;
    auto* split = simulate->add_subcommand("split", "empty-slab probability behind the lower bound");
    split->fallthrough();
    split->add_option("--n", sp.n, "points per replicate")->required();
    split->add_option("--reps", sp.reps, "replicates")->capture_default_str();
    split->add_option("--seed", sp.seed, "RNG seed")->required();
    split->add_option("--confidence", sp.confidence, "confidence level")->capture_default_str();

    // gen
    std::int64_t gen_n = 0;
    int gen_d = 1;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "write a seeded uniform point set as CSV");
    gen->fallthrough();
    gen->add_option("--n", gen_n, "number of points")->check(CLI::NonNegativeNumber)->required();
    gen->add_option("--d", gen_d, "dimension")->required();
    gen->add_option("--seed", gen_seed, "RNG seed")->required();
    gen->add_option("--out", gen_out, "output CSV path")->required();

    // inverse
    disp::mc::InverseConfig iv;
    std::string iv_method = "exact";
    auto* inverse = app.add_subcommand(
        "inverse", "smallest n whose estimated mean dispersion drops below eps");
    inverse->fallthrough();
    inverse->add_option("--eps", iv.eps, "dispersion target")->required();
    inverse->add_option("--d", iv.d, "dimension")->required();
    inverse->add_option("--reps", iv.reps, "replicates per evaluated n")->capture_default_str();
    inverse->add_option("--seed", iv.seed, "RNG seed")->required();
    inverse->add_option("--method", iv_method, "per-replicate solver")
        ->check(CLI::IsMember({"exact", "cover"}))
        ->capture_default_str();
    inverse->add_option("--delta", iv.delta, "certified interval width target (cover)")
        ->capture_default_str();
    inverse->add_option("--budget", iv.budget, "candidate-box search budget")
        ->capture_default_str();
    inverse->add_option("--confidence", iv.confidence, "confidence level")->capture_default_str();
    inverse->add_option("--max-n", iv.max_n, "growth cap for the search")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    auto t0 = Clock::now();
    try {
        disp::kernels::set_backend(backend_from_name(g.kernel));

        if (*compute) {
            disp::report::Manifest man;
            man.subcommand = "compute";
            man.config["input"] = cp_input;
            man.config["method"] = cp_method;
            man.config["periodic"] = cp_periodic;
            man.config["delta"] = cp_delta;
            man.config["budget"] = cp_budget;
            disp::PointSet pts = disp::load_pointset_csv_file(cp_input);
            Json result;
            result["n"] = pts.size();
            result["d"] = pts.dim();
            result["method"] = cp_method;
            result["periodic"] = cp_periodic;
            if (cp_method == "exact") {
                if (cp_periodic) {
                    if (pts.dim() != 1)
                        throw std::invalid_argument(
                            "exact periodic dispersion is available in dimension 1 only");
                    result.update(disp::report::to_json(disp::exact_1d_periodic(pts)));
                } else if (pts.dim() == 1) {
                    result.update(disp::report::to_json(disp::exact_1d(pts)));
                } else if (pts.dim() == 2) {
                    result.update(disp::report::to_json(disp::exact_2d(pts)));
                } else {
                    result.update(disp::report::to_json(
                        disp::brute_force(pts, disp::BruteForceOptions{cp_budget})));
                }
            } else {
                disp::GridCoverConfig cc;
                cc.delta = cp_delta;
                cc.budget = cp_budget;
                if (cp_periodic)
                    result.update(disp::report::to_json(disp::certified_periodic(pts, cc)));
                else
                    result.update(disp::report::to_json(disp::certified(pts, cc)));
            }
            return emit(g, std::move(man), result, nullptr, t0);
        }

        if (*estimate) {
            es.method = es_method == "cover" ? disp::mc::Method::Cover : disp::mc::Method::Exact;
            es.threads = g.threads;
            auto rep = disp::mc::estimate_expected_dispersion(es);
            disp::report::Manifest man;
            man.subcommand = "estimate";
            man.seed = es.seed;
            man.config = disp::report::to_json(rep)["config"];
            return emit(g, std::move(man), disp::report::to_json(rep), &rep.checks, t0);
        }

        if (*boundscmd) {
            if (bd_n_opt->count() == 0 && bd_eps_opt->count() == 0)
                throw CLI::RequiredError("bounds: exactly one of --n or --eps");
            disp::report::Manifest man;
            man.subcommand = "bounds";
            man.config["d"] = bd_d;
            Json result;
            result["d"] = bd_d;
            if (bd_n_opt->count() > 0) {
                man.config["n"] = bd_n;
                result["n"] = bd_n;
                if (bd_n > bd_d) {
                    result["expectation"] =
                        disp::report::to_json(disp::bounds::expected_dispersion_bounds(bd_n, bd_d));
                } else {
                    result["expectation"] = nullptr;
                    result["note"] = "requires n > d";
                }
            } else {
                man.config["eps"] = bd_eps;
                result["eps"] = bd_eps;
                if (bd_eps > 0.0 && bd_eps < 1.0 / (9.0 * std::numbers::e)) {
                    result["inverse"] = disp::report::to_json(
                        disp::bounds::inverse_expected_dispersion_bounds(bd_eps, bd_d));
                } else {
                    result["inverse"] = nullptr;
                    result["inverse_note"] = "requires eps < 1/(9e)";
                }
                Json table = Json::array();
                for (const auto& e : disp::bounds::minimal_dispersion_table(bd_eps, bd_d))
                    table.push_back(disp::report::to_json(e));
                result["table"] = table;
            }
            return emit(g, std::move(man), result, nullptr, t0);
        }

        if (*coupon) {
            co.threads = g.threads;
            auto rep = disp::mc::simulate_coupon(co);
            disp::report::Manifest man;
            man.subcommand = "simulate coupon";
            man.seed = co.seed;
            man.config = disp::report::to_json(rep)["config"];
            return emit(g, std::move(man), disp::report::to_json(rep), &rep.checks, t0);
        }
        if (*anchored) {
            an.threads = g.threads;
            auto rep = disp::mc::simulate_anchored_box(an);
            disp::report::Manifest man;
            man.subcommand = "simulate anchored";
            man.seed = an.seed;
            man.config = disp::report::to_json(rep)["config"];
            return emit(g, std::move(man), disp::report::to_json(rep), &rep.checks, t0);
        }
        if (*gaps) {
            ga.threads = g.threads;
            auto rep = disp::mc::simulate_circle_gaps(ga);
            disp::report::Manifest man;
            man.subcommand = "simulate gaps";
            man.seed = ga.seed;
            man.config = disp::report::to_json(rep)["config"];
            return emit(g, std::move(man), disp::report::to_json(rep), &rep.checks, t0);
        }
        if (*split) {
            sp.threads = g.threads;
            auto rep = disp::mc::simulate_split_lower_bound(sp);
            disp::report::Manifest man;
            man.subcommand = "simulate split";
            man.seed = sp.seed;
            man.config = disp::report::to_json(rep)["config"];
            return emit(g, std::move(man), disp::report::to_json(rep), &rep.checks, t0);
        }

        if (*gen) {
            auto eng = disp::rng::make_engine(gen_seed);
            disp::PointSet pts = disp::mc::sample_uniform(eng, gen_n, gen_d);
            disp::write_pointset_csv_file(gen_out, pts);
            disp::report::Manifest man;
            man.subcommand = "gen";
            man.seed = gen_seed;
            man.config["n"] = gen_n;
            man.config["d"] = gen_d;
            man.config["out"] = gen_out;
            Json result;
            result["path"] = gen_out;
            result["n"] = gen_n;
            result["d"] = gen_d;
            return emit(g, std::move(man), result, nullptr, t0);
        }

        if (*inverse) {
            iv.method = iv_method == "cover" ? disp::mc::Method::Cover : disp::mc::Method::Exact;
            iv.threads = g.threads;
            auto rep = disp::mc::estimate_inverse(iv);
            disp::report::Manifest man;
            man.subcommand = "inverse";
            man.seed = iv.seed;
            man.config = disp::report::to_json(rep)["config"];
            return emit(g, std::move(man), disp::report::to_json(rep), &rep.checks, t0);
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
