// Command-line surface: compute invariants, run the verification campaign,
// benchmark the interval DP, and generate corpus diagrams.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "knotpoly/braid.hpp"
#include "knotpoly/closure.hpp"
#include "knotpoly/dp.hpp"
#include "knotpoly/errors.hpp"
#include "knotpoly/gauss.hpp"
#include "knotpoly/oracle.hpp"
#include "knotpoly/pd.hpp"
#include "knotpoly/serialize.hpp"
#include "knotpoly/skein.hpp"
#include "knotpoly/verify.hpp"

namespace {

using namespace knotpoly;

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInvariant = 4;
constexpr int kExitVerifyFailed = 5;

struct ComputeArgs {
    std::string format = "gauss";
    std::string invariant = "p-coeffs";
    int R = 0;
    int budget = 12;
    int trivial = 0;
    bool allow_virtual = false;
    std::string input;
};

Diagram load_diagram(const ComputeArgs& args) {
    if (args.trivial > 0) return trivial_link(args.trivial);
    if (args.input.empty()) throw usage_error("no input diagram given");
    if (args.format == "gauss") return parse_gauss(args.input);
    if (args.format == "pd") return parse_pd(args.input);
    if (args.format == "braid") {
        const BraidWord b = parse_braid(args.input);
        return braid_closure(b.letters, b.width);
    }
    throw usage_error("unknown format '" + args.format + "'");
}

int run_compute(const ComputeArgs& args) {
    const auto t0 = std::chrono::steady_clock::now();
    const Diagram d = load_diagram(args);
    if (d.realizable != Realizable::CheckedPlanar && !args.allow_virtual)
        std::cerr << "note: input realizability is unchecked; computed values carry no "
                     "invariance guarantee (pass --allow-virtual to silence)\n";

    Json report;
    report["input"] = Json{{"format", args.trivial > 0 ? "trivial-link" : args.format},
                           {"text", args.trivial > 0 ? std::to_string(args.trivial) : args.input},
                           {"realizability", realizability_name(d.realizable)}};
    report["invariant"] = args.invariant;
    report["n"] = d.crossing_count();
    report["com"] = d.component_count();
    const LinkingData lk = writhe_and_linking(d);
    report["writhe"] = lk.writhe;
    report["linking"] = lk.linking;
    report["invariance_guarantee"] = d.realizable == Realizable::CheckedPlanar;

    ResolutionBudget budget;
    budget.max_crossings = args.budget;

    if (args.invariant == "p-coeffs" || args.invariant == "p0" || args.invariant == "f0") {
        const int R = (args.invariant == "p-coeffs") ? args.R : 0;
        report["R"] = R;
        SkeinReducer reducer;
        const CoeffVector v = reducer.p_coeffs(d, R);
        report["coefficients"] = to_json(v);
        report["dp"] = Json{{"states_evaluated", reducer.dp_totals().states_evaluated},
                            {"skein_states", reducer.dp_totals().skein_states},
                            {"lk_queries", reducer.dp_totals().lk_queries}};
    } else if (args.invariant == "homflypt-oracle") {
        report["polynomial"] = to_json(homflypt_oracle(d, budget));
    } else if (args.invariant == "kauffman-oracle") {
        report["polynomial"] = to_json(kauffman_oracle(d, budget));
    } else {
        throw usage_error("unknown invariant '" + args.invariant + "'");
    }

    std::cout << report.dump(2) << "\n";
    const auto t1 = std::chrono::steady_clock::now();
    std::cerr << "wall_ms=" << std::chrono::duration<double, std::milli>(t1 - t0).count() << "\n";
    return 0;
}

int run_verify(const VerifyConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    const VerifyReport report = run_verification(cfg);

    Json out;
    out["seed"] = cfg.seed;
    out["count"] = cfg.count;
    out["max_crossings"] = cfg.max_crossings;
    out["max_width"] = cfg.max_width;
    Json checks = Json::object();
    std::uint64_t total = 0;
    for (const auto& [suite, n] : report.checks) {
        checks[suite] = n;
        total += n;
    }
    out["checks"] = checks;
    out["total_checks"] = total;
    Json failures = Json::array();
    for (const auto& f : report.failures)
        failures.push_back(Json{{"suite", f.suite}, {"gauss", f.gauss}, {"detail", f.detail}});
    out["failures"] = failures;
    out["failure_count"] = report.failures.size();

    std::cout << out.dump(2) << "\n";
    const auto t1 = std::chrono::steady_clock::now();
    std::cerr << "wall_ms=" << std::chrono::duration<double, std::milli>(t1 - t0).count() << "\n";
    return report.failures.empty() ? 0 : kExitVerifyFailed;
}

struct BenchArgs {
    std::string family = "torus";
    int max_crossings = 256;
    int max_width = 3;
    std::uint64_t seed = 7;
};

int run_bench(const BenchArgs& args) {
    std::cout << "n,family,states,lk_queries,wall_ms\n";
    for (int n = 4; n <= args.max_crossings; n *= 2) {
        Diagram knot;
        if (args.family == "torus") {
            knot = torus_braid(3, n / 2);  // gcd(3, n/2) = 1 for n a power of two
        } else if (args.family == "random") {
            const int width = std::max(2, args.max_width);
            std::uint64_t attempt = args.seed;
            do {
                knot = braid_closure(random_braid_word(width, n, attempt++), width);
            } while (knot.component_count() != 1);
        } else {
            throw usage_error("unknown family '" + args.family + "'");
        }
        if (knot.component_count() != 1) continue;
        const auto t0 = std::chrono::steady_clock::now();
        const KnotDpRun run = p0_knot_run(knot);
        const auto t1 = std::chrono::steady_clock::now();
        std::cout << knot.crossing_count() << "," << args.family << ","
                  << run.stats.states_evaluated << "," << run.stats.lk_queries << ","
                  << std::chrono::duration<double, std::milli>(t1 - t0).count() << "\n";
    }
    return 0;
}

struct GenerateArgs {
    std::string family = "random";
    std::string format = "gauss";
    int trivial = 0;
    int count = 10;
    int max_crossings = 8;
    int max_width = 4;
    std::uint64_t seed = 7;
};

int run_generate(const GenerateArgs& args) {
    auto emit = [&](const Diagram& d) {
        std::cout << (args.format == "pd" ? emit_pd(d) : emit_gauss(d)) << "\n";
    };
    if (args.trivial > 0) {
        emit(trivial_link(args.trivial));
        return 0;
    }
    if (args.family == "torus") {
        const int width = std::max(2, args.max_width);
        for (int len = 1; len <= args.count; ++len) {
            const Diagram d = torus_braid(width, len);
            if (d.crossing_count() > args.max_crossings) break;
            emit(d);
        }
        return 0;
    }
    if (args.family == "random") {
        std::mt19937_64 rng(args.seed);
        std::uniform_int_distribution<int> wd(2, std::max(2, args.max_width));
        for (int i = 0; i < args.count; ++i) {
            const int w = wd(rng);
            std::uniform_int_distribution<int> ld(1, std::max(1, args.max_crossings));
            emit(braid_closure(random_braid_word(w, ld(rng), rng()), w));
        }
        return 0;
    }
    throw usage_error("unknown family '" + args.family + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact HOMFLYPT coefficients and Kauffman F0 of link diagrams in polynomial "
                 "time, with exponential skein-tree oracles for validation"};
    app.require_subcommand(1);

    ComputeArgs compute_args;
    auto* compute = app.add_subcommand("compute", "compute an invariant of one diagram");
    compute->add_option("--format", compute_args.format, "input format: gauss|pd|braid")
        ->check(CLI::IsMember({"gauss", "pd", "braid"}));
    compute->add_option("--invariant", compute_args.invariant,
                        "p-coeffs|p0|f0|homflypt-oracle|kauffman-oracle")
        ->check(CLI::IsMember({"p-coeffs", "p0", "f0", "homflypt-oracle", "kauffman-oracle"}));
    compute->add_option("-R,--order", compute_args.R, "truncation order for p-coeffs")
        ->check(CLI::NonNegativeNumber);
    compute->add_option("--budget", compute_args.budget, "oracle crossing budget");
    compute->add_option("--trivial-link", compute_args.trivial, "use the k-component trivial link");
    compute->add_flag("--allow-virtual", compute_args.allow_virtual,
                      "accept unchecked gauss inputs quietly");
    compute->add_option("input", compute_args.input, "diagram text");

    VerifyConfig verify_cfg;
    auto* verify = app.add_subcommand("verify", "run the property campaign on a random corpus");
    verify->add_option("--seed", verify_cfg.seed, "corpus seed");
    verify->add_option("--count", verify_cfg.count, "corpus size")->check(CLI::PositiveNumber);
    verify->add_option("--max-crossings", verify_cfg.max_crossings, "max crossings per diagram")
        ->check(CLI::PositiveNumber);
    verify->add_option("--max-width", verify_cfg.max_width, "max braid width")
        ->check(CLI::Range(2, 16));
    int verify_budget = 12;
    verify->add_option("--budget", verify_budget, "oracle crossing budget");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "scaling runs of the quadratic first-coefficient DP");
    bench->add_option("--family", bench_args.family, "torus|random")
        ->check(CLI::IsMember({"torus", "random"}));
    bench->add_option("--max-crossings", bench_args.max_crossings, "largest diagram size")
        ->check(CLI::PositiveNumber);
    bench->add_option("--max-width", bench_args.max_width, "braid width for random family");
    bench->add_option("--seed", bench_args.seed, "seed for random family");

    GenerateArgs gen_args;
    auto* generate = app.add_subcommand("generate", "emit corpus diagrams");
    generate->add_option("--family", gen_args.family, "torus|random")
        ->check(CLI::IsMember({"torus", "random"}));
    generate->add_option("--format", gen_args.format, "gauss|pd")
        ->check(CLI::IsMember({"gauss", "pd"}));
    generate->add_option("--trivial-link", gen_args.trivial, "emit the k-component trivial link");
    generate->add_option("--count", gen_args.count, "number of diagrams");
    generate->add_option("--max-crossings", gen_args.max_crossings, "max crossings per diagram");
    generate->add_option("--max-width", gen_args.max_width, "max braid width");
    generate->add_option("--seed", gen_args.seed, "seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (compute->parsed()) return run_compute(compute_args);
        if (verify->parsed()) {
            verify_cfg.budget.max_crossings = verify_budget;
            return run_verify(verify_cfg);
        }
        if (bench->parsed()) return run_bench(bench_args);
        if (generate->parsed()) return run_generate(gen_args);
        return kExitUsage;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const invariant_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    }
}
